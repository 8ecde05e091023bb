#include <doctest.h>

#include <map>

#include "specht/abacus.hpp"
#include "specht/branching.hpp"

using namespace specht;

namespace {

Partition P(const char* text) { return Partition::parse(text); }

// literal between-counting form of the normal-node condition
std::vector<NodeCoord> normal_brute(const Partition& la, int r, int p) {
    auto sig = node_signature(la, r, p);
    std::vector<NodeCoord> normal;
    for (const auto& x : sig.removable) {
        bool ok = true;
        for (const auto& y : sig.addable) {
            if (y.row >= x.row)
                continue;
            int rem = 0, add = 0;
            for (const auto& z : sig.removable)
                if (z.row > y.row && z.row < x.row)
                    ++rem;
            for (const auto& z : sig.addable)
                if (z.row > y.row && z.row < x.row)
                    ++add;
            if (rem <= add)
                ok = false;
        }
        if (ok)
            normal.push_back(x);
    }
    return normal;
}

long long hook_product(const Partition& la) {
    long long prod = 1;
    auto conj = conjugate(la);
    for (int i = 1; i <= la.rows(); ++i)
        for (int j = 1; j <= la.part(i); ++j)
            prod *= (la.part(i) - j) + (conj.part(j) - i) + 1;
    return prod;
}

long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

} // namespace

TEST_CASE("node signatures") {
    auto sig = node_signature(P("3,2"), 0, 2);
    CHECK(sig.removable == std::vector<NodeCoord>{{1, 3}, {2, 2}});
    CHECK(sig.addable == std::vector<NodeCoord>{{3, 1}});
    CHECK(sig.normal == std::vector<NodeCoord>{{1, 3}, {2, 2}});

    for (int r = 0; r < 3; ++r) {
        auto empty = node_signature(P(""), r, 3);
        CHECK(empty.removable.empty());
        CHECK(empty.normal.empty());
        CHECK(empty.addable.size() == (residue({1, 1}, 3) == r ? 1u : 0u));
    }

    // the three removable nodes of (13,9,5) share residue 2 and are all normal
    auto alpha = node_signature(P("13,9,5"), 2, 5);
    CHECK(alpha.removable.size() == 3);
    CHECK(alpha.normal.size() == 3);
}

TEST_CASE("scan matches the between-counting definition") {
    for (int n = 0; n <= 14; ++n)
        for (const auto& la : partitions_of(n))
            for (int p : {2, 3, 5})
                for (int r = 0; r < p; ++r)
                    CHECK(node_signature(la, r, p).normal == normal_brute(la, r, p));
}

TEST_CASE("normal count bound") {
    for (int n = 0; n <= 13; ++n)
        for (const auto& mu : partitions_of(n))
            for (int p : {2, 3, 5})
                for (int r = 0; r < p; ++r) {
                    auto sig = node_signature(mu, r, p);
                    CHECK(static_cast<int>(sig.normal.size()) >=
                          static_cast<int>(sig.removable.size()) -
                              static_cast<int>(sig.addable.size()));
                }
}

TEST_CASE("removing all normal nodes keeps regularity") {
    for (int n = 1; n <= 13; ++n)
        for (const auto& mu : partitions_of(n))
            for (int p : {2, 3, 5}) {
                if (!is_p_regular(mu, p))
                    continue;
                for (int r = 0; r < p; ++r) {
                    auto sig = node_signature(mu, r, p);
                    if (!sig.normal.empty())
                        CHECK(is_p_regular(remove_nodes(mu, sig.normal), p));
                }
            }
}

TEST_CASE("prop 2.1 reduction") {
    // 12-bead display pair, runner 4 <-> residue 1
    auto red = prop21_reduce(P("17,6,4,3,2"), P("12,6,3,3,2,2,1,1,1,1"), 1, 2, 5);
    REQUIRE(red.kind == Reduction::Equal);
    CHECK(red.lambda_bar == P("16,6,3,3,2"));
    CHECK(red.mu_bar == P("11,6,3,3,2,2,1,1,1"));

    // lambda without removable 1-nodes, mu with two normal ones
    auto zero = prop21_reduce(P("3,1,1"), P("4,1"), 1, 1, 2);
    CHECK(zero.kind == Reduction::Zero);

    auto na = prop21_reduce(P("3,1,1"), P("5"), 0, 1, 2);
    CHECK(na.kind == Reduction::NotApplicable); // two removable 0-nodes vs k=1

    CHECK_THROWS_AS(prop21_reduce(P("3,1,1"), P("5"), 1, 1, 2), precondition_error);
}

TEST_CASE("rule 3 data") {
    auto [omega, mu_bar] = rule3_upper(P("3,1,1"), P("5"), 0, 2);
    CHECK(mu_bar == P("4"));
    CHECK(omega == std::vector<Partition>{P("2,1,1"), P("3,1")});

    // no removable nodes of the residue: empty omega, bound zero
    auto [none, bar2] = rule3_upper(P("4,1"), P("5"), 0, 2);
    CHECK(none.empty());
    CHECK(bar2 == P("4"));

    CHECK_THROWS_AS(rule3_upper(P("3,1"), P("4"), 0, 2), precondition_error);

    // weight never increases when all normal nodes are removed
    for (int n = 1; n <= 12; ++n)
        for (const auto& mu : partitions_of(n))
            for (int p : {2, 3})
                for (int r = 0; r < p; ++r) {
                    auto sig = node_signature(mu, r, p);
                    if (sig.normal.empty())
                        continue;
                    auto bar = remove_nodes(mu, sig.normal);
                    CHECK(p_weight(bar, p) <= p_weight(mu, p));
                }
}

TEST_CASE("restriction of Specht sums") {
    VirtualSum v(Basis::Specht);
    v.add(P("1"), 1);
    auto res = restrict_specht(v, 0, 3);
    CHECK(res.coeff(P("")) == 1);

    VirtualSum w(Basis::Specht);
    w.add(P("2,1"), 1);
    CHECK(restrict_specht(w, 0, 3).empty()); // nodes (1,2),(2,1) have residues 1,2

    VirtualSum combo(Basis::Specht);
    combo.add(P("2,1"), 3);
    combo.add(P("1"), -2);
    auto lhs = restrict_specht(combo, 1, 3);
    VirtualSum rhs = restrict_specht(w, 1, 3);
    rhs *= 3;
    VirtualSum only1(Basis::Specht);
    only1.add(P("1"), -2);
    rhs += restrict_specht(only1, 1, 3);
    CHECK(lhs == rhs);
}

TEST_CASE("full restriction counts standard paths") {
    for (int n = 1; n <= 8; ++n)
        for (const auto& la : partitions_of(n))
            for (int p : {2, 3, 5}) {
                VirtualSum v(Basis::Specht);
                v.add(la, 1);
                for (int step = 0; step < n; ++step) {
                    VirtualSum next(Basis::Specht);
                    for (int r = 0; r < p; ++r)
                        next += restrict_specht(v, r, p);
                    v = next;
                }
                CHECK(v.coeff(P("")) == factorial(n) / hook_product(la));
            }
}

TEST_CASE("kleshchev sequence text form") {
    KleshchevSequence seq{{4, 2}, {3, 2}, {0, 1}};
    CHECK(sequence_to_string(seq) == "4^2 3^2 0");
    CHECK(parse_sequence("4^2 3^2 0") == seq);
    CHECK(parse_sequence("") == KleshchevSequence{});
}
