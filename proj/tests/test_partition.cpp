#include <doctest.h>

#include <algorithm>
#include <set>

#include "specht/partition.hpp"

using namespace specht;

namespace {

Partition P(const char* text) { return Partition::parse(text); }

// column-count oracle for conjugation
Partition conjugate_brute(const Partition& la) {
    std::vector<int> cols;
    for (int j = 1; j <= la.part(1); ++j) {
        int c = 0;
        for (int i = 1; i <= la.rows(); ++i)
            if (la.part(i) >= j)
                ++c;
        if (c)
            cols.push_back(c);
    }
    return Partition(cols);
}

// contiguous rim windows whose removal leaves a partition
std::vector<std::set<std::pair<int, int>>> rim_hook_cells_brute(const Partition& la, int h) {
    std::vector<std::pair<int, int>> walk;
    if (!la.empty()) {
        int row = 1, col = la.part(1);
        while (col >= 1) {
            walk.emplace_back(row, col);
            if (row < la.rows() && la.part(row + 1) >= col)
                ++row;
            else
                --col;
        }
    }
    std::vector<std::set<std::pair<int, int>>> hooks;
    for (std::size_t start = 0; start + h <= walk.size(); ++start) {
        std::set<std::pair<int, int>> cells(walk.begin() + start, walk.begin() + start + h);
        std::vector<int> parts = la.parts();
        for (auto [r, c] : cells)
            parts[r - 1] = std::min(parts[r - 1], c - 1);
        bool ok = true;
        int total = 0;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i + 1 < parts.size() && parts[i] < parts[i + 1])
                ok = false;
            total += parts[i];
        }
        if (ok && total == la.n() - h)
            hooks.push_back(std::move(cells));
    }
    return hooks;
}

} // namespace

TEST_CASE("partition parsing and printing") {
    CHECK(P("8^2,4,1").parts() == std::vector<int>{8, 8, 4, 1});
    CHECK(P("").empty());
    CHECK(P("3,1").to_string() == "3,1");
    CHECK(P("8^2,4,1").to_string() == "8^2,4,1");
    CHECK(P("1,1").to_string() == "1^2");
    CHECK(P("0") == P(""));     // trailing zeros normalize away
    CHECK(P("3,1^0") == P("3"));
    CHECK_THROWS_AS(P("3,5"), parse_error);
    CHECK_THROWS_AS(P("3,0,1"), parse_error);
    CHECK_THROWS_AS(P("2,x"), parse_error);
    for (int n = 0; n <= 12; ++n)
        for (const auto& la : partitions_of(n))
            CHECK(Partition::parse(la.to_string()) == la);
}

TEST_CASE("conjugate") {
    CHECK(conjugate(P("3,1")) == P("2,1,1"));
    CHECK(conjugate(P("")) == P(""));
    CHECK(conjugate(P("4,4,1")) == P("3,2^3")); // brute-forced below as well
    CHECK(conjugate(P("4,4,1")) == conjugate_brute(P("4,4,1")));
    for (int n = 0; n <= 25; ++n)
        for (const auto& la : partitions_of(n)) {
            CHECK(conjugate(conjugate(la)) == la);
        }
}

TEST_CASE("dominance") {
    CHECK(dominates(P("4"), P("2,2")));
    CHECK(dominates(P("3,1"), P("3,1")));
    CHECK_FALSE(dominates(P("3,3"), P("4,1,1")));
    CHECK_THROWS_AS(dominates(P("3"), P("2")), unequal_size_error);

    for (int n = 1; n <= 12; ++n) {
        auto all = partitions_of(n);
        for (const auto& a : all) {
            CHECK(dominates(a, a));
            for (const auto& b : all) {
                if (dominates(a, b) && dominates(b, a))
                    CHECK(a == b);
                if (dominates(a, b))
                    CHECK(dominates(conjugate(b), conjugate(a)));
                for (const auto& c : all)
                    if (dominates(a, b) && dominates(b, c))
                        CHECK(dominates(a, c));
            }
        }
    }
}

TEST_CASE("listing order refines dominance") {
    for (int n = 1; n <= 10; ++n) {
        auto all = partitions_of(n);
        for (const auto& a : all)
            for (const auto& b : all)
                if (a != b && dominates(a, b))
                    CHECK(listed_before(a, b));
    }
}

TEST_CASE("p-regularity") {
    CHECK_FALSE(is_p_regular(P("2,2,2"), 3));
    CHECK(is_p_regular(P("2,2,2"), 5));
    CHECK_FALSE(is_p_regular(P("1,1"), 2));
    CHECK(is_p_regular(P(""), 2));
}

TEST_CASE("residues") {
    CHECK(residue({1, 1}, 5) == 0);
    CHECK(residue({2, 1}, 3) == 2);
    CHECK(residue({1, 4}, 3) == 0);
}

TEST_CASE("removable rim hooks") {
    auto whole = removable_rim_hooks(P("3,1"), 4);
    REQUIRE(whole.size() == 1);
    CHECK(whole[0].anchor == NodeCoord{1, 1});
    CHECK(whole[0].leg == 1);

    CHECK(removable_rim_hooks(P("1"), 2).empty());

    auto two = removable_rim_hooks(P("2,2"), 2);
    REQUIRE(two.size() == 2);
    CHECK(two[0].anchor == NodeCoord{1, 2});
    CHECK(two[0].leg == 1);
    CHECK(two[1].anchor == NodeCoord{2, 1});
    CHECK(two[1].leg == 0);
}

TEST_CASE("rim hooks against diagram windows") {
    for (int n = 1; n <= 14; ++n)
        for (const auto& la : partitions_of(n))
            for (int h = 1; h <= std::min(n, 8); ++h) {
                auto hooks = removable_rim_hooks(la, h);
                auto brute = rim_hook_cells_brute(la, h);
                REQUIRE(hooks.size() == brute.size());
                for (const auto& hook : hooks) {
                    int min_row = hook.anchor.row;
                    int max_row = hook.anchor.row + hook.leg;
                    bool found = false;
                    for (const auto& cells : brute) {
                        int lo = cells.begin()->first;
                        int hi = cells.rbegin()->first;
                        if (lo == min_row && hi == max_row) {
                            found = true;
                            break;
                        }
                    }
                    CHECK(found);
                    CHECK(remove_rim_hook(la, hook).n() == n - h);
                }
            }
}

TEST_CASE("single-box hooks are removable nodes") {
    for (int n = 1; n <= 15; ++n)
        for (const auto& la : partitions_of(n)) {
            int corners = 0;
            for (int i = 1; i <= la.rows(); ++i)
                if (la.part(i) > la.part(i + 1))
                    ++corners;
            CHECK(static_cast<int>(removable_rim_hooks(la, 1).size()) == corners);
        }
}

TEST_CASE("addable rim hooks") {
    auto onto_empty = addable_rim_hooks(P(""), 3);
    REQUIRE(onto_empty.size() == 3);
    std::set<std::pair<std::string, int>> got;
    for (const auto& [hook, nu] : onto_empty)
        got.emplace(nu.to_string(), hook.leg);
    CHECK(got == std::set<std::pair<std::string, int>>{{"3", 0}, {"2,1", 1}, {"1^3", 2}});

    auto onto_one = addable_rim_hooks(P("1"), 1);
    REQUIRE(onto_one.size() == 2);
    CHECK(onto_one[0].second == P("2"));
    CHECK(onto_one[1].second == P("1,1"));
}

TEST_CASE("wrap then unwrap round trip") {
    for (int n = 0; n <= 12; ++n)
        for (const auto& la : partitions_of(n))
            for (int h = 1; h <= 6; ++h)
                for (const auto& [hook, nu] : addable_rim_hooks(la, h)) {
                    CHECK(nu.n() == n + h);
                    CHECK(remove_rim_hook(nu, hook) == la);
                }
}
