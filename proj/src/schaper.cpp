#include "specht/schaper.hpp"

#include <algorithm>
#include <set>

#include "specht/abacus.hpp"

namespace specht {

namespace {

// Global sign of the hook-pair sum, pinned by the regression fixtures in
// tests/test_schaper.cpp. Flipping it negates every output.
constexpr long long kSchaperSign = -1;

int beads_between(const std::set<int>& occupied, int lo, int hi) {
    int count = 0;
    for (auto it = occupied.upper_bound(lo); it != occupied.end() && *it < hi; ++it)
        ++count;
    return count;
}

} // namespace

int padic_valuation(int n, int p) {
    int v = 0;
    while (n != 0 && n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

VirtualSum schaper_sum(const Partition& la, int p) {
    VirtualSum out(Basis::Specht);
    int b = canonical_bead_count(la, p);
    auto abacus = Abacus::from_partition(la, b, p);
    std::set<int> occupied(abacus.beads().begin(), abacus.beads().end());

    // only hook lengths divisible by p carry p-adic weight
    for (int m : abacus.beads()) {
        for (int h = p; m - h >= 1; h += p) {
            if (occupied.count(m - h))
                continue;
            long long weight = padic_valuation(h, p);
            int leg_out = beads_between(occupied, m - h, m);

            std::set<int> mid = occupied;
            mid.erase(m);
            mid.insert(m - h);
            for (int m2 : mid) {
                if (m2 == m - h || mid.count(m2 + h))
                    continue; // moving back yields la itself
                int leg_in = beads_between(mid, m2, m2 + h);
                std::set<int> final_beads = mid;
                final_beads.erase(m2);
                final_beads.insert(m2 + h);
                std::vector<int> beads(final_beads.begin(), final_beads.end());
                Partition nu = Abacus(p, std::move(beads)).to_partition();
                if (!strictly_dominates(nu, la))
                    continue;
                long long sign = ((leg_out + leg_in) % 2 == 0) ? 1 : -1;
                out.add(nu, kSchaperSign * weight * sign);
            }
        }
    }
    return out;
}

VirtualSum to_simple_basis(const VirtualSum& v, const DecompRows& rows) {
    if (v.basis() != Basis::Specht)
        throw error("to_simple_basis expects a Specht-basis sum");
    VirtualSum out(Basis::Simple);
    for (const auto& [nu, a] : v.terms()) {
        auto it = rows.find(nu);
        if (it == rows.end())
            throw missing_row_error("no decomposition row for " + nu.to_string());
        for (const auto& [mu, d] : it->second)
            out.add(mu, a * d);
    }
    return out;
}

Rule2Bound rule2_bounds(const Partition& la, const Partition& mu,
                        const VirtualSum& simple_sum) {
    if (simple_sum.basis() != Basis::Simple)
        throw error("rule2_bounds expects a simple-basis sum");
    long long m = simple_sum.coeff(mu);
    if (m < 0)
        throw inconsistent_error("negative multiplicity of D(" + mu.to_string() +
                                 ") in the sum for S(" + la.to_string() + ")");
    Rule2Bound bound;
    if (m <= 1) {
        bound.lo = bound.hi = static_cast<int>(m);
    } else {
        bound.lo = 1;
        bound.hi = static_cast<int>(m);
    }
    return bound;
}

} // namespace specht
