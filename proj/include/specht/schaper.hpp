#pragma once

#include <map>

#include "specht/partition.hpp"
#include "specht/virtual_sum.hpp"

namespace specht {

int padic_valuation(int n, int p);

// Hook-pair sum for S(la): for every removable rim hook R of length h with
// p | h and every rim hook R' of the same length addable to la minus R, the
// resulting nu (when it strictly dominates la) is accumulated with weight
// sign * v_p(h) * (-1)^(leg R + leg R'). All surviving terms lie in the block
// of la. The global sign is fixed once by the regression fixtures in
// tests/test_schaper.cpp.
VirtualSum schaper_sum(const Partition& la, int p);

using DecompRows = std::map<Partition, std::map<Partition, int>>;

// Substitute [S(nu)] = sum_mu d(nu,mu) [D(mu)]; every partition appearing in
// v must have a fully determined row or missing_row_error is thrown.
VirtualSum to_simple_basis(const VirtualSum& v, const DecompRows& rows);

struct Rule2Bound {
    int lo = 0;
    int hi = 0;
    bool exact() const { return lo == hi; }
};

// Multiplicity m of D(mu) in the rewritten sum bounds the decomposition
// number: exactly m when m <= 1, otherwise between 1 and m.
Rule2Bound rule2_bounds(const Partition& la, const Partition& mu,
                        const VirtualSum& simple_sum);

} // namespace specht
