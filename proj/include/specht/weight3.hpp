#pragma once

#include <string>
#include <vector>

#include "specht/abacus.hpp"
#include "specht/partition.hpp"

namespace specht {

enum class CaseKind { Case1 = 1, Case2, Case3, Case4 };

// Shape of a weight-3 core's normalized abacus: three beads on runner 1 and
// at least three on every other runner, with per-runner counts
//   Case 1: all 3        Case 2: 4 on runners i..j-1
//   Case 3: 4 on runner i, 5 on i+1..j-1, 4 on j..k-1
//   Case 4: 5 on runners i..j-1, 4 on j..k-1
struct CaseDescriptor {
    CaseKind kind = CaseKind::Case1;
    int i = 0, j = 0, k = 0;

    auto operator<=>(const CaseDescriptor&) const = default;
    std::string to_string() const;
};

// Closed-form core for a descriptor.
Partition case_core(const CaseDescriptor& c, int p);

// The normalized display of the core (three beads on runner 1).
Abacus case_abacus(const CaseDescriptor& c, int p);

// Recover the descriptor from a core; throws not_minimal_core_error when the
// core has no normalized display (such blocks reduce via runner swaps first).
CaseDescriptor classify_core(const Partition& core, int p);

// Every descriptor for the prime, Case 1 first; 2*C(p+1,3)+1 in total.
std::vector<CaseDescriptor> weight3_census(int p);

// One angle-bracket symbol: ordered (runner, bead count) slots. The moved
// beads are the last ones on each runner; the first slot's last bead absorbs
// the slack so that the total downward displacement is three rows.
struct BeadMoveSpec {
    std::vector<std::pair<int, int>> slots;

    std::string to_string() const; // "<5^2,4>"
    static BeadMoveSpec parse(std::string_view text);
    auto operator<=>(const BeadMoveSpec&) const = default;
};

// The partition whose display applies the spec's moves to the core's
// normalized abacus.
Partition bracket_partition(const BlockId& block, const BeadMoveSpec& spec);

struct Exceptional {
    std::string label; // the bracket symbol
    BeadMoveSpec spec;
    Partition value;
};

// The rows of the block that no single-runner move reduces, in the stated
// dominance-chain order.
std::vector<Exceptional> exceptional_partitions(const CaseDescriptor& c, const BlockId& block);

// Fixture for the exceptional-row-by-exceptional-column submatrix in
// Cases 3 and 4.
std::vector<std::vector<int>> expected_matrix(CaseKind kind);

} // namespace specht
