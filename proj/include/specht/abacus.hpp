#pragma once

#include <string>
#include <utility>
#include <vector>

#include "specht/partition.hpp"

namespace specht {

// p runners, bead positions labelled 1,2,3,... reading left to right and then
// top to bottom. Position m sits on runner ((m-1) mod p)+1 in row ceil(m/p).
class Abacus {
public:
    Abacus(int p, std::vector<int> beads);

    // Beads at positions {la_i + b - i + 1 : 1 <= i <= b}.
    static Abacus from_partition(const Partition& la, int b, int p);

    Partition to_partition() const;

    int p() const { return p_; }
    int bead_count() const { return static_cast<int>(beads_.size()); }
    const std::vector<int>& beads() const { return beads_; }

    int runner_of(int pos) const { return (pos - 1) % p_ + 1; }
    int row_of(int pos) const { return (pos - 1) / p_ + 1; }
    bool occupied(int pos) const;

    Abacus with_bead_moved(int from, int to) const;

    // One line per row, "O" for a bead and "." for a gap.
    std::string render(int min_rows = 0) const;

    auto operator<=>(const Abacus&) const = default;

private:
    int p_;
    std::vector<int> beads_; // ascending, distinct, >= 1
};

// (prime, p-core, weight); partitions share a block iff they share a BlockId.
struct BlockId {
    int p = 2;
    Partition core;
    int weight = 0;

    int n() const { return core.n() + p * weight; }
    auto operator<=>(const BlockId&) const = default;
    std::string to_string() const;
};

Partition p_core(const Partition& la, int p);
int p_weight(const Partition& la, int p);
BlockId block_id(const Partition& la, int p);

// Smallest bead count b == 0 (mod p) that can display la (at least p).
int canonical_bead_count(const Partition& la, int p);

// Shared display size for a whole block: smallest multiple of p covering
// |core| + p*weight, so every runner carries at least `weight` beads.
int block_bead_count(const BlockId& block);

// Beads on runner r that can move one space left (position-1 free; for r=1
// this crosses to runner p of the previous row), and beads on the runner to
// the left of r (runner p when r=1) that can move one space right.
std::pair<std::vector<int>, std::vector<int>> movable_beads(const Abacus& a, int r);

// Exchange the occupancy patterns of runners r-1 and r row by row.
Abacus runner_swap(const Abacus& a, int r);

// Interleave empty runners; each slot s in [0, p] inserts a new runner after
// runner s (s = 0 means before runner 1). Bead (row, runner) pairs are kept.
Abacus insert_empty_runners(const Abacus& a, const std::vector<int>& slots);

} // namespace specht
