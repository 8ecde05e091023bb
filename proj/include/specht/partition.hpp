#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "specht/error.hpp"

namespace specht {

// Weakly decreasing sequence of positive integers; trailing zeros are never
// stored, so the empty sequence is the unique partition of 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // Text form "8^2,4,1" <=> (8,8,4,1); "" is the empty partition.
    static Partition parse(std::string_view text);
    std::string to_string() const;

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // 1-based row access; rows past the end are 0.
    int part(int i) const {
        return (i >= 1 && i <= rows()) ? parts_[i - 1] : 0;
    }

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

// Row/column listing order for matrices: lexicographically larger first.
// Lexicographic descent refines dominance descent on partitions of fixed n.
inline bool listed_before(const Partition& a, const Partition& b) {
    return a.parts() > b.parts();
}

struct NodeCoord {
    int row = 1; // 1-based
    int col = 1;
    auto operator<=>(const NodeCoord&) const = default;
};

// (col - row) mod p, normalized to [0, p)
int residue(NodeCoord x, int p);

// mu dominates la: every prefix sum of mu >= that of la. Requires |mu| == |la|.
bool dominates(const Partition& mu, const Partition& la);

// Strict dominance without the equal-size precondition (false when sizes differ
// or mu == la); used where comparands come from hook surgery.
bool strictly_dominates(const Partition& mu, const Partition& la);

Partition conjugate(const Partition& la);

// No p of the non-zero parts are equal.
bool is_p_regular(const Partition& mu, int p);

struct RimHook {
    NodeCoord anchor; // corner node (a,b) of the hook inside the larger shape
    int length = 1;
    int leg = 0; // rows spanned minus 1
    auto operator<=>(const RimHook&) const = default;
};

// All rim hooks of la of length exactly h, top row first.
std::vector<RimHook> removable_rim_hooks(const Partition& la, int h);

// All ways to wrap a rim hook of length h onto la, with the enlarged partition.
std::vector<std::pair<RimHook, Partition>> addable_rim_hooks(const Partition& la, int h);

Partition remove_rim_hook(const Partition& la, const RimHook& hook);

// All partitions of n, lexicographically descending.
std::vector<Partition> partitions_of(int n);

} // namespace specht
