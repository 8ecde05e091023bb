#pragma once

#include <utility>
#include <vector>

#include "specht/partition.hpp"
#include "specht/virtual_sum.hpp"

namespace specht {

// Removable/addable/normal r-nodes of a partition, rows top to bottom.
// A removable r-node is normal when, for every addable r-node in an earlier
// row, strictly more removable than addable r-nodes lie strictly between.
struct NodeSignature {
    int r = 0;
    std::vector<NodeCoord> removable;
    std::vector<NodeCoord> addable;
    std::vector<NodeCoord> normal;
};

NodeSignature node_signature(const Partition& la, int r, int p);

// Remove one node per listed row (each must be removable); rows distinct.
Partition remove_nodes(const Partition& la, const std::vector<NodeCoord>& nodes);

struct Reduction {
    enum Kind { Zero, Equal, NotApplicable };
    Kind kind = NotApplicable;
    Partition lambda_bar;
    Partition mu_bar;
};

// [S(la):D(mu)] with mu having >= k normal r-nodes: 0 when la has fewer than
// k removable r-nodes; equal to the reduced entry when it has exactly k.
Reduction prop21_reduce(const Partition& la, const Partition& mu, int r, int k, int p);

// All-normal-node removal step: mu_bar drops every normal r-node of mu, and
// Omega collects the partitions reachable from la by removing that many
// removable r-nodes. Contract: [S(la):D(mu)] <= sum over Omega of
// [S(omega):D(mu_bar)], zero when Omega is empty.
std::pair<std::vector<Partition>, Partition> rule3_upper(const Partition& la,
                                                         const Partition& mu,
                                                         int r, int p);

// Linear extension of S(nu) -> sum of S(nu minus A) over removable r-nodes A.
VirtualSum restrict_specht(const VirtualSum& v, int r, int p);

// Kleshchev sequences: (residue, count) pairs, serialized "r1^k1 r2^k2 ...".
using KleshchevSequence = std::vector<std::pair<int, int>>;
std::string sequence_to_string(const KleshchevSequence& seq);
KleshchevSequence parse_sequence(std::string_view text);

} // namespace specht
