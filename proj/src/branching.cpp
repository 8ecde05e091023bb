#include "specht/branching.hpp"

#include <algorithm>

namespace specht {

NodeSignature node_signature(const Partition& la, int r, int p) {
    if (r < 0 || r >= p)
        throw error("residue out of range");
    NodeSignature sig;
    sig.r = r;
    // at most one removable or addable node of a fixed residue per row
    int open_addables = 0;
    for (int i = 1; i <= la.rows() + 1; ++i) {
        bool addable = (i == 1 || la.part(i - 1) > la.part(i));
        if (addable && residue({i, la.part(i) + 1}, p) == r) {
            sig.addable.push_back({i, la.part(i) + 1});
            ++open_addables;
        }
        bool removable = i <= la.rows() && la.part(i) > la.part(i + 1);
        if (removable && residue({i, la.part(i)}, p) == r) {
            sig.removable.push_back({i, la.part(i)});
            if (open_addables > 0)
                --open_addables; // cancelled by an addable node above
            else
                sig.normal.push_back({i, la.part(i)});
        }
    }
    return sig;
}

Partition remove_nodes(const Partition& la, const std::vector<NodeCoord>& nodes) {
    auto parts = la.parts();
    for (const auto& node : nodes) {
        if (node.row < 1 || node.row > la.rows() || parts[node.row - 1] != node.col ||
            la.part(node.row) != node.col)
            throw error("node is not removable");
        --parts[node.row - 1];
    }
    return Partition(std::move(parts));
}

Reduction prop21_reduce(const Partition& la, const Partition& mu, int r, int k, int p) {
    if (k < 1)
        throw precondition_error("need k >= 1");
    auto mu_sig = node_signature(mu, r, p);
    if (static_cast<int>(mu_sig.normal.size()) < k)
        throw precondition_error("mu has fewer than k normal r-nodes");
    auto la_sig = node_signature(la, r, p);
    int removable = static_cast<int>(la_sig.removable.size());
    Reduction red;
    if (removable < k) {
        red.kind = Reduction::Zero;
        return red;
    }
    if (removable > k)
        return red;
    red.kind = Reduction::Equal;
    red.lambda_bar = remove_nodes(la, la_sig.removable);
    std::vector<NodeCoord> lowest(mu_sig.normal.end() - k, mu_sig.normal.end());
    red.mu_bar = remove_nodes(mu, lowest);
    return red;
}

std::pair<std::vector<Partition>, Partition> rule3_upper(const Partition& la,
                                                         const Partition& mu,
                                                         int r, int p) {
    auto mu_sig = node_signature(mu, r, p);
    int k = static_cast<int>(mu_sig.normal.size());
    if (k == 0)
        throw precondition_error("mu has no normal r-nodes");
    Partition mu_bar = remove_nodes(mu, mu_sig.normal);
    auto la_sig = node_signature(la, r, p);
    std::vector<Partition> omega;
    int m = static_cast<int>(la_sig.removable.size());
    if (m >= k) {
        std::vector<int> pick(k);
        // all k-subsets of la's removable r-nodes
        auto emit = [&](auto&& self, int next, int depth) -> void {
            if (depth == k) {
                std::vector<NodeCoord> chosen;
                for (int idx : pick)
                    chosen.push_back(la_sig.removable[idx]);
                omega.push_back(remove_nodes(la, chosen));
                return;
            }
            for (int i = next; i <= m - (k - depth); ++i) {
                pick[depth] = i;
                self(self, i + 1, depth + 1);
            }
        };
        emit(emit, 0, 0);
        std::sort(omega.begin(), omega.end());
        omega.erase(std::unique(omega.begin(), omega.end()), omega.end());
    }
    return {omega, mu_bar};
}

VirtualSum restrict_specht(const VirtualSum& v, int r, int p) {
    if (v.basis() != Basis::Specht)
        throw error("restriction acts on the Specht basis");
    VirtualSum out(Basis::Specht);
    for (const auto& [nu, c] : v.terms()) {
        auto sig = node_signature(nu, r, p);
        for (const auto& node : sig.removable)
            out.add(remove_nodes(nu, {node}), c);
    }
    return out;
}

std::string sequence_to_string(const KleshchevSequence& seq) {
    std::string out;
    for (const auto& [r, k] : seq) {
        if (!out.empty())
            out += ' ';
        out += std::to_string(r);
        if (k != 1) {
            out += '^';
            out += std::to_string(k);
        }
    }
    return out;
}

KleshchevSequence parse_sequence(std::string_view text) {
    KleshchevSequence seq;
    std::size_t pos = 0;
    auto read_int = [&]() -> int {
        std::size_t start = pos;
        int v = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9')
            v = v * 10 + (text[pos++] - '0');
        if (pos == start)
            throw parse_error("expected integer in Kleshchev sequence");
        return v;
    };
    while (pos < text.size()) {
        while (pos < text.size() && text[pos] == ' ')
            ++pos;
        if (pos >= text.size())
            break;
        int r = read_int();
        int k = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            k = read_int();
        }
        seq.emplace_back(r, k);
    }
    return seq;
}

} // namespace specht
