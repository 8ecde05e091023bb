#include "specht/abacus.hpp"

#include <algorithm>
#include <map>

namespace specht {

Abacus::Abacus(int p, std::vector<int> beads) : p_(p), beads_(std::move(beads)) {
    if (p_ < 2)
        throw error("abacus needs at least two runners");
    std::sort(beads_.begin(), beads_.end());
    for (std::size_t i = 0; i < beads_.size(); ++i) {
        if (beads_[i] < 1)
            throw error("bead positions start at 1");
        if (i > 0 && beads_[i] == beads_[i - 1])
            throw error("bead positions must be distinct");
    }
}

Abacus Abacus::from_partition(const Partition& la, int b, int p) {
    if (b < la.rows())
        throw too_few_beads_error("need at least " + std::to_string(la.rows()) +
                                  " beads for " + la.to_string());
    std::vector<int> beads(b);
    for (int i = 1; i <= b; ++i)
        beads[i - 1] = la.part(i) + b - i + 1;
    return Abacus(p, std::move(beads));
}

Partition Abacus::to_partition() const {
    int b = bead_count();
    std::vector<int> parts(b);
    for (int i = 1; i <= b; ++i)
        parts[i - 1] = beads_[b - i] - (b - i + 1);
    return Partition(std::move(parts));
}

bool Abacus::occupied(int pos) const {
    return std::binary_search(beads_.begin(), beads_.end(), pos);
}

Abacus Abacus::with_bead_moved(int from, int to) const {
    if (!occupied(from) || occupied(to) || to < 1)
        throw error("invalid bead move " + std::to_string(from) + " -> " + std::to_string(to));
    auto beads = beads_;
    *std::find(beads.begin(), beads.end(), from) = to;
    return Abacus(p_, std::move(beads));
}

std::string Abacus::render(int min_rows) const {
    int rows = min_rows;
    for (int pos : beads_)
        rows = std::max(rows, row_of(pos));
    rows = std::max(rows, 1);
    std::string out;
    for (int row = 1; row <= rows; ++row) {
        for (int r = 1; r <= p_; ++r)
            out += occupied((row - 1) * p_ + r) ? 'O' : '.';
        out += '\n';
    }
    return out;
}

std::string BlockId::to_string() const {
    return "p=" + std::to_string(p) + " core=(" + core.to_string() +
           ") w=" + std::to_string(weight);
}

int canonical_bead_count(const Partition& la, int p) {
    int b = std::max(la.rows(), 1);
    return (b + p - 1) / p * p;
}

int block_bead_count(const BlockId& block) {
    int b = std::max(block.n(), 1);
    return (b + block.p - 1) / block.p * block.p;
}

Partition p_core(const Partition& la, int p) {
    auto a = Abacus::from_partition(la, canonical_bead_count(la, p), p);
    // slide every bead as high as possible on its runner
    std::vector<int> per_runner(p, 0);
    for (int pos : a.beads())
        ++per_runner[a.runner_of(pos) - 1];
    std::vector<int> beads;
    for (int r = 1; r <= p; ++r)
        for (int row = 1; row <= per_runner[r - 1]; ++row)
            beads.push_back((row - 1) * p + r);
    return Abacus(p, std::move(beads)).to_partition();
}

int p_weight(const Partition& la, int p) {
    return (la.n() - p_core(la, p).n()) / p;
}

BlockId block_id(const Partition& la, int p) {
    BlockId b;
    b.p = p;
    b.core = p_core(la, p);
    b.weight = (la.n() - b.core.n()) / p;
    return b;
}

std::pair<std::vector<int>, std::vector<int>> movable_beads(const Abacus& a, int r) {
    if (r < 1 || r > a.p())
        throw bad_runner_error("runner " + std::to_string(r) + " out of range");
    std::vector<int> left, right;
    for (int pos : a.beads()) {
        if (a.runner_of(pos) == r && pos - 1 >= 1 && !a.occupied(pos - 1))
            left.push_back(pos);
    }
    int prev = (r == 1) ? a.p() : r - 1;
    for (int pos : a.beads()) {
        if (a.runner_of(pos) == prev && !a.occupied(pos + 1))
            right.push_back(pos);
    }
    return {left, right};
}

Abacus runner_swap(const Abacus& a, int r) {
    if (r < 2 || r > a.p())
        throw bad_runner_error("runner_swap needs 2 <= r <= p");
    std::vector<int> beads;
    for (int pos : a.beads()) {
        int runner = a.runner_of(pos);
        if (runner == r)
            beads.push_back(pos - 1);
        else if (runner == r - 1)
            beads.push_back(pos + 1);
        else
            beads.push_back(pos);
    }
    return Abacus(a.p(), std::move(beads));
}

Abacus insert_empty_runners(const Abacus& a, const std::vector<int>& slots) {
    for (int s : slots)
        if (s < 0 || s > a.p())
            throw bad_slot_error("slot " + std::to_string(s) + " out of range");
    int pp = a.p() + static_cast<int>(slots.size());
    std::vector<int> beads;
    for (int pos : a.beads()) {
        int runner = a.runner_of(pos);
        int shift = 0;
        for (int s : slots)
            if (s < runner)
                ++shift;
        beads.push_back((a.row_of(pos) - 1) * pp + runner + shift);
    }
    return Abacus(pp, std::move(beads));
}

} // namespace specht
