#include "specht/weight3.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace specht {

std::string CaseDescriptor::to_string() const {
    std::string out = "case " + std::to_string(static_cast<int>(kind));
    switch (kind) {
    case CaseKind::Case1:
        break;
    case CaseKind::Case2:
        out += " (i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")";
        break;
    default:
        out += " (i,j,k)=(" + std::to_string(i) + "," + std::to_string(j) + "," +
               std::to_string(k) + ")";
    }
    return out;
}

namespace {

std::vector<int> runner_counts(const CaseDescriptor& c, int p) {
    std::vector<int> counts(p, 3);
    auto fill = [&](int from, int to, int value) {
        for (int r = from; r <= std::min(to, p); ++r)
            counts[r - 1] = value;
    };
    switch (c.kind) {
    case CaseKind::Case1:
        break;
    case CaseKind::Case2:
        fill(c.i, c.j - 1, 4);
        break;
    case CaseKind::Case3:
        fill(c.i, c.i, 4);
        fill(c.i + 1, c.j - 1, 5);
        fill(c.j, c.k - 1, 4);
        break;
    case CaseKind::Case4:
        fill(c.i, c.j - 1, 5);
        fill(c.j, c.k - 1, 4);
        break;
    }
    return counts;
}

Abacus abacus_from_counts(const std::vector<int>& counts, int p) {
    std::vector<int> beads;
    for (int r = 1; r <= p; ++r)
        for (int row = 1; row <= counts[r - 1]; ++row)
            beads.push_back((row - 1) * p + r);
    return Abacus(p, std::move(beads));
}

void validate(const CaseDescriptor& c, int p) {
    bool ok = true;
    switch (c.kind) {
    case CaseKind::Case1:
        break;
    case CaseKind::Case2:
        ok = 1 < c.i && c.i < c.j && c.j <= p + 1;
        break;
    case CaseKind::Case3:
        ok = 2 < c.i + 1 && c.i + 1 < c.j && c.j <= c.k && c.k <= p + 1;
        break;
    case CaseKind::Case4:
        ok = 1 < c.i && c.i < c.j && c.j <= c.k && c.k <= p + 1;
        break;
    }
    if (!ok)
        throw error("invalid case parameters: " + c.to_string());
}

} // namespace

Abacus case_abacus(const CaseDescriptor& c, int p) {
    validate(c, p);
    return abacus_from_counts(runner_counts(c, p), p);
}

Partition case_core(const CaseDescriptor& c, int p) {
    return case_abacus(c, p).to_partition();
}

CaseDescriptor classify_core(const Partition& core, int p) {
    if (p_core(core, p) != core)
        throw not_minimal_core_error(core.to_string() + " is not a " +
                                     std::to_string(p) + "-core");
    for (int b = std::max(core.rows(), 1); b <= 6 * p; ++b) {
        auto a = Abacus::from_partition(core, b, p);
        std::vector<int> counts(p, 0);
        for (int pos : a.beads())
            ++counts[a.runner_of(pos) - 1];
        if (counts[0] != 3 ||
            *std::min_element(counts.begin(), counts.end()) < 3 ||
            *std::max_element(counts.begin(), counts.end()) > 5)
            continue;
        // counts must read 3..3 [4] 5..5 4..4 3..3 for one of the four shapes
        CaseDescriptor c;
        int r = 1;
        while (r <= p && counts[r - 1] == 3)
            ++r;
        if (r > p) {
            c.kind = CaseKind::Case1;
            return c;
        }
        c.i = r;
        if (counts[r - 1] == 4 && (r == p || counts[r] != 5)) {
            c.kind = CaseKind::Case2;
            while (r <= p && counts[r - 1] == 4)
                ++r;
            c.j = r;
        } else {
            c.kind = counts[r - 1] == 4 ? CaseKind::Case3 : CaseKind::Case4;
            if (c.kind == CaseKind::Case3)
                ++r;
            while (r <= p && counts[r - 1] == 5)
                ++r;
            c.j = r;
            while (r <= p && counts[r - 1] == 4)
                ++r;
            c.k = r;
        }
        while (r <= p) {
            if (counts[r - 1] != 3)
                throw not_minimal_core_error("core " + core.to_string() +
                                             " has no normalized display");
            ++r;
        }
        validate(c, p);
        if (case_core(c, p) != core)
            throw not_minimal_core_error("core " + core.to_string() +
                                         " disagrees with its case shape");
        return c;
    }
    throw not_minimal_core_error("core " + core.to_string() + " has no display with "
                                 "three beads on runner 1");
}

std::vector<CaseDescriptor> weight3_census(int p) {
    std::vector<CaseDescriptor> out;
    out.push_back({CaseKind::Case1, 0, 0, 0});
    for (int i = 2; i <= p; ++i)
        for (int j = i + 1; j <= p + 1; ++j)
            out.push_back({CaseKind::Case2, i, j, 0});
    for (int i = 2; i <= p; ++i)
        for (int j = i + 2; j <= p + 1; ++j)
            for (int k = j; k <= p + 1; ++k)
                out.push_back({CaseKind::Case3, i, j, k});
    for (int i = 2; i <= p; ++i)
        for (int j = i + 1; j <= p + 1; ++j)
            for (int k = j; k <= p + 1; ++k)
                out.push_back({CaseKind::Case4, i, j, k});
    return out;
}

std::string BeadMoveSpec::to_string() const {
    std::string out = "<";
    for (std::size_t t = 0; t < slots.size(); ++t) {
        if (t)
            out += ',';
        out += std::to_string(slots[t].first);
        if (slots[t].second > 1) {
            out += '^';
            out += std::to_string(slots[t].second);
        }
    }
    return out + ">";
}

BeadMoveSpec BeadMoveSpec::parse(std::string_view text) {
    if (text.size() < 2 || text.front() != '<' || text.back() != '>')
        throw parse_error("bracket symbol must look like <r^2,s>");
    BeadMoveSpec spec;
    std::string_view inner = text.substr(1, text.size() - 2);
    std::size_t pos = 0;
    auto read_int = [&]() -> int {
        int v = 0;
        bool any = false;
        while (pos < inner.size() && inner[pos] >= '0' && inner[pos] <= '9') {
            v = v * 10 + (inner[pos++] - '0');
            any = true;
        }
        if (!any)
            throw parse_error("bad integer in bracket symbol");
        return v;
    };
    while (pos < inner.size()) {
        int runner = read_int();
        int count = 1;
        if (pos < inner.size() && inner[pos] == '^') {
            ++pos;
            count = read_int();
        }
        spec.slots.emplace_back(runner, count);
        if (pos < inner.size()) {
            if (inner[pos] != ',')
                throw parse_error("bad separator in bracket symbol");
            ++pos;
        }
    }
    return spec;
}

Partition bracket_partition(const BlockId& block, const BeadMoveSpec& spec) {
    auto c = classify_core(block.core, block.p);
    auto abacus = case_abacus(c, block.p);
    int total = 0;
    std::set<int> seen;
    for (auto [runner, count] : spec.slots) {
        if (runner < 1 || runner > block.p || count < 1 || !seen.insert(runner).second)
            throw bad_spec_error("bad bracket symbol " + spec.to_string());
        total += count;
    }
    if (total < 1 || total > 3)
        throw bad_spec_error("bracket symbol must move 1..3 beads");

    int slack = 3 - total;
    std::vector<std::pair<int, int>> moves; // (position, rows down)
    for (std::size_t t = 0; t < spec.slots.size(); ++t) {
        auto [runner, count] = spec.slots[t];
        std::vector<int> on_runner;
        for (int pos : abacus.beads())
            if (abacus.runner_of(pos) == runner)
                on_runner.push_back(pos);
        if (static_cast<int>(on_runner.size()) < count)
            throw bad_spec_error("runner " + std::to_string(runner) + " has too few beads");
        std::sort(on_runner.rbegin(), on_runner.rend());
        for (int m = 0; m < count; ++m) {
            int down = (t == 0 && m == 0) ? slack + 1 : 1;
            moves.emplace_back(on_runner[m], down);
        }
    }

    std::set<int> beads(abacus.beads().begin(), abacus.beads().end());
    for (auto [pos, down] : moves)
        beads.erase(pos);
    for (auto [pos, down] : moves) {
        int target = pos + down * block.p;
        if (!beads.insert(target).second)
            throw bad_spec_error("bead collision in " + spec.to_string());
    }
    return Abacus(block.p, std::vector<int>(beads.begin(), beads.end())).to_partition();
}

std::vector<Exceptional> exceptional_partitions(const CaseDescriptor& c, const BlockId& block) {
    if (c.kind == CaseKind::Case1)
        throw case1_error("the empty-core block reduces one node at a time");
    if (case_core(c, block.p) != block.core)
        throw error("descriptor does not match the block core");

    std::vector<BeadMoveSpec> specs;
    const int i = c.i;
    switch (c.kind) {
    case CaseKind::Case2: {
        specs.push_back({{{i, 2}}});             // <i^2>
        specs.push_back({{{i, 1}, {i - 1, 1}}}); // <i,i-1>
        specs.push_back({{{i - 1, 1}}});         // <i-1>
        std::vector<int> u_order;
        for (int u = c.j - 1; u >= i + 1; --u)
            u_order.push_back(u);
        for (int u = block.p; u >= c.j; --u)
            u_order.push_back(u);
        for (int u = i - 2; u >= 1; --u)
            u_order.push_back(u);
        for (int u : u_order) {
            specs.push_back({{{i, 2}, {u, 1}}});             // <i^2,u>
            specs.push_back({{{i - 1, 1}, {i, 1}, {u, 1}}}); // <i-1,i,u>
            specs.push_back({{{i - 1, 1}, {u, 1}}});         // <i-1,u>
        }
        specs.push_back({{{i, 3}}});             // <i^3>
        specs.push_back({{{i - 1, 2}, {i, 1}}}); // <(i-1)^2,i>
        specs.push_back({{{i - 1, 2}}});         // <(i-1)^2>
        break;
    }
    case CaseKind::Case3:
        specs.push_back({{{i, 2}, {i + 1, 1}}});
        specs.push_back({{{i - 1, 1}, {i, 1}, {i + 1, 1}}});
        specs.push_back({{{i, 2}}});
        specs.push_back({{{i, 1}, {i - 1, 1}}});
        break;
    case CaseKind::Case4:
        specs.push_back({{{i, 3}}});
        specs.push_back({{{i, 2}, {i - 1, 1}}});
        specs.push_back({{{i - 1, 1}, {i, 1}}});
        specs.push_back({{{i - 1, 1}}});
        break;
    default:
        break;
    }

    std::vector<Exceptional> out;
    for (const auto& spec : specs)
        out.push_back({spec.to_string(), spec, bracket_partition(block, spec)});
    return out;
}

std::vector<std::vector<int>> expected_matrix(CaseKind kind) {
    if (kind == CaseKind::Case3)
        return {{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 0, 1, 0}, {1, 1, 1, 1}};
    if (kind == CaseKind::Case4)
        return {{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 1, 1, 0}, {1, 1, 1, 1}};
    throw error("fixture matrices exist for cases 3 and 4 only");
}

} // namespace specht
