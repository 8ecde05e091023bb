#include "specht/partition.hpp"

#include <algorithm>
#include <set>

namespace specht {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw error("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw error("partition parts must be weakly decreasing");
        n_ += parts_[i];
    }
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    auto read_int = [&]() -> int {
        std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9')
            ++pos;
        if (pos == start)
            throw parse_error("expected integer in partition \"" + std::string(text) + "\"");
        int v = 0;
        for (std::size_t i = start; i < pos; ++i)
            v = v * 10 + (text[i] - '0');
        return v;
    };
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t'))
        ++pos;
    while (pos < text.size()) {
        int part = read_int();
        int mult = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            mult = read_int();
        }
        for (int k = 0; k < mult; ++k)
            parts.push_back(part);
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t'))
            ++pos;
        if (pos < text.size()) {
            if (text[pos] != ',')
                throw parse_error("unexpected character in partition \"" + std::string(text) + "\"");
            ++pos;
            while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t'))
                ++pos;
        }
    }
    try {
        return Partition(std::move(parts));
    } catch (const error& e) {
        throw parse_error(std::string(e.what()) + " in \"" + std::string(text) + "\"");
    }
}

std::string Partition::to_string() const {
    std::string out;
    std::size_t i = 0;
    while (i < parts_.size()) {
        std::size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i])
            ++j;
        if (!out.empty())
            out += ',';
        out += std::to_string(parts_[i]);
        if (j - i > 1) {
            out += '^';
            out += std::to_string(j - i);
        }
        i = j;
    }
    return out;
}

int residue(NodeCoord x, int p) {
    int r = (x.col - x.row) % p;
    return r < 0 ? r + p : r;
}

bool dominates(const Partition& mu, const Partition& la) {
    if (mu.n() != la.n())
        throw unequal_size_error("dominates: |mu| = " + std::to_string(mu.n()) +
                                 " but |lambda| = " + std::to_string(la.n()));
    long long pm = 0, pl = 0;
    int rows = std::max(mu.rows(), la.rows());
    for (int i = 1; i <= rows; ++i) {
        pm += mu.part(i);
        pl += la.part(i);
        if (pm < pl)
            return false;
    }
    return true;
}

bool strictly_dominates(const Partition& mu, const Partition& la) {
    return mu.n() == la.n() && mu != la && dominates(mu, la);
}

Partition conjugate(const Partition& la) {
    std::vector<int> cols;
    if (!la.empty()) {
        cols.resize(la.part(1));
        for (int j = 1; j <= la.part(1); ++j) {
            int count = 0;
            for (int i = 1; i <= la.rows(); ++i)
                if (la.part(i) >= j)
                    ++count;
            cols[j - 1] = count;
        }
    }
    return Partition(std::move(cols));
}

bool is_p_regular(const Partition& mu, int p) {
    int run = 0;
    for (int i = 1; i <= mu.rows(); ++i) {
        run = (i > 1 && mu.part(i) == mu.part(i - 1)) ? run + 1 : 1;
        if (run >= p)
            return false;
    }
    return true;
}

namespace {

// First-column hook lengths ("beta numbers") for a b-row display: la_i + b - i.
std::vector<int> beta_numbers(const Partition& la, int b) {
    std::vector<int> betas(b);
    for (int i = 1; i <= b; ++i)
        betas[i - 1] = la.part(i) + b - i;
    return betas;
}

Partition from_betas(std::vector<int> betas) {
    std::sort(betas.begin(), betas.end(), std::greater<int>());
    int b = static_cast<int>(betas.size());
    std::vector<int> parts(b);
    for (int i = 1; i <= b; ++i)
        parts[i - 1] = betas[i - 1] - (b - i);
    return Partition(std::move(parts));
}

} // namespace

std::vector<RimHook> removable_rim_hooks(const Partition& la, int h) {
    if (h < 1)
        throw error("rim hook length must be >= 1");
    std::vector<RimHook> hooks;
    int b = la.rows();
    auto betas = beta_numbers(la, b);
    std::set<int> occupied(betas.begin(), betas.end());
    for (int a = 1; a <= b; ++a) {
        int x = betas[a - 1];
        if (x - h < 0 || occupied.count(x - h))
            continue;
        int leg = 0;
        for (int y : betas)
            if (y > x - h && y < x)
                ++leg;
        hooks.push_back({{a, la.part(a) - h + leg + 1}, h, leg});
    }
    return hooks;
}

std::vector<std::pair<RimHook, Partition>> addable_rim_hooks(const Partition& la, int h) {
    if (h < 1)
        throw error("rim hook length must be >= 1");
    std::vector<std::pair<RimHook, Partition>> out;
    int b = la.rows() + h;
    auto betas = beta_numbers(la, b);
    std::set<int> occupied(betas.begin(), betas.end());
    for (int i = 0; i < b; ++i) {
        int x = betas[i];
        if (occupied.count(x + h))
            continue;
        int leg = 0;
        for (int y : betas)
            if (y > x && y < x + h)
                ++leg;
        auto moved = betas;
        moved[i] = x + h;
        Partition nu = from_betas(std::move(moved));
        // rank of the moved bead gives the anchor row in the enlarged shape
        int a = 1;
        for (int y : betas)
            if (y > x + h)
                ++a;
        out.emplace_back(RimHook{{a, nu.part(a) - h + leg + 1}, h, leg}, std::move(nu));
    }
    std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) {
        return l.first.anchor < r.first.anchor;
    });
    return out;
}

Partition remove_rim_hook(const Partition& la, const RimHook& hook) {
    int b = la.rows();
    int a = hook.anchor.row;
    if (a < 1 || a > b)
        throw error("rim hook anchor outside diagram");
    auto betas = beta_numbers(la, b);
    int x = betas[a - 1];
    if (x - hook.length < 0)
        throw error("rim hook does not fit");
    std::set<int> occupied(betas.begin(), betas.end());
    if (occupied.count(x - hook.length))
        throw error("not a removable rim hook");
    betas[a - 1] = x - hook.length;
    return from_betas(std::move(betas));
}

namespace {

void emit_partitions(int n, int max_part, std::vector<int>& acc,
                     std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition(acc));
        return;
    }
    for (int part = std::min(n, max_part); part >= 1; --part) {
        acc.push_back(part);
        emit_partitions(n - part, part, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> acc;
    emit_partitions(n, n, acc, out);
    return out;
}

} // namespace specht
