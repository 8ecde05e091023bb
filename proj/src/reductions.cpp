#include "specht/reductions.hpp"

#include <algorithm>
#include <numeric>

namespace specht {

std::optional<std::pair<Partition, Partition>> row_removal(const Partition& la,
                                                           const Partition& mu) {
    if (la.empty() || mu.empty() || la.part(1) != mu.part(1))
        return std::nullopt;
    auto tail = [](const Partition& x) {
        return Partition(std::vector<int>(x.parts().begin() + 1, x.parts().end()));
    };
    return std::make_pair(tail(la), tail(mu));
}

std::optional<std::pair<Partition, Partition>> column_removal(const Partition& la,
                                                              const Partition& mu) {
    if (la.empty() || mu.empty() || la.rows() != mu.rows())
        return std::nullopt;
    auto strip = [](const Partition& x) {
        auto parts = x.parts();
        for (int& part : parts)
            --part;
        return Partition(std::move(parts));
    };
    return std::make_pair(strip(la), strip(mu));
}

DonkinSplit donkin_split(const Partition& la, const Partition& mu, int s) {
    if (s < 1)
        throw error("donkin_split needs s >= 1");
    long long sum_la = 0, sum_mu = 0;
    for (int i = 1; i <= s; ++i) {
        sum_la += la.part(i);
        sum_mu += mu.part(i);
    }
    if (sum_la != sum_mu)
        throw sum_mismatch_error("prefix sums through row " + std::to_string(s) + " differ");
    auto split = [&](const Partition& x) {
        std::vector<int> head, tail;
        for (int i = 1; i <= x.rows(); ++i)
            (i <= s ? head : tail).push_back(x.part(i));
        return std::make_pair(Partition(std::move(head)), Partition(std::move(tail)));
    };
    auto [la_head, la_tail] = split(la);
    auto [mu_head, mu_tail] = split(mu);
    return {{la_head, mu_head}, {la_tail, mu_tail}};
}

namespace {

// Rim cells from the top right corner to the last row, in walking order.
std::vector<NodeCoord> rim_walk(const Partition& la) {
    std::vector<NodeCoord> walk;
    if (la.empty())
        return walk;
    int row = 1, col = la.part(1);
    while (col >= 1) {
        walk.push_back({row, col});
        if (row < la.rows() && la.part(row + 1) >= col)
            ++row;
        else
            --col;
    }
    return walk;
}

} // namespace

std::vector<int> p_rim_profile(const Partition& la, int p) {
    std::vector<int> per_row(la.rows(), 0);
    auto walk = rim_walk(la);
    std::size_t idx = 0;
    while (idx < walk.size()) {
        // one segment: p consecutive rim cells (possibly fewer at the end)
        int taken = 0;
        int last_row = walk[idx].row;
        while (idx < walk.size() && taken < p) {
            last_row = walk[idx].row;
            ++per_row[last_row - 1];
            ++idx;
            ++taken;
        }
        // the next segment starts in the row below where this one ended
        while (idx < walk.size() && walk[idx].row <= last_row)
            ++idx;
    }
    return per_row;
}

namespace {

Partition strip_p_rim(const Partition& la, int p, int* stripped = nullptr) {
    auto profile = p_rim_profile(la, p);
    auto parts = la.parts();
    int total = 0;
    for (std::size_t i = 0; i < profile.size(); ++i) {
        parts[i] -= profile[i];
        total += profile[i];
    }
    if (stripped)
        *stripped = total;
    return Partition(std::move(parts));
}

// Search the unique nu with `r` rows containing tau such that stripping the
// p-rim of nu removes exactly `a` cells and leaves tau. Each row of nu loses
// between 1 and p rim cells, which keeps the search tiny.
bool wrap_p_rim(const Partition& tau, int a, int r, int p, std::vector<int>& nu_parts,
                Partition& out) {
    int row = static_cast<int>(nu_parts.size()) + 1;
    int assigned = 0;
    for (std::size_t i = 0; i < nu_parts.size(); ++i)
        assigned += nu_parts[i] - tau.part(static_cast<int>(i) + 1);
    int remaining = a - assigned;
    if (row > r) {
        if (remaining != 0)
            return false;
        Partition nu;
        try {
            nu = Partition(nu_parts);
        } catch (const error&) {
            return false;
        }
        if (nu.rows() != r)
            return false;
        int stripped = 0;
        if (strip_p_rim(nu, p, &stripped) != tau || stripped != a)
            return false;
        out = nu;
        return true;
    }
    int rows_left = r - row; // rows strictly below this one
    for (int x = 1; x <= std::min(p, remaining - rows_left); ++x) {
        int value = tau.part(row) + x;
        if (row > 1 && value > nu_parts[row - 2])
            continue;
        nu_parts.push_back(value);
        if (wrap_p_rim(tau, a, r, p, nu_parts, out))
            return true;
        nu_parts.pop_back();
    }
    return false;
}

} // namespace

MullineuxSymbol mullineux_symbol(const Partition& mu, int p) {
    MullineuxSymbol symbol;
    Partition current = mu;
    while (!current.empty()) {
        int rows = current.rows();
        int stripped = 0;
        current = strip_p_rim(current, p, &stripped);
        symbol.rows.emplace_back(stripped, rows);
    }
    return symbol;
}

Partition partition_from_symbol(const MullineuxSymbol& symbol, int p) {
    Partition current;
    for (auto it = symbol.rows.rbegin(); it != symbol.rows.rend(); ++it) {
        auto [a, r] = *it;
        std::vector<int> acc;
        Partition next;
        if (!wrap_p_rim(current, a, r, p, acc, next))
            throw error("no partition realizes Mullineux symbol row (" +
                        std::to_string(a) + "," + std::to_string(r) + ")");
        current = next;
    }
    return current;
}

Partition mullineux(const Partition& mu, int p) {
    if (!is_p_regular(mu, p))
        throw not_regular_error(mu.to_string() + " is not " + std::to_string(p) + "-regular");
    auto symbol = mullineux_symbol(mu, p);
    MullineuxSymbol image;
    for (auto [a, r] : symbol.rows) {
        int eps = (a % p == 0) ? 0 : 1;
        image.rows.emplace_back(a, a - r + eps);
    }
    return partition_from_symbol(image, p);
}

std::pair<Partition, Partition> rule7_transport(const Partition& la,
                                                const Partition& mu, int p) {
    return {conjugate(la), mullineux(mu, p)};
}

std::string MullineuxSymbol::to_string() const {
    std::string top, bottom;
    for (const auto& [a, r] : rows) {
        if (!top.empty()) {
            top += ',';
            bottom += ',';
        }
        top += std::to_string(a);
        bottom += std::to_string(r);
    }
    return top + " / " + bottom;
}

MullineuxSymbol MullineuxSymbol::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        throw parse_error("Mullineux symbol needs 'a1,... / r1,...'");
    auto read_list = [](std::string_view part) {
        std::vector<int> values;
        std::size_t pos = 0;
        while (pos < part.size()) {
            while (pos < part.size() && part[pos] == ' ')
                ++pos;
            if (pos >= part.size())
                break;
            int v = 0;
            bool any = false;
            while (pos < part.size() && part[pos] >= '0' && part[pos] <= '9') {
                v = v * 10 + (part[pos++] - '0');
                any = true;
            }
            if (!any)
                throw parse_error("bad integer in Mullineux symbol");
            values.push_back(v);
            while (pos < part.size() && part[pos] == ' ')
                ++pos;
            if (pos < part.size()) {
                if (part[pos] != ',')
                    throw parse_error("bad separator in Mullineux symbol");
                ++pos;
            }
        }
        return values;
    };
    auto tops = read_list(text.substr(0, slash));
    auto bottoms = read_list(text.substr(slash + 1));
    if (tops.size() != bottoms.size())
        throw parse_error("Mullineux symbol rows differ in length");
    MullineuxSymbol symbol;
    for (std::size_t i = 0; i < tops.size(); ++i)
        symbol.rows.emplace_back(tops[i], bottoms[i]);
    return symbol;
}

} // namespace specht
