#include "specht/virtual_sum.hpp"

#include <algorithm>
#include <vector>

namespace specht {

void VirtualSum::add(const Partition& la, long long c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(la, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

VirtualSum& VirtualSum::operator+=(const VirtualSum& other) {
    if (basis_ != other.basis_)
        throw error("cannot add sums in different bases");
    for (const auto& [la, c] : other.terms_)
        add(la, c);
    return *this;
}

VirtualSum& VirtualSum::operator*=(long long scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [la, c] : terms_)
        c *= scalar;
    return *this;
}

std::string VirtualSum::to_string() const {
    if (terms_.empty())
        return "0";
    std::vector<const std::pair<const Partition, long long>*> order;
    for (const auto& term : terms_)
        order.push_back(&term);
    std::sort(order.begin(), order.end(), [](auto* a, auto* b) {
        return listed_before(a->first, b->first);
    });
    const char letter = basis_ == Basis::Specht ? 'S' : 'D';
    std::string out;
    for (auto* term : order) {
        if (!out.empty())
            out += ' ';
        long long c = term->second;
        out += c > 0 ? '+' : '-';
        long long mag = c > 0 ? c : -c;
        if (mag != 1) {
            out += std::to_string(mag);
            out += ' ';
        }
        out += letter;
        out += '(';
        out += term->first.to_string();
        out += ')';
    }
    return out;
}

VirtualSum VirtualSum::parse(std::string_view text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && text[pos] == ' ')
            ++pos;
    };
    skip_ws();
    if (text.substr(pos) == "0")
        return VirtualSum(Basis::Specht);
    VirtualSum out(Basis::Specht);
    bool basis_seen = false;
    while (pos < text.size()) {
        long long sign = 1;
        if (text[pos] == '+')
            ++pos;
        else if (text[pos] == '-') {
            sign = -1;
            ++pos;
        } else
            throw parse_error("expected sign in virtual sum");
        skip_ws();
        long long mag = 0;
        bool has_mag = false;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            mag = mag * 10 + (text[pos] - '0');
            has_mag = true;
            ++pos;
        }
        skip_ws();
        if (pos >= text.size() || (text[pos] != 'S' && text[pos] != 'D'))
            throw parse_error("expected S(...) or D(...) term");
        Basis basis = text[pos] == 'S' ? Basis::Specht : Basis::Simple;
        if (!basis_seen) {
            out = VirtualSum(basis);
            basis_seen = true;
        } else if (basis != out.basis()) {
            throw parse_error("mixed bases in virtual sum");
        }
        ++pos;
        if (pos >= text.size() || text[pos] != '(')
            throw parse_error("expected '(' in virtual sum term");
        ++pos;
        std::size_t close = text.find(')', pos);
        if (close == std::string_view::npos)
            throw parse_error("unterminated term in virtual sum");
        out.add(Partition::parse(text.substr(pos, close - pos)), sign * (has_mag ? mag : 1));
        pos = close + 1;
        skip_ws();
    }
    return out;
}

} // namespace specht
