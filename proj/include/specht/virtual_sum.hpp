#pragma once

#include <map>
#include <string>
#include <string_view>

#include "specht/partition.hpp"

namespace specht {

enum class Basis { Specht, Simple };

// Finite integer-coefficient formal sum over partitions in a fixed basis.
// Zero coefficients are never stored.
class VirtualSum {
public:
    explicit VirtualSum(Basis basis = Basis::Specht) : basis_(basis) {}

    Basis basis() const { return basis_; }
    bool empty() const { return terms_.empty(); }
    const std::map<Partition, long long>& terms() const { return terms_; }

    long long coeff(const Partition& la) const {
        auto it = terms_.find(la);
        return it == terms_.end() ? 0 : it->second;
    }

    void add(const Partition& la, long long c);

    VirtualSum& operator+=(const VirtualSum& other);
    VirtualSum& operator*=(long long scalar);

    // Signed term list, lexicographically largest partition first, e.g.
    // "+S(5,2,1) -2 S(4,4)"; the empty sum prints as "0".
    std::string to_string() const;
    static VirtualSum parse(std::string_view text);

    bool operator==(const VirtualSum&) const = default;

private:
    Basis basis_;
    std::map<Partition, long long> terms_;
};

} // namespace specht
