#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "specht/partition.hpp"

namespace specht {

// Equal first rows: drop them. [S(la):D(mu)] = [S(la'):D(mu')] for the tails.
std::optional<std::pair<Partition, Partition>> row_removal(const Partition& la,
                                                           const Partition& mu);

// Equal first columns: subtract 1 from every part.
std::optional<std::pair<Partition, Partition>> column_removal(const Partition& la,
                                                              const Partition& mu);

struct DonkinSplit {
    std::pair<Partition, Partition> head; // rows 1..s of la and mu
    std::pair<Partition, Partition> tail; // rows s+1.. of la and mu
};

// Split after row s; the decomposition number factors over the two pairs.
// Requires equal prefix sums through row s.
DonkinSplit donkin_split(const Partition& la, const Partition& mu, int s);

// Sizes of successive p-rims stripped from a partition, paired with the row
// count of the partition at each stripping step.
struct MullineuxSymbol {
    std::vector<std::pair<int, int>> rows; // (a_i, r_i)

    std::string to_string() const; // "a1,...,ak / r1,...,rk"
    static MullineuxSymbol parse(std::string_view text);
    bool operator==(const MullineuxSymbol&) const = default;
};

// The p-rim of a partition: the stripped cells' per-row counts (index 0 =
// top row, always covering every row) and their total.
std::vector<int> p_rim_profile(const Partition& la, int p);

MullineuxSymbol mullineux_symbol(const Partition& mu, int p);

// Unique partition whose symbol is the given one.
Partition partition_from_symbol(const MullineuxSymbol& symbol, int p);

// The involution m with D(mu) tensor sign = D(m(mu)); mu must be p-regular.
Partition mullineux(const Partition& mu, int p);

// (conjugate(la), mullineux(mu)); the decomposition numbers of the two pairs
// are equal.
std::pair<Partition, Partition> rule7_transport(const Partition& la,
                                                const Partition& mu, int p);

} // namespace specht
