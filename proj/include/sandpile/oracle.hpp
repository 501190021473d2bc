#pragma once

// Exponential-time reference implementations built directly on the
// definitions (subsets, toppling, compositions). They share nothing with the
// fast paths except the core toppling primitives.

#include <cstdint>
#include <map>
#include <tuple>

#include "sandpile/core.hpp"

namespace sandpile::oracle {

// Largest number of non-sink vertices (m - 1 + n) accepted.
inline constexpr Value kMaxVertices = 20;

// Subset order used when searching for a set to topple. Vertices are ordered
// a_1 < ... < a_{m-1} < b_1 < ... < b_n.
enum class SubsetOrder {
    SizeThenLex,     // smaller sets first, lexicographic within a size
    MaskDescending,  // by bitmask, largest first
};

bool is_parking_by_definition(const Configuration& u);

Configuration park_by_definition(const Configuration& u,
                                 SubsetOrder order = SubsetOrder::SizeThenLex);

// With restrict_to_b the search over f only uses B-vertices.
Value rank_by_definition(const Configuration& u, bool restrict_to_b = false);

// Minimal-subset operators on stable sorted configurations.
Configuration phi_by_definition(const Configuration& u);
Configuration psi_by_definition(const Configuration& u);

using PolyominoCounts = std::map<std::tuple<int, int, int>, std::uint64_t>;  // (area, width, height)

// Pairs of lattice paths meeting only at both ends; width and height <= 6.
PolyominoCounts polyomino_bruteforce(int width_cap, int height_cap);

}  // namespace sandpile::oracle
