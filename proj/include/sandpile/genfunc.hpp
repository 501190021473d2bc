#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "sandpile/core.hpp"
#include "sandpile/series.hpp"

namespace sandpile {

// Parking sorted partial configurations of one shape, in lexicographic order
// of (a, b).
struct ParkingFamily {
    GraphShape shape;
    std::vector<Configuration> configs;
};

// Upper bound on the number of sorted (a, b) candidate pairs examined.
inline constexpr std::uint64_t kEnumerationLimit = 100'000'000;

ParkingFamily enumerate_parking_sorted(GraphShape shape);

using DegreeRankTable = std::map<std::pair<Value, Value>, std::int64_t>;

// Counts of (degree, rank) over parking sorted u and all sinks putting the
// degree in [dmin, dmax].
DegreeRankTable k_tilde_table(GraphShape shape, Value dmin, Value dmax);

// Sum of x^xpara y^ypara over parking sorted u and sink values, within the x
// and y caps of `caps`.
TruncatedSeries k_xy_table(GraphShape shape, const Caps& caps);

enum class HeightTwist {
    None,   // cell variable counts the area
    Plus,   // area + height  (h -> q h)
    Minus,  // area - height  (h -> h / q)
};

struct PolyominoWeights {
    Var cell = Var::q;
    HeightTwist twist = HeightTwist::None;
    Var width = Var::w;
    Var height = Var::h;
};

using PolyominoTable = std::map<std::tuple<int, int, int>, BigInt>;  // (area, width, height)

// Column-by-column transfer count of parallelogram polyominoes.
PolyominoTable polyomino_counts(int width_cap, int height_cap, int area_cap);

TruncatedSeries polyomino_series(const PolyominoWeights& weights, const Caps& caps);

// L(w,h) in q, w, h; with `scaled` the arguments are (qw, qh).
TruncatedSeries l_series(const Caps& caps, bool scaled = false);
// q w h L(qw, qh) / L(w, h).
TruncatedSeries p_via_l(const Caps& caps);

struct BoundarySeries {
    TruncatedSeries plus;
    TruncatedSeries minus;
};

// Shapes range over 1..caps[w] by 1..caps[h].
BoundarySeries boundary_series(const Caps& caps);
BoundarySeries boundary_series_closed(const Caps& caps);

// Sum over shapes of K_{m,n}(x,y) w^m h^n.
TruncatedSeries gf_lhs(const Caps& caps);
TruncatedSeries gf_rhs(const Caps& caps);

struct GfMismatch {
    Exponents exponents{};
    BigInt lhs;
    BigInt rhs;
};

struct GfReport {
    bool pass = true;
    std::size_t compared = 0;
    std::optional<GfMismatch> mismatch;
    std::string text() const;
};

GfReport compare_series(const TruncatedSeries& lhs, const TruncatedSeries& rhs);
GfReport verify_gf_theorem(const Caps& caps);

}  // namespace sandpile
