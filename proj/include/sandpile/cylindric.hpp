#pragma once

#include <vector>

#include "sandpile/core.hpp"
#include "sandpile/series.hpp"

namespace sandpile {

enum class Side { Left, Right };

// Cell of the rolled diagram holding label s: row t, bottom-left x = column.
struct CylCell {
    Value s = 0;
    Value column = 0;
    Value row = 0;
    Side side = Side::Left;
    bool operator==(const CylCell&) const = default;
};

struct BoundarySets {
    std::vector<Value> s_plus;   // L(s) left, L(s+1) right
    std::vector<Value> s_minus;  // L(s) right, L(s+1) left
};

// Precomputed row data of a parking sorted configuration; cheap label queries.
class Cylinder {
public:
    explicit Cylinder(const Configuration& u);  // parking sorted, partial allowed

    const Configuration& config() const { return u_; }
    CylCell label(Value s) const;
    bool right(Value s) const;

    // Direct cell counts for the configuration with sink value s.
    Value unvisited_left(Value s) const;
    Value visited_right(Value s) const;

    Value min_right_label() const;
    Value max_left_label() const;

private:
    Configuration u_;
    std::vector<Value> r_;  // r-vector
};

CylCell label_cell(const Configuration& u, Value s);

Value rank_via_cylindric(const Configuration& u);

Value xpara(const Configuration& u);
Value ypara(const Configuration& u);
Value xpara_by_cells(const Configuration& u);
Value ypara_by_cells(const Configuration& u);

BoundarySets boundary_sets(const Configuration& u);

// Closed form for the sum over all sink values of x^xpara y^ypara.
TruncatedSeries f_u_series(const Configuration& u, const Caps& caps);
// The same sum taken term by term over the contributing sink values.
TruncatedSeries f_u_direct(const Configuration& u, const Caps& caps);

}  // namespace sandpile
