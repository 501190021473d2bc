#include "sandpile/cylindric.hpp"

#include <algorithm>

#include "sandpile/rank.hpp"

namespace sandpile {

Cylinder::Cylinder(const Configuration& u) : u_(u) {
    if (!is_parking_sorted(u)) throw Error("cylinder: expected a parking sorted configuration");
    r_ = r_vector(u).entries;
}

// s = q n + t; the cell sits in row t at column b_{t+1} + q and lies right of
// the red cut iff q >= 1 - r_{t+1}.
CylCell Cylinder::label(Value s) const {
    DivMod d = floor_divmod(s, u_.shape.n);
    std::size_t t = static_cast<std::size_t>(d.r);
    CylCell c;
    c.s = s;
    c.row = d.r;
    c.column = checked_add(u_.b[t], d.q);
    c.side = d.q >= 1 - r_[t] ? Side::Right : Side::Left;
    return c;
}

bool Cylinder::right(Value s) const {
    DivMod d = floor_divmod(s, u_.shape.n);
    return d.q >= 1 - r_[static_cast<std::size_t>(d.r)];
}

Value Cylinder::unvisited_left(Value s) const {
    const Value n = u_.shape.n;
    Value total = 0;
    for (Value t = 0; t < n; ++t) {
        Value q_min = floor_divmod(checked_sub(s, t), n).q + 1;  // first label above s in row t
        Value q_max = -r_[static_cast<std::size_t>(t)];             // last left label in row t
        total = checked_add(total, std::max<Value>(0, q_max - q_min + 1));
    }
    return total;
}

Value Cylinder::visited_right(Value s) const {
    const Value n = u_.shape.n;
    Value total = 0;
    for (Value t = 0; t < n; ++t) {
        Value q_max = floor_divmod(checked_sub(s, t), n).q;   // last label <= s in row t
        Value q_min = 1 - r_[static_cast<std::size_t>(t)];     // first right label in row t
        total = checked_add(total, std::max<Value>(0, q_max - q_min + 1));
    }
    return total;
}

Value Cylinder::min_right_label() const {
    Value best = 0;
    for (std::size_t t = 0; t < r_.size(); ++t) {
        Value s = (1 - r_[t]) * u_.shape.n + static_cast<Value>(t);
        best = t == 0 ? s : std::min(best, s);
    }
    return best;
}

Value Cylinder::max_left_label() const {
    Value best = 0;
    for (std::size_t t = 0; t < r_.size(); ++t) {
        Value s = -r_[t] * u_.shape.n + static_cast<Value>(t);
        best = t == 0 ? s : std::max(best, s);
    }
    return best;
}

CylCell label_cell(const Configuration& u, Value s) { return Cylinder(u).label(s); }

Value rank_via_cylindric(const Configuration& u) {
    Cylinder c(u);
    const Value sink = u.sink_value();
    Value rank = -1;
    for (Value s = 0; s <= sink; ++s)
        if (c.right(s)) ++rank;
    return rank;
}

Value ypara(const Configuration& u) { return rank_formula(u) + 1; }

Value xpara(const Configuration& u) {
    const Value m = u.shape.m, n = u.shape.n;
    return checked_sub(checked_add(checked_mul(m - 1, n - 1), rank_formula(u)), degree(u));
}

Value xpara_by_cells(const Configuration& u) { return Cylinder(u).unvisited_left(u.sink_value()); }
Value ypara_by_cells(const Configuration& u) { return Cylinder(u).visited_right(u.sink_value()); }

BoundarySets boundary_sets(const Configuration& u) {
    Cylinder c(u);
    const Value m = u.shape.m, n = u.shape.n;
    const Value hi = checked_add(checked_mul(n, m), n);
    if (c.min_right_label() < 0) throw InternalError("boundary_sets: right cell with a negative label");
    if (c.max_left_label() >= hi) throw InternalError("boundary_sets: left cell beyond the scan window");
    BoundarySets out;
    bool cur = c.right(-1);
    for (Value s = -1; s <= hi; ++s) {
        bool next = c.right(s + 1);
        if (!cur && next) out.s_plus.push_back(s);
        if (cur && !next) out.s_minus.push_back(s);
        cur = next;
    }
    if (out.s_plus.size() != out.s_minus.size() + 1)
        throw InternalError("boundary_sets: unbalanced boundary counts");
    return out;
}

TruncatedSeries f_u_series(const Configuration& u, const Caps& caps) {
    BoundarySets bs = boundary_sets(u);
    TruncatedSeries num(caps);
    auto term = [&](Value s, int sign) {
        Configuration v = u.with_sink(s);
        Value xp = xpara(v), yp = ypara(v);
        if (xp > caps[Var::x] || yp > caps[Var::y]) return;
        num.add_term(exps({{Var::x, static_cast<int>(xp)}, {Var::y, static_cast<int>(yp)}}), sign);
    };
    for (Value s : bs.s_plus) term(s, 1);
    for (Value s : bs.s_minus) term(s, -1);

    const TruncatedSeries one = TruncatedSeries::constant(caps, 1);
    const TruncatedSeries x = TruncatedSeries::variable(caps, Var::x);
    const TruncatedSeries y = TruncatedSeries::variable(caps, Var::y);
    TruncatedSeries factor = (one - x * y) * geom_inverse((one - x) * (one - y));
    return factor * num;
}

TruncatedSeries f_u_direct(const Configuration& u, const Caps& caps) {
    Cylinder c(u);
    // Below the smallest right label every step down adds a left cell; above
    // the largest left label every step up adds a right cell.
    const Value lo = c.min_right_label() - 2 - caps[Var::x];
    const Value hi = c.max_left_label() + 1 + caps[Var::y];
    if (c.unvisited_left(lo) <= caps[Var::x]) throw InternalError("f_u_direct: lower scan bound too high");
    if (c.visited_right(hi) <= caps[Var::y]) throw InternalError("f_u_direct: upper scan bound too low");
    TruncatedSeries out(caps);
    for (Value s = lo; s <= hi; ++s) {
        Value xp = c.unvisited_left(s), yp = c.visited_right(s);
        if (xp <= caps[Var::x] && yp <= caps[Var::y])
            out.add_term(exps({{Var::x, static_cast<int>(xp)}, {Var::y, static_cast<int>(yp)}}), 1);
    }
    return out;
}

}  // namespace sandpile
