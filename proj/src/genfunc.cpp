#include "sandpile/genfunc.hpp"

#include <functional>
#include <sstream>

#include "sandpile/cylindric.hpp"
#include "sandpile/rank.hpp"

namespace sandpile {

namespace {

// C(a, b), saturating at limit + 1.
std::uint64_t binomial_capped(std::uint64_t a, std::uint64_t b, std::uint64_t limit) {
    if (b > a) return 0;
    b = std::min(b, a - b);
    unsigned __int128 c = 1;
    for (std::uint64_t i = 1; i <= b; ++i) {
        c = c * (a - b + i) / i;
        if (c > limit) return limit + 1;
    }
    return static_cast<std::uint64_t>(c);
}

// Calls fn for every weakly increasing sequence of length len over [lo, hi].
void for_sorted_tuples(std::size_t len, Value lo, Value hi,
                       const std::function<void(const std::vector<Value>&)>& fn) {
    std::vector<Value> cur(len, lo);
    std::function<void(std::size_t, Value)> rec = [&](std::size_t i, Value from) {
        if (i == len) {
            fn(cur);
            return;
        }
        for (Value v = from; v <= hi; ++v) {
            cur[i] = v;
            rec(i + 1, v);
        }
    };
    rec(0, lo);
}

Exponents xy_exps(Value xp, Value yp) {
    return exps({{Var::x, static_cast<int>(xp)}, {Var::y, static_cast<int>(yp)}});
}

}  // namespace

ParkingFamily enumerate_parking_sorted(GraphShape shape) {
    const std::uint64_t m = static_cast<std::uint64_t>(shape.m), n = static_cast<std::uint64_t>(shape.n);
    std::uint64_t side = binomial_capped(m + n - 2, m - 1, kEnumerationLimit);
    if (side > kEnumerationLimit || (side > 0 && side > kEnumerationLimit / side))
        throw Error("enumerate_parking_sorted: search space exceeds " + std::to_string(kEnumerationLimit) +
                    " candidates");
    ParkingFamily fam{shape, {}};
    for_sorted_tuples(shape.a_len(), 0, shape.n - 1, [&](const std::vector<Value>& a) {
        for_sorted_tuples(shape.b_len() - 1, 0, shape.m - 1, [&](const std::vector<Value>& rest) {
            std::vector<Value> b{0};
            b.insert(b.end(), rest.begin(), rest.end());
            Configuration u(shape, a, std::nullopt, b);
            if (is_parking_sorted(u)) fam.configs.push_back(std::move(u));
        });
    });
    return fam;
}

DegreeRankTable k_tilde_table(GraphShape shape, Value dmin, Value dmax) {
    DegreeRankTable table;
    for (const Configuration& u : enumerate_parking_sorted(shape).configs) {
        Value base = degree(u.with_sink(0));
        for (Value d = dmin; d <= dmax; ++d) {
            Value r = rank_formula(u.with_sink(d - base));
            ++table[{d, r}];
        }
    }
    return table;
}

TruncatedSeries k_xy_table(GraphShape shape, const Caps& caps) {
    TruncatedSeries out(caps);
    const Value cap_x = caps[Var::x], cap_y = caps[Var::y];
    for (const Configuration& u : enumerate_parking_sorted(shape).configs) {
        // ypara is 0 exactly for negative sinks; xpara reaches 0 at some sink
        // and stays there. Monotonicity bounds the contributing range.
        const Value s_low = -1 - (cap_x + 1);
        Value s0 = -1;
        while (xpara(u.with_sink(s0)) != 0) ++s0;
        const Value s_high = s0 + cap_y + 1;
        if (xpara(u.with_sink(s_low)) <= cap_x) throw InternalError("k_xy_table: lower sink bound too high");
        if (ypara(u.with_sink(s_high)) <= cap_y) throw InternalError("k_xy_table: upper sink bound too low");
        for (Value s = s_low; s <= s_high; ++s) {
            Configuration v = u.with_sink(s);
            Value xp = xpara(v), yp = ypara(v);
            if (xp <= cap_x && yp <= cap_y) out.add_term(xy_exps(xp, yp), 1);
        }
    }
    return out;
}

PolyominoTable polyomino_counts(int width_cap, int height_cap, int area_cap) {
    PolyominoTable out;
    if (width_cap < 1 || height_cap < 1 || area_cap < 1) return out;
    const int H = height_cap, A = area_cap;
    // layer[hi][len][area]: polyominoes whose last column spans rows
    // [hi - len + 1, hi].
    using Layer = std::vector<std::vector<std::vector<BigInt>>>;
    auto fresh = [&] { return Layer(H, std::vector<std::vector<BigInt>>(H + 1, std::vector<BigInt>(A + 1))); };
    Layer cur = fresh();
    for (int len = 1; len <= H && len <= A; ++len) cur[len - 1][len][len] = 1;
    for (int width = 1;; ++width) {
        for (int hi = 0; hi < H; ++hi)
            for (int len = 1; len <= hi + 1; ++len)
                for (int area = 0; area <= A; ++area)
                    if (!cur[hi][len][area].is_zero()) out[{area, width, hi + 1}] += cur[hi][len][area];
        if (width == width_cap) break;
        Layer next = fresh();
        for (int hi = 0; hi < H; ++hi)
            for (int len = 1; len <= hi + 1; ++len)
                for (int area = 0; area <= A; ++area) {
                    const BigInt& c = cur[hi][len][area];
                    if (c.is_zero()) continue;
                    // Next column: bottom raised by delta (still touching), top raised to hi2.
                    for (int delta = 0; delta < len; ++delta)
                        for (int hi2 = hi; hi2 < H; ++hi2) {
                            int len2 = len - delta + (hi2 - hi);
                            int area2 = area + len2;
                            if (area2 <= A) next[hi2][len2][area2] += c;
                        }
                }
        cur = std::move(next);
    }
    return out;
}

TruncatedSeries polyomino_series(const PolyominoWeights& wt, const Caps& caps) {
    const int W = caps[wt.width], H = caps[wt.height], C = caps[wt.cell];
    const int area_cap = C + (wt.twist == HeightTwist::Minus ? H : 0);
    TruncatedSeries out(caps);
    for (const auto& [key, count] : polyomino_counts(W, H, area_cap)) {
        auto [area, width, height] = key;
        int e = area;
        if (wt.twist == HeightTwist::Plus) e += height;
        if (wt.twist == HeightTwist::Minus) e -= height;
        if (e < 0) throw InternalError("polyomino_series: area below height");
        Exponents ex{};
        ex[static_cast<std::size_t>(wt.cell)] = e;
        ex[static_cast<std::size_t>(wt.width)] = width;
        ex[static_cast<std::size_t>(wt.height)] = height;
        out.add_term(ex, count);
    }
    return out;
}

TruncatedSeries l_series(const Caps& caps, bool scaled) {
    const int Q = caps[Var::q], W = caps[Var::w], H = caps[Var::h];
    const TruncatedSeries one = TruncatedSeries::constant(caps, 1);
    // inv_poch[k] = 1 / ((1-q)(1-q^2)...(1-q^k))
    std::vector<TruncatedSeries> inv_poch;
    TruncatedSeries poch = one;
    for (int k = 0; k <= std::max(W, H); ++k) {
        if (k > 0) poch = poch * (one - TruncatedSeries::monomial(caps, exps({{Var::q, k}})));
        inv_poch.push_back(geom_inverse(poch));
    }
    TruncatedSeries out(caps);
    for (int m = 0; m <= W; ++m)
        for (int n = 0; n <= H; ++n) {
            long e = static_cast<long>(m + n + 1) * (m + n) / 2 + (scaled ? m + n : 0);
            if (e > Q) continue;
            BigInt sign = (m + n) % 2 ? -1 : 1;
            auto mono = TruncatedSeries::monomial(
                caps, exps({{Var::q, static_cast<int>(e)}, {Var::w, m}, {Var::h, n}}), sign);
            out += mono * inv_poch[n] * inv_poch[m];
        }
    return out;
}

TruncatedSeries p_via_l(const Caps& caps) {
    auto qwh = TruncatedSeries::monomial(caps, exps({{Var::q, 1}, {Var::w, 1}, {Var::h, 1}}));
    return qwh * l_series(caps, true) * geom_inverse(l_series(caps, false));
}

BoundarySeries boundary_series(const Caps& caps) {
    BoundarySeries out{TruncatedSeries(caps), TruncatedSeries(caps)};
    for (int m = 1; m <= caps[Var::w]; ++m)
        for (int n = 1; n <= caps[Var::h]; ++n) {
            for (const Configuration& u : enumerate_parking_sorted(GraphShape(m, n)).configs) {
                BoundarySets bs = boundary_sets(u);
                auto put = [&](TruncatedSeries& target, Value s) {
                    Configuration v = u.with_sink(s);
                    Value xp = xpara(v), yp = ypara(v);
                    if (xp > caps[Var::x] || yp > caps[Var::y]) return;
                    Exponents e = xy_exps(xp, yp);
                    e[static_cast<std::size_t>(Var::w)] = m;
                    e[static_cast<std::size_t>(Var::h)] = n;
                    target.add_term(e, 1);
                };
                for (Value s : bs.s_plus) put(out.plus, s);
                for (Value s : bs.s_minus) put(out.minus, s);
            }
        }
    return out;
}

BoundarySeries boundary_series_closed(const Caps& caps) {
    const TruncatedSeries one = TruncatedSeries::constant(caps, 1);
    const TruncatedSeries x = TruncatedSeries::variable(caps, Var::x);
    const TruncatedSeries w = TruncatedSeries::variable(caps, Var::w);
    const TruncatedSeries h = TruncatedSeries::variable(caps, Var::h);
    const TruncatedSeries px = polyomino_series({Var::x, HeightTwist::None}, caps);
    const TruncatedSeries py = polyomino_series({Var::y, HeightTwist::None}, caps);
    const TruncatedSeries px_up = polyomino_series({Var::x, HeightTwist::Plus}, caps);    // P(x; w, xh)
    const TruncatedSeries py_down = polyomino_series({Var::y, HeightTwist::Minus}, caps);  // P(y; w, h/y)

    BoundarySeries out{TruncatedSeries(caps), TruncatedSeries(caps)};
    out.minus = px * py * geom_inverse((one - w) * (one - h - w - px - py));

    TruncatedSeries num = (one - h * x - w) * h * w + (w - h) * px_up * py_down +
                          (one - h * x - w + x * w) * h * py_down - h * w * px_up;
    out.plus = num * geom_inverse((one - w) * (one - w - x * h - py_down - px_up));
    return out;
}

TruncatedSeries gf_lhs(const Caps& caps) {
    TruncatedSeries out(caps);
    for (int m = 1; m <= caps[Var::w]; ++m)
        for (int n = 1; n <= caps[Var::h]; ++n)
            for (auto [e, c] : k_xy_table(GraphShape(m, n), caps).terms()) {
                e[static_cast<std::size_t>(Var::w)] = m;
                e[static_cast<std::size_t>(Var::h)] = n;
                out.add_term(e, c);
            }
    return out;
}

TruncatedSeries gf_rhs(const Caps& caps) {
    const TruncatedSeries one = TruncatedSeries::constant(caps, 1);
    const TruncatedSeries x = TruncatedSeries::variable(caps, Var::x);
    const TruncatedSeries y = TruncatedSeries::variable(caps, Var::y);
    const TruncatedSeries w = TruncatedSeries::variable(caps, Var::w);
    const TruncatedSeries h = TruncatedSeries::variable(caps, Var::h);
    const TruncatedSeries px = polyomino_series({Var::x, HeightTwist::None}, caps);
    const TruncatedSeries py = polyomino_series({Var::y, HeightTwist::None}, caps);
    TruncatedSeries num = (one - x * y) * (h * w - px * py);
    TruncatedSeries den = (one - x) * (one - y) * (one - h - w - px - py);
    return num * geom_inverse(den);
}

std::string GfReport::text() const {
    std::ostringstream out;
    if (pass) {
        out << "PASS (" << compared << " coefficients compared)";
        return out.str();
    }
    out << "FAIL at";
    for (std::size_t i = 0; i < kVars; ++i)
        if (mismatch->exponents[i]) out << " " << var_name(static_cast<Var>(i)) << "^" << mismatch->exponents[i];
    out << ": lhs=" << mismatch->lhs << " rhs=" << mismatch->rhs;
    return out.str();
}

GfReport compare_series(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
    if (!(lhs.caps() == rhs.caps())) throw Error("compare_series: cap mismatch");
    std::map<Exponents, std::pair<BigInt, BigInt>> all;
    for (const auto& [e, c] : lhs.terms()) all[e].first = c;
    for (const auto& [e, c] : rhs.terms()) all[e].second = c;
    GfReport rep;
    std::size_t box = 1;
    for (int cap : lhs.caps().max) box *= static_cast<std::size_t>(cap) + 1;
    rep.compared = box;
    for (const auto& [e, pair] : all) {
        if (pair.first != pair.second) {
            rep.pass = false;
            rep.mismatch = GfMismatch{e, pair.first, pair.second};
            break;
        }
    }
    return rep;
}

GfReport verify_gf_theorem(const Caps& caps) { return compare_series(gf_lhs(caps), gf_rhs(caps)); }

}  // namespace sandpile
