#include "sandpile/rank.hpp"

#include <algorithm>

namespace sandpile {

namespace {

void require_full(const Configuration& u, const char* what) {
    if (!u.sink) throw Error(std::string(what) + ": partial configuration, sink value required");
}

void require_stable_sorted(const Configuration& u, const char* what) {
    if (!is_stable(u) || !is_sorted(u))
        throw Error(std::string(what) + ": expected a stable sorted configuration, got " + to_string(u));
}

void require_compact(const Configuration& u, const char* what) {
    if (!is_compact(u))
        throw Error(std::string(what) + ": expected a compact sorted configuration, got " + to_string(u));
}

// Two-finger scan; no range checks, so it also serves the relaxed park input.
std::vector<Value> r_entries(const Configuration& u) {
    std::vector<Value> r(u.b.size());
    std::size_t h = 0;
    for (std::size_t i = 0; i < u.b.size(); ++i) {
        while (h < u.a.size() && u.a[h] < static_cast<Value>(i)) ++h;
        r[i] = checked_sub(checked_add(u.b[i], 1), static_cast<Value>(h));
    }
    return r;
}

// Number of a-values below j for j = 0..n-1 (row thresholds).
std::vector<std::size_t> row_thresholds(const Configuration& u) {
    std::vector<std::size_t> rho(u.b.size());
    std::size_t h = 0;
    for (std::size_t t = 0; t < u.b.size(); ++t) {
        while (h < u.a.size() && u.a[h] < static_cast<Value>(t)) ++h;
        rho[t] = h;
    }
    return rho;
}

Value sum(const std::vector<Value>& v) {
    Value s = 0;
    for (Value x : v) s = checked_add(s, x);
    return s;
}

}  // namespace

RVector r_vector(const Configuration& u) {
    require_stable_sorted(u, "r_vector");
    return RVector{u.shape, r_entries(u)};
}

bool is_parking_sorted(const Configuration& u) {
    require_stable_sorted(u, "is_parking_sorted");
    for (Value x : r_entries(u))
        if (x > 1) return false;
    return true;
}

bool is_recurrent_sorted(const Configuration& u) {
    require_stable_sorted(u, "is_recurrent_sorted");
    const Value m = u.shape.m;
    std::vector<std::size_t> rho = row_thresholds(u);
    Value prev_hi = 0;
    for (std::size_t t = 0; t < u.b.size(); ++t) {
        Value lo = static_cast<Value>(rho[t]) + 1;
        Value hi = std::min(m, u.b[t] + 1);
        if (lo > hi) return false;
        if (t > 0 && lo > prev_hi) return false;
        prev_hi = hi;
    }
    return prev_hi == m;
}

bool is_compact(const Configuration& u) {
    if (!is_sorted(u)) return false;
    if (!u.a.empty() && checked_sub(u.a.back(), u.a.front()) > u.shape.n) return false;
    return checked_sub(u.b.back(), u.b.front()) <= u.shape.m;
}

Configuration t_a(const Configuration& u) {
    require_compact(u, "t_a");
    Configuration w = u;
    if (!w.a.empty()) {
        Value first = checked_add(w.a.front(), u.shape.n);
        std::rotate(w.a.begin(), w.a.begin() + 1, w.a.end());
        w.a.back() = first;
    }
    for (Value& x : w.b) x = checked_sub(x, 1);
    return w;
}

Configuration t_a_inv(const Configuration& u) {
    require_compact(u, "t_a_inv");
    Configuration w = u;
    if (!w.a.empty()) {
        Value last = checked_sub(w.a.back(), u.shape.n);
        std::rotate(w.a.rbegin(), w.a.rbegin() + 1, w.a.rend());
        w.a.front() = last;
    }
    for (Value& x : w.b) x = checked_add(x, 1);
    return w;
}

Configuration t_b(const Configuration& u) {
    require_compact(u, "t_b");
    Configuration w = u;
    for (Value& x : w.a) x = checked_sub(x, 1);
    if (w.sink) w.sink = checked_sub(*w.sink, 1);
    Value first = checked_add(w.b.front(), u.shape.m);
    std::rotate(w.b.begin(), w.b.begin() + 1, w.b.end());
    w.b.back() = first;
    return w;
}

Configuration t_b_inv(const Configuration& u) {
    require_compact(u, "t_b_inv");
    Configuration w = u;
    for (Value& x : w.a) x = checked_add(x, 1);
    if (w.sink) w.sink = checked_add(*w.sink, 1);
    Value last = checked_sub(w.b.back(), u.shape.m);
    std::rotate(w.b.rbegin(), w.b.rbegin() + 1, w.b.rend());
    w.b.front() = last;
    return w;
}

Configuration apply_shift(const Configuration& u, GridShift s) {
    Configuration w = u;
    for (Value k = 0; k < s.k_b; ++k) w = t_b(w);
    for (Value k = 0; k > s.k_b; --k) w = t_b_inv(w);
    for (Value k = 0; k < s.k_a; ++k) w = t_a(w);
    for (Value k = 0; k > s.k_a; --k) w = t_a_inv(w);
    return w;
}

std::optional<std::pair<std::size_t, std::size_t>> phi_squares(const Configuration& u) {
    require_stable_sorted(u, "phi_squares");
    const std::size_t m = u.shape.a_len() + 1;
    std::vector<std::size_t> rho = row_thresholds(u);
    for (std::size_t t = u.b.size(); t-- > 0;) {
        std::size_t i = rho[t] + 1;  // leftmost intersection column of row t+1
        if (i + 1 > m) continue;
        if (static_cast<Value>(i) > u.b[t]) continue;  // (i+1, j) right of the green path
        if (t > 0 && u.b[t - 1] >= static_cast<Value>(i)) continue;
        return std::make_pair(i, t + 1);
    }
    return std::nullopt;
}

Configuration phi(const Configuration& u) {
    auto sq = phi_squares(u);
    if (!sq) return u;
    auto [i, j] = *sq;
    std::vector<Vertex> c;
    for (std::size_t k = i; k <= u.a.size(); ++k) c.push_back({Part::A, k - 1});
    for (std::size_t h = j; h <= u.b.size(); ++h) c.push_back({Part::B, h - 1});
    return sort_config(topple_set(u, c));
}

Configuration psi(const Configuration& u) {
    if (is_recurrent_sorted(u)) return u;
    const Value span = u.shape.m + u.shape.n;
    const Value cap = 4 * span * span + 16;
    Configuration cur = u;
    for (Value step = 0; step < cap; ++step) {
        cur = cur.b.front() >= 0 ? t_a(cur) : t_b(cur);
        if (is_stable(cur)) return cur;
    }
    throw InternalError("psi: no stable configuration found along the green path from " + to_string(u));
}

Configuration psi0(const Configuration& u) {
    require_full(u, "psi0");
    if (!is_parking_sorted(u)) throw Error("psi0: expected a parking sorted configuration");
    Configuration v = u;
    v.b.front() -= 1;
    return park_sort_fast(v);
}

RVector psi0_tilde(const RVector& r) {
    for (Value x : r.entries)
        if (x > 1) throw Error("psi0_tilde: entry greater than 1");
    RVector out = r;
    if (out.entries.empty()) return out;
    Value first = out.entries.front();
    std::rotate(out.entries.begin(), out.entries.begin() + 1, out.entries.end());
    out.entries.back() = first == 1 ? 1 : first + 1;
    return out;
}

ParkTrace park_sort_trace(const Configuration& u) {
    require_full(u, "park_sort_fast");
    const Value m = u.shape.m, n = u.shape.n;
    if (!is_sorted(u)) throw Error("park_sort_fast: expected a sorted configuration");
    for (Value x : u.a)
        if (x < 0 || x >= n) throw Error("park_sort_fast: a-value out of range in " + to_string(u));
    for (Value x : u.b)
        if (x < -1 || x >= m) throw Error("park_sort_fast: b-value out of range in " + to_string(u));

    std::vector<Value> r = r_entries(u);
    std::size_t h0 = static_cast<std::size_t>(std::max_element(r.begin(), r.end()) - r.begin());
    const Value r_h = r[h0];
    const Value b_h = u.b[h0];
    const Value k = b_h - r_h + 2;
    if (k < 1 || k > m) throw InternalError("park_sort_fast: k out of range");
    const std::size_t k0 = static_cast<std::size_t>(k - 1);

    ParkTrace t;
    t.h = h0 + 1;
    t.r_h = r_h;
    t.k = static_cast<std::size_t>(k);
    t.shifted = u;
    Configuration& s = t.shifted;
    Value before = 0, after = 0;
    for (std::size_t i = 0; i < s.b.size(); ++i) {
        before = checked_add(before, s.b[i]);
        s.b[i] = s.b[i] - b_h + (i < h0 ? m : 0);
        after = checked_add(after, s.b[i]);
    }
    for (std::size_t j = 0; j < s.a.size(); ++j) {
        before = checked_add(before, s.a[j]);
        s.a[j] = s.a[j] - static_cast<Value>(h0) + (j < k0 ? n : 0);
        after = checked_add(after, s.a[j]);
    }
    s.sink = checked_add(*u.sink, checked_sub(before, after));

    t.result = s;
    std::rotate(t.result.a.begin(), t.result.a.begin() + static_cast<std::ptrdiff_t>(k0), t.result.a.end());
    std::rotate(t.result.b.begin(), t.result.b.begin() + static_cast<std::ptrdiff_t>(h0), t.result.b.end());
    if (!is_stable(t.result) || !is_sorted(t.result))
        throw InternalError("park_sort_fast: rotation did not yield a stable sorted configuration");
    return t;
}

Configuration park_sort_fast(const Configuration& u) { return park_sort_trace(u).result; }

Configuration park_sort(const Configuration& u) {
    return park_sort_fast(sort_config(stabilize_equiv(u)));
}

RankSummands rank_formula_detail(const Configuration& u) {
    require_full(u, "rank_formula");
    if (!is_parking_sorted(u)) throw Error("rank_formula: expected a parking sorted configuration");
    RankSummands out;
    const Value sink = *u.sink;
    if (sink < 0) return out;
    DivMod qr = floor_divmod(checked_add(sink, 1), u.shape.n);
    out.q = qr.q;
    out.r = qr.r;
    std::vector<Value> r = r_entries(u);
    Value total = -1;
    out.summands.reserve(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        Value s = qr.q + (static_cast<Value>(i) < qr.r ? 1 : 0) + r[i] - 1;
        s = std::max<Value>(0, s);
        out.summands.push_back(s);
        total = checked_add(total, s);
    }
    out.rank = total;
    return out;
}

Value rank_formula(const Configuration& u) { return rank_formula_detail(u).rank; }

GreedyResult rank_greedy(const Configuration& u) {
    require_full(u, "rank_greedy");
    const GraphShape shape = u.shape;
    Configuration s = stabilize_equiv(u);
    std::vector<std::size_t> origin_a = counting_sort_indices(shape.n - 1, s.a);
    std::vector<std::size_t> origin_b = counting_sort_indices(shape.m - 1, s.b);
    Configuration cur = s;
    for (std::size_t p = 0; p < origin_a.size(); ++p) cur.a[p] = s.a[origin_a[p]];
    for (std::size_t p = 0; p < origin_b.size(); ++p) cur.b[p] = s.b[origin_b[p]];

    auto advance = [&](const Configuration& c) {
        ParkTrace t = park_sort_trace(c);
        std::rotate(origin_a.begin(), origin_a.begin() + static_cast<std::ptrdiff_t>(t.k - 1), origin_a.end());
        std::rotate(origin_b.begin(), origin_b.begin() + static_cast<std::ptrdiff_t>(t.h - 1), origin_b.end());
        return t.result;
    };

    cur = advance(cur);
    GreedyResult out;
    out.proof.f = Configuration::zero(shape);
    while (*cur.sink >= 0) {
        if (cur.b.front() != 0) throw InternalError("rank_greedy: parking form with b_1 != 0");
        Value& slot = out.proof.f.b[origin_b.front()];
        slot = checked_add(slot, 1);
        cur.b.front() -= 1;
        cur = advance(cur);
        ++out.rank;
    }
    return out;
}

Value rank_scan(const Configuration& u) {
    require_full(u, "rank_scan");
    const Value n = u.shape.n;
    Configuration cur = park_sort(u);
    Value rank = -1;
    while (*cur.sink >= 0) {
        while (cur.b.front() >= 0) cur = t_a(cur);
        cur = t_b(cur);  // consumes one unit of the sink
        // With m = 1 there is no red east step and every crossed cell is on the right.
        if (cur.a.empty() || cur.a.back() >= n - 1) ++rank;
    }
    return rank;
}

Value rank_of(const Configuration& u) {
    require_full(u, "rank_of");
    return rank_formula(park_sort(u));
}

Configuration canonical_divisor(GraphShape shape) {
    return Configuration(shape, std::vector<Value>(shape.a_len(), shape.n - 2), shape.n - 2,
                         std::vector<Value>(shape.b_len(), shape.m - 2));
}

GridShift decompose_compact(const Configuration& u) {
    require_full(u, "decompose_compact");
    require_compact(u, "decompose_compact");
    Configuration p = park_sort(u);
    // t_b lowers the sink by one and raises the b-sum by m; t_a lowers the
    // b-sum by n and keeps the sink. Both powers are therefore determined.
    GridShift g;
    g.k_b = checked_sub(*p.sink, *u.sink);
    Value num = checked_sub(checked_add(sum(p.b), checked_mul(u.shape.m, g.k_b)), sum(u.b));
    if (num % u.shape.n != 0) throw InternalError("decompose_compact: b-sum not divisible by n");
    g.k_a = num / u.shape.n;
    if (!(apply_shift(p, g) == u)) throw InternalError("decompose_compact: re-application failed for " + to_string(u));
    return g;
}

}  // namespace sandpile
