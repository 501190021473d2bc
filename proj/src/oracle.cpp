#include "sandpile/oracle.hpp"

#include <functional>
#include <map>
#include <vector>

namespace sandpile::oracle {

namespace {

// Non-sink values in vertex order a_1..a_{m-1}, b_1..b_n, plus the sink.
struct Flat {
    GraphShape shape;
    std::size_t na = 0;
    std::vector<Value> v;
    std::optional<Value> sink;
};

void guard(const GraphShape& s) {
    if (s.m - 1 + s.n > kMaxVertices)
        throw Error("oracle: more than " + std::to_string(kMaxVertices) + " non-sink vertices");
}

Flat flatten(const Configuration& u) {
    Flat f{u.shape, u.a.size(), u.a, u.sink};
    f.v.insert(f.v.end(), u.b.begin(), u.b.end());
    return f;
}

Configuration unflatten(const Flat& f) {
    std::vector<Value> a(f.v.begin(), f.v.begin() + static_cast<std::ptrdiff_t>(f.na));
    std::vector<Value> b(f.v.begin() + static_cast<std::ptrdiff_t>(f.na), f.v.end());
    return Configuration(f.shape, a, f.sink, b);
}

std::vector<std::uint32_t> subset_order(std::size_t count, SubsetOrder order) {
    std::vector<std::uint32_t> out;
    const std::uint32_t full = (std::uint32_t{1} << count) - 1;
    if (order == SubsetOrder::MaskDescending) {
        for (std::uint32_t mask = full; mask > 0; --mask) out.push_back(mask);
        return out;
    }
    std::function<void(std::size_t, std::size_t, std::uint32_t)> rec =
        [&](std::size_t start, std::size_t left, std::uint32_t mask) {
            if (left == 0) {
                out.push_back(mask);
                return;
            }
            for (std::size_t i = start; i + left <= count; ++i)
                rec(i + 1, left - 1, mask | (std::uint32_t{1} << i));
        };
    for (std::size_t k = 1; k <= count; ++k) rec(0, k, 0);
    return out;
}

// f - sign * Delta^(C) for the subset given by mask.
Flat move(const Flat& f, std::uint32_t mask, Value sign) {
    Value ca = 0, cb = 0;
    for (std::size_t i = 0; i < f.v.size(); ++i)
        if (mask >> i & 1) ++(i < f.na ? ca : cb);
    Flat g = f;
    for (std::size_t i = 0; i < g.v.size(); ++i) {
        bool a_side = i < f.na;
        Value gain = a_side ? cb : ca;
        Value deg = a_side ? f.shape.n : f.shape.m;
        Value delta = (mask >> i & 1) ? gain - deg : gain;
        g.v[i] = checked_add(g.v[i], checked_mul(sign, delta));
    }
    if (g.sink) g.sink = checked_add(*g.sink, checked_mul(sign, cb));
    return g;
}

bool nonneg(const Flat& f) {
    for (Value x : f.v)
        if (x < 0) return false;
    return true;
}

bool stable(const Flat& f) {
    for (std::size_t i = 0; i < f.v.size(); ++i) {
        Value deg = i < f.na ? f.shape.n : f.shape.m;
        if (f.v[i] < 0 || f.v[i] >= deg) return false;
    }
    return true;
}

// Brings every non-sink value to >= 0. Toppling the sink adds one to each b;
// toppling all of B and then the sink m times adds n to each non-sink a.
Flat lift(Flat f) {
    const Value m = f.shape.m, n = f.shape.n;
    for (;;) {
        bool a_neg = false, b_neg = false;
        for (std::size_t i = 0; i < f.v.size(); ++i)
            if (f.v[i] < 0) (i < f.na ? a_neg : b_neg) = true;
        if (!a_neg && !b_neg) return f;
        if (a_neg) {
            for (std::size_t i = 0; i < f.na; ++i) f.v[i] = checked_add(f.v[i], n);
            f.sink = checked_add(*f.sink, checked_sub(n, checked_mul(m, n)));
        } else {
            for (std::size_t i = f.na; i < f.v.size(); ++i) f.v[i] = checked_add(f.v[i], 1);
            f.sink = checked_sub(*f.sink, n);
        }
    }
}

Flat park_flat(const Flat& start, const std::vector<std::uint32_t>& order) {
    Flat f = lift(start);
    for (;;) {
        bool moved = false;
        for (std::uint32_t mask : order) {
            Flat g = move(f, mask, 1);
            if (nonneg(g)) {
                f = std::move(g);
                moved = true;
                break;
            }
        }
        if (!moved) return f;
    }
}

}  // namespace

bool is_parking_by_definition(const Configuration& u) {
    guard(u.shape);
    Flat f = flatten(u);
    if (!nonneg(f)) return false;
    for (std::uint32_t mask : subset_order(f.v.size(), SubsetOrder::SizeThenLex))
        if (nonneg(move(f, mask, 1))) return false;
    return true;
}

Configuration park_by_definition(const Configuration& u, SubsetOrder order) {
    guard(u.shape);
    u.sink_value();
    Flat f = flatten(u);
    return unflatten(park_flat(f, subset_order(f.v.size(), order)));
}

Value rank_by_definition(const Configuration& u, bool restrict_to_b) {
    guard(u.shape);
    const Value deg = degree(u);
    Flat base = flatten(u);
    const auto order = subset_order(base.v.size(), SubsetOrder::SizeThenLex);

    // Slots of f: every vertex (non-sink ones, then the sink), or only B.
    std::vector<std::size_t> slots;
    const std::size_t sink_slot = base.v.size();
    for (std::size_t i = restrict_to_b ? base.na : 0; i < base.v.size(); ++i) slots.push_back(i);
    if (!restrict_to_b) slots.push_back(sink_slot);

    // Level d holds the parked form of u - f for every f >= 0 of degree d.
    // Parked forms are unique per class, so distinct f in one class merge.
    auto key = [](const Flat& g) {
        std::vector<Value> k = g.v;
        k.push_back(*g.sink);
        return k;
    };
    std::map<std::vector<Value>, Flat> level;
    Flat p0 = park_flat(base, order);
    level.emplace(key(p0), p0);
    for (Value d = 0;; ++d) {
        if (d > std::max<Value>(deg, -1) + 1) throw InternalError("rank_by_definition: search ran past degree + 1");
        for (const auto& [k, g] : level)
            if (*g.sink < 0) return d - 1;
        std::map<std::vector<Value>, Flat> next;
        for (const auto& [k, g] : level) {
            for (std::size_t s : slots) {
                Flat h = g;
                if (s == sink_slot)
                    h.sink = *h.sink - 1;
                else
                    h.v[s] -= 1;
                Flat ph = park_flat(h, order);
                next.emplace(key(ph), std::move(ph));
            }
        }
        level = std::move(next);
    }
}

Configuration phi_by_definition(const Configuration& u) {
    guard(u.shape);
    if (!is_stable(u) || !is_sorted(u)) throw Error("phi_by_definition: expected a stable sorted configuration");
    Flat f = flatten(u);
    for (std::uint32_t mask : subset_order(f.v.size(), SubsetOrder::SizeThenLex)) {
        Flat g = move(f, mask, 1);
        if (stable(g)) return sort_config(unflatten(g));
    }
    return u;
}

Configuration psi_by_definition(const Configuration& u) {
    guard(u.shape);
    if (!is_stable(u) || !is_sorted(u)) throw Error("psi_by_definition: expected a stable sorted configuration");
    Flat f = flatten(u);
    for (std::uint32_t mask : subset_order(f.v.size(), SubsetOrder::SizeThenLex)) {
        Flat g = move(f, mask, -1);
        if (stable(g)) return sort_config(unflatten(g));
    }
    return u;
}

PolyominoCounts polyomino_bruteforce(int width_cap, int height_cap) {
    if (width_cap > 6 || height_cap > 6) throw Error("polyomino_bruteforce: caps above 6");
    PolyominoCounts out;
    for (int w = 1; w <= width_cap; ++w) {
        for (int h = 1; h <= height_cap; ++h) {
            const int len = w + h;
            // A path is a bitmask over its steps; bit set = north step.
            std::vector<std::uint32_t> paths;
            for (std::uint32_t p = 0; p < (std::uint32_t{1} << len); ++p)
                if (__builtin_popcount(p) == h) paths.push_back(p);
            auto vertices = [&](std::uint32_t p) {
                std::vector<std::pair<int, int>> pts{{0, 0}};
                int x = 0, y = 0;
                for (int s = 0; s < len; ++s) {
                    (p >> s & 1) ? ++y : ++x;
                    pts.emplace_back(x, y);
                }
                return pts;
            };
            auto column_heights = [&](std::uint32_t p) {
                std::vector<int> col;
                int y = 0;
                for (int s = 0; s < len; ++s) {
                    if (p >> s & 1)
                        ++y;
                    else
                        col.push_back(y);
                }
                return col;
            };
            for (std::uint32_t up : paths) {
                if (!(up & 1) || (up >> (len - 1) & 1)) continue;  // starts north, ends east
                auto up_pts = vertices(up);
                auto up_cols = column_heights(up);
                for (std::uint32_t lo : paths) {
                    if ((lo & 1) || !(lo >> (len - 1) & 1)) continue;  // starts east, ends north
                    auto lo_pts = vertices(lo);
                    bool touch = false;
                    for (const auto& p : up_pts) {
                        if (p == up_pts.front() || p == up_pts.back()) continue;
                        for (const auto& q : lo_pts)
                            if (p == q) touch = true;
                    }
                    if (touch) continue;
                    auto lo_cols = column_heights(lo);
                    int area = 0;
                    for (int c = 0; c < w; ++c) area += up_cols[c] - lo_cols[c];
                    ++out[{area, w, h}];
                }
            }
        }
    }
    return out;
}

}  // namespace sandpile::oracle
