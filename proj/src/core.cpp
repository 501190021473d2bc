#include "sandpile/core.hpp"

#include <sstream>

#include "sandpile/rank.hpp"

namespace sandpile {

Value checked_add(Value x, Value y) {
    Value r;
    if (__builtin_add_overflow(x, y, &r))
        throw OverflowError("integer overflow in " + std::to_string(x) + " + " + std::to_string(y));
    return r;
}

Value checked_sub(Value x, Value y) {
    Value r;
    if (__builtin_sub_overflow(x, y, &r))
        throw OverflowError("integer overflow in " + std::to_string(x) + " - " + std::to_string(y));
    return r;
}

Value checked_mul(Value x, Value y) {
    Value r;
    if (__builtin_mul_overflow(x, y, &r))
        throw OverflowError("integer overflow in " + std::to_string(x) + " * " + std::to_string(y));
    return r;
}

DivMod floor_divmod(Value x, Value d) {
    if (d <= 0) throw Error("floor_divmod: divisor must be positive");
    Value q = x / d;
    Value r = x % d;
    if (r < 0) {
        r += d;
        --q;
    }
    return {q, r};
}

GraphShape::GraphShape(Value m_, Value n_) : m(m_), n(n_) {
    if (m < 1 || n < 1)
        throw Error("graph shape needs m >= 1 and n >= 1, got m=" + std::to_string(m) +
                    " n=" + std::to_string(n));
}

Configuration::Configuration(GraphShape s, std::vector<Value> a_, std::optional<Value> sink_,
                             std::vector<Value> b_)
    : shape(s), a(std::move(a_)), sink(sink_), b(std::move(b_)) {
    if (a.size() != shape.a_len())
        throw Error("configuration: expected " + std::to_string(shape.a_len()) +
                    " a-values, got " + std::to_string(a.size()));
    if (b.size() != shape.b_len())
        throw Error("configuration: expected " + std::to_string(shape.b_len()) +
                    " b-values, got " + std::to_string(b.size()));
}

Configuration Configuration::zero(GraphShape s) {
    return Configuration(s, std::vector<Value>(s.a_len(), 0), Value{0},
                         std::vector<Value>(s.b_len(), 0));
}

Value Configuration::sink_value() const {
    if (!sink) throw Error("partial configuration: sink value required");
    return *sink;
}

Configuration Configuration::with_sink(std::optional<Value> s) const {
    Configuration c = *this;
    c.sink = s;
    return c;
}

std::string to_string(const Configuration& u) {
    std::ostringstream out;
    out << "<";
    for (std::size_t i = 0; i < u.a.size(); ++i) out << (i ? "," : "") << u.a[i];
    out << ";";
    if (u.sink)
        out << *u.sink;
    else
        out << "*";
    out << "|";
    for (std::size_t j = 0; j < u.b.size(); ++j) out << (j ? "," : "") << u.b[j];
    out << ">";
    return out.str();
}

bool is_sink(const GraphShape& s, Vertex v) {
    return v.part == Part::A && v.index == s.a_len();
}

Value vertex_degree(const GraphShape& s, Vertex v) {
    return v.part == Part::A ? s.n : s.m;
}

static void check_vertex(const GraphShape& s, Vertex v) {
    std::size_t limit = v.part == Part::A ? s.a_len() + 1 : s.b_len();
    if (v.index >= limit) throw Error("invalid vertex id");
}

Value degree(const Configuration& u) {
    Value d = u.sink_value();
    for (Value x : u.a) d = checked_add(d, x);
    for (Value x : u.b) d = checked_add(d, x);
    return d;
}

Configuration topple(const Configuration& u, Vertex v) {
    check_vertex(u.shape, v);
    u.sink_value();
    Configuration w = u;
    if (v.part == Part::A) {
        if (is_sink(u.shape, v))
            w.sink = checked_sub(*w.sink, u.shape.n);
        else
            w.a[v.index] = checked_sub(w.a[v.index], u.shape.n);
        for (Value& x : w.b) x = checked_add(x, 1);
    } else {
        w.b[v.index] = checked_sub(w.b[v.index], u.shape.m);
        for (Value& x : w.a) x = checked_add(x, 1);
        w.sink = checked_add(*w.sink, 1);
    }
    return w;
}

Configuration topple_set(const Configuration& u, const std::vector<Vertex>& c) {
    Value in_a = 0, in_b = 0;
    std::vector<char> a_member(u.a.size(), 0), b_member(u.b.size(), 0);
    for (Vertex v : c) {
        check_vertex(u.shape, v);
        if (is_sink(u.shape, v)) throw Error("topple_set: set contains the sink");
        char& slot = v.part == Part::A ? a_member[v.index] : b_member[v.index];
        if (slot) throw Error("topple_set: repeated vertex");
        slot = 1;
        ++(v.part == Part::A ? in_a : in_b);
    }
    Configuration w = u;
    for (std::size_t i = 0; i < w.a.size(); ++i) {
        w.a[i] = checked_add(w.a[i], in_b);
        if (a_member[i]) w.a[i] = checked_sub(w.a[i], u.shape.n);
    }
    if (w.sink) w.sink = checked_add(*w.sink, in_b);
    for (std::size_t j = 0; j < w.b.size(); ++j) {
        w.b[j] = checked_add(w.b[j], in_a);
        if (b_member[j]) w.b[j] = checked_sub(w.b[j], u.shape.m);
    }
    return w;
}

bool is_quasi_stable(const Configuration& u) {
    for (Value x : u.a)
        if (x >= u.shape.n) return false;
    for (Value x : u.b)
        if (x >= u.shape.m) return false;
    return true;
}

bool is_stable(const Configuration& u) {
    for (Value x : u.a)
        if (x < 0 || x >= u.shape.n) return false;
    for (Value x : u.b)
        if (x < 0 || x >= u.shape.m) return false;
    return true;
}

bool is_sorted(const Configuration& u) {
    for (std::size_t i = 1; i < u.a.size(); ++i)
        if (u.a[i - 1] > u.a[i]) return false;
    for (std::size_t j = 1; j < u.b.size(); ++j)
        if (u.b[j - 1] > u.b[j]) return false;
    return true;
}

// b_j = q_j m + b'_j, then a_i + sum(q) = q'_i n + a'_i; the sink absorbs the
// difference so the degree is unchanged.
Configuration stabilize_equiv(const Configuration& u) {
    const Value m = u.shape.m, n = u.shape.n;
    const Value total = degree(u);
    Configuration w = u;
    Value q_sum = 0;
    Value rest = 0;
    for (Value& x : w.b) {
        DivMod d = floor_divmod(x, m);
        q_sum = checked_add(q_sum, d.q);
        x = d.r;
        rest = checked_add(rest, x);
    }
    for (Value& x : w.a) {
        DivMod d = floor_divmod(checked_add(x, q_sum), n);
        x = d.r;
        rest = checked_add(rest, x);
    }
    w.sink = checked_sub(total, rest);
    return w;
}

std::vector<std::size_t> counting_sort_indices(Value bound, const std::vector<Value>& w) {
    if (bound < 0) throw Error("counting_sort: negative bound");
    std::vector<std::size_t> start(static_cast<std::size_t>(bound) + 2, 0);
    for (Value x : w) {
        if (x < 0 || x > bound)
            throw Error("counting_sort: value " + std::to_string(x) + " outside [0," +
                        std::to_string(bound) + "]");
        ++start[static_cast<std::size_t>(x) + 1];
    }
    for (std::size_t k = 1; k < start.size(); ++k) start[k] += start[k - 1];
    std::vector<std::size_t> perm(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) perm[start[static_cast<std::size_t>(w[i])]++] = i;
    return perm;
}

std::vector<Value> counting_sort(Value bound, const std::vector<Value>& w) {
    if (bound < 0) throw Error("counting_sort: negative bound");
    std::vector<std::size_t> count(static_cast<std::size_t>(bound) + 1, 0);
    for (Value x : w) {
        if (x < 0 || x > bound)
            throw Error("counting_sort: value " + std::to_string(x) + " outside [0," +
                        std::to_string(bound) + "]");
        ++count[static_cast<std::size_t>(x)];
    }
    std::vector<Value> out;
    out.reserve(w.size());
    for (std::size_t v = 0; v < count.size(); ++v) out.insert(out.end(), count[v], static_cast<Value>(v));
    return out;
}

Configuration sort_config(const Configuration& u) {
    if (!is_stable(u)) throw Error("sort_config: configuration is not stable " + to_string(u));
    Configuration w = u;
    w.a = counting_sort(u.shape.n - 1, u.a);
    w.b = counting_sort(u.shape.m - 1, u.b);
    return w;
}

bool is_effective(const Configuration& u) {
    return park_sort(u).sink_value() >= 0;
}

static Configuration combine(const Configuration& u, const Configuration& v, bool minus) {
    if (!(u.shape == v.shape)) throw Error("shape mismatch");
    auto op = [minus](Value x, Value y) { return minus ? checked_sub(x, y) : checked_add(x, y); };
    Configuration w = u;
    for (std::size_t i = 0; i < w.a.size(); ++i) w.a[i] = op(u.a[i], v.a[i]);
    for (std::size_t j = 0; j < w.b.size(); ++j) w.b[j] = op(u.b[j], v.b[j]);
    if (u.sink && v.sink)
        w.sink = op(*u.sink, *v.sink);
    else
        w.sink.reset();
    return w;
}

Configuration add(const Configuration& u, const Configuration& v) { return combine(u, v, false); }
Configuration subtract(const Configuration& u, const Configuration& v) { return combine(u, v, true); }

}  // namespace sandpile
