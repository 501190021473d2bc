#include "sandpile/series.hpp"

#include <sstream>

#include "sandpile/core.hpp"

namespace sandpile {

const char* var_name(Var v) {
    switch (v) {
        case Var::q: return "q";
        case Var::x: return "x";
        case Var::y: return "y";
        case Var::w: return "w";
        case Var::h: return "h";
    }
    return "?";
}

Caps::Caps(std::initializer_list<std::pair<Var, int>> caps) {
    for (auto [v, c] : caps) {
        if (c < 0) throw Error("negative series cap");
        max[static_cast<std::size_t>(v)] = c;
    }
}

Caps Caps::with(Var v, int cap) const {
    if (cap < 0) throw Error("negative series cap");
    Caps c = *this;
    c.max[static_cast<std::size_t>(v)] = cap;
    return c;
}

bool Caps::contains(const Exponents& e) const {
    for (std::size_t i = 0; i < kVars; ++i)
        if (e[i] < 0 || e[i] > max[i]) return false;
    return true;
}

Exponents exps(std::initializer_list<std::pair<Var, int>> e) {
    Exponents out{};
    for (auto [v, k] : e) out[static_cast<std::size_t>(v)] = k;
    return out;
}

TruncatedSeries::TruncatedSeries(const Caps& caps) : caps_(caps) {
    std::size_t size = 1;
    for (std::size_t i = kVars; i-- > 0;) {
        if (caps_.max[i] < 0) throw Error("negative series cap");
        stride_[i] = size;
        size *= static_cast<std::size_t>(caps_.max[i]) + 1;
    }
    c_.assign(size, BigInt(0));
}

TruncatedSeries TruncatedSeries::constant(const Caps& caps, const BigInt& c) {
    TruncatedSeries s(caps);
    s.c_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(const Caps& caps, const Exponents& e, const BigInt& c) {
    TruncatedSeries s(caps);
    s.add_term(e, c);
    return s;
}

TruncatedSeries TruncatedSeries::variable(const Caps& caps, Var v) {
    Exponents e{};
    e[static_cast<std::size_t>(v)] = 1;
    return monomial(caps, e);
}

std::size_t TruncatedSeries::index(const Exponents& e) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < kVars; ++i) idx += static_cast<std::size_t>(e[i]) * stride_[i];
    return idx;
}

Exponents TruncatedSeries::decode(std::size_t idx) const {
    Exponents e{};
    for (std::size_t i = 0; i < kVars; ++i) {
        e[i] = static_cast<int>(idx / stride_[i]);
        idx %= stride_[i];
    }
    return e;
}

void TruncatedSeries::require_same_caps(const TruncatedSeries& g) const {
    if (!(caps_ == g.caps_)) throw Error("series cap mismatch");
}

BigInt TruncatedSeries::coefficient(const Exponents& e) const {
    if (!caps_.contains(e)) throw Error("coefficient query outside the series caps");
    return c_[index(e)];
}

bool TruncatedSeries::add_term(const Exponents& e, const BigInt& c) {
    if (!caps_.contains(e)) return false;
    c_[index(e)] += c;
    return true;
}

std::size_t TruncatedSeries::nonzero_terms() const {
    std::size_t k = 0;
    for (const BigInt& c : c_)
        if (!c.is_zero()) ++k;
    return k;
}

std::vector<std::pair<Exponents, BigInt>> TruncatedSeries::terms() const {
    std::vector<std::pair<Exponents, BigInt>> out;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) out.emplace_back(decode(i), c_[i]);
    return out;
}

std::string TruncatedSeries::dump() const {
    std::ostringstream out;
    for (const auto& [e, c] : terms()) {
        bool first = true;
        for (std::size_t i = 0; i < kVars; ++i) {
            if (caps_.max[i] == 0) continue;
            out << (first ? "" : " ") << var_name(static_cast<Var>(i)) << "^" << e[i];
            first = false;
        }
        out << (first ? "1: " : ": ") << c << "\n";
    }
    return out.str();
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries s = *this;
    for (BigInt& c : s.c_) c = -c;
    return s;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& g) {
    require_same_caps(g);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += g.c_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& g) {
    require_same_caps(g);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= g.c_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const BigInt& c) {
    for (BigInt& x : c_) x *= c;
    return *this;
}

bool TruncatedSeries::operator==(const TruncatedSeries& g) const {
    return caps_ == g.caps_ && c_ == g.c_;
}

namespace {

// Calls fn(offset) for every exponent tuple in the box [0, lim], where
// offset is its linear index under the given strides.
template <class Fn>
void for_box(const Exponents& lim, const std::array<std::size_t, kVars>& stride, Fn&& fn) {
    for (int e0 = 0; e0 <= lim[0]; ++e0)
        for (int e1 = 0; e1 <= lim[1]; ++e1)
            for (int e2 = 0; e2 <= lim[2]; ++e2)
                for (int e3 = 0; e3 <= lim[3]; ++e3) {
                    std::size_t base = e0 * stride[0] + e1 * stride[1] + e2 * stride[2] + e3 * stride[3];
                    for (int e4 = 0; e4 <= lim[4]; ++e4) fn(base + static_cast<std::size_t>(e4) * stride[4]);
                }
}

}  // namespace

TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g) {
    f.require_same_caps(g);
    TruncatedSeries out(f.caps_);
    for (std::size_t i = 0; i < f.c_.size(); ++i) {
        if (f.c_[i].is_zero()) continue;
        Exponents e = f.decode(i);
        Exponents lim;
        for (std::size_t v = 0; v < kVars; ++v) lim[v] = f.caps_.max[v] - e[v];
        const BigInt& a = f.c_[i];
        for_box(lim, f.stride_, [&](std::size_t j) {
            if (!g.c_[j].is_zero()) out.c_[i + j] += a * g.c_[j];
        });
    }
    return out;
}

// Solves f * g = 1 degree by degree: g_e = -sum_{0 < e' <= e} f_{e'} g_{e-e'}.
TruncatedSeries geom_inverse(const TruncatedSeries& f) {
    if (f.c_[0] != 1) throw Error("geom_inverse: constant term must be 1");
    TruncatedSeries g(f.caps_);
    g.c_[0] = 1;
    for (std::size_t idx = 1; idx < g.c_.size(); ++idx) {
        Exponents e = g.decode(idx);
        BigInt acc = 0;
        for_box(e, g.stride_, [&](std::size_t j) {
            if (j != 0 && !f.c_[j].is_zero()) acc -= f.c_[j] * g.c_[idx - j];
        });
        g.c_[idx] = std::move(acc);
    }
    return g;
}

TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g) {
    TruncatedSeries s = f;
    s += g;
    return s;
}

TruncatedSeries sub(const TruncatedSeries& f, const TruncatedSeries& g) {
    TruncatedSeries s = f;
    s -= g;
    return s;
}

BigInt coefficient(const TruncatedSeries& f, const Exponents& e) { return f.coefficient(e); }

TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g) { return add(f, g); }
TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g) { return sub(f, g); }
TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g) { return mul(f, g); }

}  // namespace sandpile
