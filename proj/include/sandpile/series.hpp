#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sandpile {

using BigInt = boost::multiprecision::cpp_int;

enum class Var : std::size_t { q = 0, x = 1, y = 2, w = 3, h = 4 };
inline constexpr std::size_t kVars = 5;
using Exponents = std::array<int, kVars>;

const char* var_name(Var v);

// Per-variable maximal exponents; a cap of 0 means the variable is unused.
struct Caps {
    std::array<int, kVars> max{};

    Caps() = default;
    Caps(std::initializer_list<std::pair<Var, int>> caps);

    int operator[](Var v) const { return max[static_cast<std::size_t>(v)]; }
    Caps with(Var v, int cap) const;
    bool contains(const Exponents& e) const;
    bool operator==(const Caps&) const = default;
};

Exponents exps(std::initializer_list<std::pair<Var, int>> e);

// Power series in q, x, y, w, h truncated per variable, with exact integer
// coefficients. Stored densely over the cap box; the box index order is the
// lexicographic order of exponent tuples.
class TruncatedSeries {
public:
    explicit TruncatedSeries(const Caps& caps);

    static TruncatedSeries constant(const Caps& caps, const BigInt& c);
    static TruncatedSeries monomial(const Caps& caps, const Exponents& e, const BigInt& c = 1);
    static TruncatedSeries variable(const Caps& caps, Var v);

    const Caps& caps() const { return caps_; }

    BigInt coefficient(const Exponents& e) const;  // throws outside the caps
    // Adds c x^e; terms outside the caps are dropped and false is returned.
    bool add_term(const Exponents& e, const BigInt& c);

    std::size_t nonzero_terms() const;
    // Nonzero terms in lexicographic exponent order.
    std::vector<std::pair<Exponents, BigInt>> terms() const;
    // One "x^a y^b ...: c" line per nonzero term, over the capped variables.
    std::string dump() const;

    TruncatedSeries operator-() const;
    TruncatedSeries& operator+=(const TruncatedSeries& g);
    TruncatedSeries& operator-=(const TruncatedSeries& g);
    TruncatedSeries& operator*=(const BigInt& c);
    bool operator==(const TruncatedSeries& g) const;

    friend TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g);
    friend TruncatedSeries geom_inverse(const TruncatedSeries& f);

private:
    std::size_t index(const Exponents& e) const;
    Exponents decode(std::size_t idx) const;
    void require_same_caps(const TruncatedSeries& g) const;

    Caps caps_;
    std::array<std::size_t, kVars> stride_{};
    std::vector<BigInt> c_;
};

TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries sub(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g);
// Inverse of a series with constant term 1.
TruncatedSeries geom_inverse(const TruncatedSeries& f);
BigInt coefficient(const TruncatedSeries& f, const Exponents& e);

TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g);

}  // namespace sandpile
