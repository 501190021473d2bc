#include <doctest.h>

#include <random>

#include "sandpile/core.hpp"
#include "sandpile/series.hpp"

using namespace sandpile;

namespace {

TruncatedSeries random_sparse(const Caps& caps, std::mt19937_64& rng, int terms, bool unit) {
    TruncatedSeries f = TruncatedSeries::constant(caps, unit ? 1 : static_cast<int>(rng() % 5) - 2);
    for (int k = 0; k < terms; ++k) {
        Exponents e{};
        for (std::size_t v = 0; v < kVars; ++v) e[v] = caps.max[v] ? static_cast<int>(rng() % (caps.max[v] + 1)) : 0;
        if (unit && e == Exponents{}) continue;
        f.add_term(e, static_cast<int>(rng() % 9) - 4);
    }
    return f;
}

}  // namespace

TEST_CASE("caps and storage") {
    Caps c{{Var::x, 2}, {Var::y, 1}};
    CHECK(c[Var::x] == 2);
    CHECK(c[Var::q] == 0);
    CHECK(c.contains(exps({{Var::x, 2}, {Var::y, 1}})));
    CHECK_FALSE(c.contains(exps({{Var::x, 3}})));
    CHECK(c.with(Var::w, 4)[Var::w] == 4);

    TruncatedSeries f(c);
    CHECK(f.nonzero_terms() == 0);
    CHECK(f.add_term(exps({{Var::x, 1}}), 3));
    CHECK_FALSE(f.add_term(exps({{Var::x, 3}}), 3));
    CHECK(f.coefficient(exps({{Var::x, 1}})) == 3);
    CHECK(coefficient(f, exps({})) == 0);
    CHECK_THROWS_AS(f.coefficient(exps({{Var::h, 1}})), Error);
    CHECK(f.dump() == "x^1 y^0: 3\n");
    CHECK(TruncatedSeries::constant(c, 2).dump() == "x^0 y^0: 2\n");
}

TEST_CASE("add and mul") {
    Caps c{{Var::x, 3}, {Var::y, 3}};
    TruncatedSeries one = TruncatedSeries::constant(c, 1), zero(c);
    TruncatedSeries x = TruncatedSeries::variable(c, Var::x), y = TruncatedSeries::variable(c, Var::y);
    TruncatedSeries p = (one + x) * (one + y);
    CHECK(p == one + x + y + x * y);
    CHECK(p.nonzero_terms() == 4);
    CHECK(p + zero == p);
    CHECK(p * one == p);
    CHECK(p - p == zero);
    CHECK(-p + p == zero);
    // x^2 * x^2 falls outside the caps.
    CHECK((x * x) * (x * x) == zero);
    CHECK_THROWS_AS(add(p, TruncatedSeries(Caps{{Var::x, 3}})), Error);

    std::mt19937_64 rng(7);
    Caps big{{Var::q, 3}, {Var::x, 2}, {Var::w, 2}, {Var::h, 2}};
    for (int it = 0; it < 30; ++it) {
        TruncatedSeries f = random_sparse(big, rng, 6, false);
        TruncatedSeries g = random_sparse(big, rng, 6, false);
        TruncatedSeries h = random_sparse(big, rng, 6, false);
        CHECK(f * g == g * f);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK(f + g == g + f);
    }
}

TEST_CASE("schoolbook convolution") {
    Caps c{{Var::x, 4}, {Var::y, 4}};
    std::mt19937_64 rng(13);
    for (int it = 0; it < 20; ++it) {
        long a[5][5], b[5][5];
        TruncatedSeries f(c), g(c);
        for (int i = 0; i <= 4; ++i)
            for (int j = 0; j <= 4; ++j) {
                a[i][j] = static_cast<long>(rng() % 21) - 10;
                b[i][j] = static_cast<long>(rng() % 21) - 10;
                f.add_term(exps({{Var::x, i}, {Var::y, j}}), a[i][j]);
                g.add_term(exps({{Var::x, i}, {Var::y, j}}), b[i][j]);
            }
        TruncatedSeries p = f * g;
        for (int i = 0; i <= 4; ++i)
            for (int j = 0; j <= 4; ++j) {
                long s = 0;
                for (int k = 0; k <= i; ++k)
                    for (int l = 0; l <= j; ++l) s += a[k][l] * b[i - k][j - l];
                CHECK(p.coefficient(exps({{Var::x, i}, {Var::y, j}})) == s);
            }
    }
}

TEST_CASE("geometric inverse") {
    Caps c{{Var::x, 6}, {Var::y, 6}};
    TruncatedSeries one = TruncatedSeries::constant(c, 1);
    TruncatedSeries x = TruncatedSeries::variable(c, Var::x), y = TruncatedSeries::variable(c, Var::y);
    TruncatedSeries g = geom_inverse(one - x);
    for (int k = 0; k <= 6; ++k) {
        CHECK(g.coefficient(exps({{Var::x, k}})) == 1);
        CHECK(g.coefficient(exps({{Var::x, k}, {Var::y, 1}})) == 0);
    }
    TruncatedSeries h = (one - x * y) * geom_inverse((one - x) * (one - y));
    for (int a = 0; a <= 6; ++a)
        for (int b = 0; b <= 6; ++b)
            CHECK(h.coefficient(exps({{Var::x, a}, {Var::y, b}})) == (a == 0 || b == 0 ? 1 : 0));
    CHECK_THROWS_AS(geom_inverse(x), Error);

    std::mt19937_64 rng(19);
    Caps big{{Var::q, 4}, {Var::w, 3}, {Var::h, 3}};
    for (int it = 0; it < 30; ++it) {
        TruncatedSeries f = random_sparse(big, rng, 8, true);
        TruncatedSeries inv = geom_inverse(f);
        CHECK(f * inv == TruncatedSeries::constant(big, 1));
        CHECK(inv.coefficient(exps({})) == 1);
    }

    // Coefficients grow past 64 bits without loss.
    Caps q{{Var::q, 60}};
    TruncatedSeries t = geom_inverse(TruncatedSeries::constant(q, 1) - TruncatedSeries::monomial(q, exps({{Var::q, 1}}), 4));
    BigInt expect = 1;
    for (int k = 0; k < 60; ++k) expect *= 4;
    CHECK(t.coefficient(exps({{Var::q, 60}})) == expect);
}
