#include <doctest.h>

#include "helpers.hpp"
#include "k53_tables.hpp"
#include "sandpile/cylindric.hpp"
#include "sandpile/genfunc.hpp"
#include "sandpile/oracle.hpp"
#include "sandpile/rank.hpp"

using namespace sandpile;

namespace {

Caps xy(int cap) { return Caps{{Var::x, cap}, {Var::y, cap}}; }

BigInt at(const TruncatedSeries& f, std::initializer_list<std::pair<Var, int>> e) { return f.coefficient(exps(e)); }

}  // namespace

TEST_CASE("parking family") {
    for (Value m = 1; m <= 4; ++m)
        for (Value n = 1; n <= 4; ++n) {
            GraphShape s(m, n);
            std::vector<Configuration> expect;
            for (const Configuration& u : testkit::stable_sorted(s))
                if (oracle::is_parking_by_definition(u)) expect.push_back(u);
            CHECK(enumerate_parking_sorted(s).configs == expect);
        }
    CHECK(enumerate_parking_sorted(GraphShape(5, 3)).configs.size() == 105);
    for (Value n = 1; n <= 6; ++n) {
        auto f = enumerate_parking_sorted(GraphShape(1, n)).configs;
        REQUIRE(f.size() == 1);
        CHECK(f[0].b == std::vector<Value>(static_cast<std::size_t>(n), 0));
    }
    CHECK_THROWS_AS(enumerate_parking_sorted(GraphShape(40, 40)), Error);
}

TEST_CASE("degree-rank table of K_{5,3}") {
    DegreeRankTable t = k_tilde_table(GraphShape(5, 3), -3, 17);
    for (auto [d, r, c] : testkit::parse_triples(kK53DegreeRank)) {
        INFO("d=" << d << " r=" << r);
        CHECK(t[{d, r}] == c);
    }
    // Far below the smallest degree every sink gives rank -1.
    DegreeRankTable low = k_tilde_table(GraphShape(5, 3), -30, -20);
    for (Value d = -30; d <= -20; ++d) CHECK(low[{d, -1}] == 105);

    // Change of variables between the two tables.
    const GraphShape s(5, 3);
    TruncatedSeries k = k_xy_table(s, xy(10));
    const Value g = (s.m - 1) * (s.n - 1);
    for (const auto& [key, c] : t) {
        auto [d, r] = key;
        Value xp = g + r - d, yp = r + 1;
        if (xp <= 10 && yp <= 10) CHECK(at(k, {{Var::x, static_cast<int>(xp)}, {Var::y, static_cast<int>(yp)}}) == c);
    }
}

TEST_CASE("xpara-ypara table of K_{5,3}") {
    TruncatedSeries k = k_xy_table(GraphShape(5, 3), xy(10));
    for (auto [x, y, c] : testkit::parse_triples(kK53XY)) {
        INFO("x=" << x << " y=" << y);
        CHECK(at(k, {{Var::x, static_cast<int>(x)}, {Var::y, static_cast<int>(y)}}) == c);
    }
}

TEST_CASE("x-y symmetry") {
    for (Value m = 1; m <= 5; ++m)
        for (Value n = 1; n <= 5; ++n) {
            TruncatedSeries k = k_xy_table(GraphShape(m, n), xy(10));
            for (int a = 0; a <= 10; ++a)
                for (int b = 0; b < a; ++b)
                    CHECK(at(k, {{Var::x, a}, {Var::y, b}}) == at(k, {{Var::x, b}, {Var::y, a}}));
        }
}

TEST_CASE("F_u sums to the table") {
    for (GraphShape s : {GraphShape(4, 3), GraphShape(3, 4), GraphShape(2, 2)}) {
        TruncatedSeries total(xy(8));
        for (const Configuration& u : enumerate_parking_sorted(s).configs) total += f_u_series(u, xy(8));
        CHECK(total == k_xy_table(s, xy(8)));
    }
}

TEST_CASE("polyomino series") {
    Caps c{{Var::q, 10}, {Var::w, 5}, {Var::h, 5}};
    TruncatedSeries p = polyomino_series({}, c);
    CHECK(at(p, {{Var::q, 1}, {Var::w, 1}, {Var::h, 1}}) == 1);
    CHECK(at(p, {{Var::q, 2}, {Var::w, 1}, {Var::h, 2}}) == 1);
    CHECK(at(p, {{Var::q, 2}, {Var::w, 2}, {Var::h, 1}}) == 1);

    oracle::PolyominoCounts brute = oracle::polyomino_bruteforce(5, 5);
    for (const auto& [key, count] : brute) {
        auto [area, width, height] = key;
        if (area <= 10) CHECK(at(p, {{Var::q, area}, {Var::w, width}, {Var::h, height}}) == count);
    }

    TruncatedSeries q = TruncatedSeries::variable(c, Var::q), h = TruncatedSeries::variable(c, Var::h),
                    w = TruncatedSeries::variable(c, Var::w);
    TruncatedSeries p_qh = polyomino_series({Var::q, HeightTwist::Plus}, c);
    CHECK(p == (q * h + p_qh) * (w + p));
}

TEST_CASE("L quotient") {
    Caps c{{Var::q, 10}, {Var::w, 5}, {Var::h, 5}};
    TruncatedSeries l = l_series(c);
    CHECK(l.coefficient(exps({})) == 1);
    // Terms of L with m = 1, n = 0: -q / (1-q).
    for (int k = 1; k <= 10; ++k) CHECK(at(l, {{Var::q, k}, {Var::w, 1}}) == -1);
    CHECK(p_via_l(c) == polyomino_series({}, c));
}

TEST_CASE("boundary series") {
    Caps c{{Var::x, 6}, {Var::y, 6}, {Var::w, 4}, {Var::h, 4}};
    BoundarySeries direct = boundary_series(c);
    BoundarySeries closed = boundary_series_closed(c);
    CHECK(direct.minus == closed.minus);
    CHECK(direct.plus == closed.plus);
    CHECK(compare_series(direct.plus, closed.plus).pass);
}

TEST_CASE("main identity") {
    Caps small{{Var::x, 3}, {Var::y, 3}, {Var::w, 1}, {Var::h, 1}};
    TruncatedSeries lhs = gf_lhs(small), rhs = gf_rhs(small);
    // K_{1,1}: one parking configuration, F = sum over the sink values.
    CHECK(at(lhs, {{Var::w, 1}, {Var::h, 1}}) == 1);
    CHECK(lhs == rhs);

    Caps c{{Var::x, 8}, {Var::y, 8}, {Var::w, 5}, {Var::h, 5}};
    TruncatedSeries f = gf_rhs(c);
    CHECK(at(f, {{Var::w, 5}, {Var::h, 3}}) == 15);
    for (auto [x, y, count] : testkit::parse_triples(kK53XY))
        if (x <= 8 && y <= 8)
            CHECK(at(f, {{Var::x, static_cast<int>(x)}, {Var::y, static_cast<int>(y)}, {Var::w, 5}, {Var::h, 3}}) ==
                  count);
    GfReport r = verify_gf_theorem(c);
    CHECK(r.pass);
    CHECK(r.text().rfind("PASS", 0) == 0);

    TruncatedSeries off = lhs;
    off.add_term(exps({{Var::x, 2}, {Var::w, 1}, {Var::h, 1}}), 1);
    GfReport bad = compare_series(off, rhs);
    CHECK_FALSE(bad.pass);
    REQUIRE(bad.mismatch);
    CHECK(bad.mismatch->lhs == bad.mismatch->rhs + 1);
    CHECK(bad.text().find("x^2") != std::string::npos);
}
