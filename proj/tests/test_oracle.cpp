#include <doctest.h>

#include <functional>
#include <random>

#include "helpers.hpp"
#include "sandpile/genfunc.hpp"
#include "sandpile/oracle.hpp"
#include "sandpile/rank.hpp"

using namespace sandpile;
using testkit::cfg;

TEST_CASE("parking by definition") {
    CHECK(oracle::is_parking_by_definition(cfg(7, 5, {0, 0, 0, 3, 3, 3}, std::nullopt, {0, 0, 0, 3, 3})));
    CHECK_FALSE(oracle::is_parking_by_definition(cfg(3, 3, {2, 2}, std::nullopt, {2, 2, 2})));
    for (const Configuration& u : testkit::stable_sorted(GraphShape(3, 2)))
        CHECK(oracle::is_parking_by_definition(u) == is_parking_sorted(u));
    CHECK_THROWS_AS(oracle::is_parking_by_definition(Configuration::zero(GraphShape(11, 11))), Error);
}

TEST_CASE("park by definition") {
    Configuration p = cfg(7, 5, {0, 0, 0, 3, 3, 3}, 4, {0, 0, 0, 3, 3});
    CHECK(oracle::park_by_definition(p) == p);
    for (const Configuration& s : testkit::stable_sorted(GraphShape(2, 2)))
        for (Value sink = -4; sink <= 8; ++sink) {
            Configuration u = s.with_sink(sink);
            Configuration a = oracle::park_by_definition(u, oracle::SubsetOrder::SizeThenLex);
            Configuration b = oracle::park_by_definition(u, oracle::SubsetOrder::MaskDescending);
            CHECK(degree(a) == degree(u));
            // The parking representative does not depend on the subset order.
            CHECK(sort_config(a) == sort_config(b));
            CHECK(sort_config(a) == park_sort_fast(sort_config(stabilize_equiv(u))));
        }
    // Inputs with negative non-sink values are lifted first.
    Configuration neg = cfg(3, 2, {-4, 1}, 2, {-7, 0});
    CHECK(sort_config(oracle::park_by_definition(neg)) == park_sort(neg));
}

TEST_CASE("rank by definition") {
    CHECK(oracle::rank_by_definition(cfg(3, 2, {0, 0}, -3, {0, 0})) == -1);
    CHECK(oracle::rank_by_definition(cfg(7, 5, {0, 0, 0, 3, 3, 3}, 3, {0, 0, 0, 3, 3}), true) ==
          rank_of(cfg(7, 5, {0, 0, 0, 3, 3, 3}, 3, {0, 0, 0, 3, 3})));
    for (const Configuration& s : testkit::stable_sorted(GraphShape(2, 2)))
        for (Value sink = -2; sink <= 8; ++sink) {
            Configuration u = s.with_sink(sink);
            const Value r = oracle::rank_by_definition(u);
            CHECK(r == rank_of(u));
            // Witnesses supported on B suffice.
            CHECK(oracle::rank_by_definition(u, true) == r);
        }
}

TEST_CASE("phi and psi by definition on the worked chain") {
    Configuration u = cfg(7, 5, {0, 0, 0, 2, 2, 2}, std::nullopt, {1, 1, 5, 5, 5});
    CHECK(oracle::phi_by_definition(u) == cfg(7, 5, {0, 0, 0, 3, 3, 3}, std::nullopt, {1, 1, 1, 4, 4}));
}

TEST_CASE("polyomino brute force") {
    oracle::PolyominoCounts c = oracle::polyomino_bruteforce(5, 5);
    CHECK(c.at({1, 1, 1}) == 1);
    CHECK(c.at({2, 2, 1}) == 1);
    CHECK(c.at({2, 1, 2}) == 1);
    // 2x2 bounding box: the square and the two dominoes-with-a-step.
    CHECK(c.at({3, 2, 2}) == 2);
    CHECK(c.at({4, 2, 2}) == 1);

    PolyominoTable dp = polyomino_counts(5, 5, 25);
    std::size_t nonzero = 0;
    for (const auto& [key, count] : dp)
        if (count != 0) ++nonzero;
    CHECK(nonzero == c.size());
    for (const auto& [key, count] : c) CHECK(dp.at(key) == count);

    // Per bounding box the total is a Narayana number N(w+h-1, w).
    std::map<std::pair<int, int>, std::uint64_t> per_box;
    for (const auto& [key, count] : c) per_box[{std::get<1>(key), std::get<2>(key)}] += count;
    CHECK(per_box.at({3, 3}) == 20);
    CHECK(per_box.at({2, 4}) == 10);
    CHECK(per_box.at({1, 5}) == 1);
    CHECK_THROWS_AS(oracle::polyomino_bruteforce(7, 2), Error);
}

namespace {

// Plain search over every composition f of d, one vertex at a time.
Value rank_by_compositions(const Configuration& u) {
    const std::size_t na = u.a.size(), nb = u.b.size();
    const std::size_t slots = na + nb + 1;
    std::vector<Value> f(slots, 0);
    auto effective = [&] {
        Configuration g = u;
        for (std::size_t i = 0; i < na; ++i) g.a[i] -= f[i];
        for (std::size_t j = 0; j < nb; ++j) g.b[j] -= f[na + j];
        *g.sink -= f[slots - 1];
        return oracle::park_by_definition(g).sink_value() >= 0;
    };
    for (Value d = 0;; ++d) {
        bool witness = false;
        std::function<void(std::size_t, Value)> rec = [&](std::size_t k, Value left) {
            if (witness) return;
            if (k + 1 == slots) {
                f[k] = left;
                witness = !effective();
                return;
            }
            for (Value x = 0; x <= left && !witness; ++x) {
                f[k] = x;
                rec(k + 1, left - x);
            }
            f[k] = 0;
        };
        rec(0, d);
        if (witness) return d - 1;
    }
}

}  // namespace

TEST_CASE("rank by definition matches plain composition search") {
    std::mt19937_64 rng(77);
    for (auto [m, n] : {std::pair{2, 2}, {3, 2}, {2, 3}, {3, 3}}) {
        for (int it = 0; it < 60; ++it) {
            Configuration u = testkit::random_config(rng, GraphShape(m, n), -4, 4);
            CHECK(oracle::rank_by_definition(u) == rank_by_compositions(u));
        }
    }
}
