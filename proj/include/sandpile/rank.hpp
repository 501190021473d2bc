#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sandpile/core.hpp"

namespace sandpile {

struct RVector {
    GraphShape shape;
    std::vector<Value> entries;
    bool operator==(const RVector&) const = default;
};

struct GridShift {
    Value k_a = 0;
    Value k_b = 0;
    bool operator==(const GridShift&) const = default;
};

// Requires a stable sorted configuration (partial allowed).
RVector r_vector(const Configuration& u);

bool is_parking_sorted(const Configuration& u);
bool is_recurrent_sorted(const Configuration& u);

// Sorted, a-spread <= n and b-spread <= m.
bool is_compact(const Configuration& u);

Configuration t_a(const Configuration& u);
Configuration t_b(const Configuration& u);
Configuration t_a_inv(const Configuration& u);
Configuration t_b_inv(const Configuration& u);

// Applies t_a^k_a after t_b^k_b (negative powers use the inverses).
Configuration apply_shift(const Configuration& u, GridShift s);

// 1-based (i, j) of the highest pair of intersection squares (i,j),(i+1,j)
// with a red north step on the left and a green east step below (i+1,j).
// Empty exactly when u is parking.
std::optional<std::pair<std::size_t, std::size_t>> phi_squares(const Configuration& u);

Configuration phi(const Configuration& u);
Configuration psi(const Configuration& u);

Configuration psi0(const Configuration& u);
RVector psi0_tilde(const RVector& r);

struct ParkTrace {
    std::size_t h = 1;  // 1-based
    Value r_h = 1;
    std::size_t k = 1;  // 1-based
    Configuration shifted;  // u' before the rotation
    Configuration result;   // u'' = sort(park(u))
};

// Sorted input with a-values in [0, n-1] and b-values in [-1, m-1], sink
// present. The b_1 = -1 case is what psi0 feeds in.
ParkTrace park_sort_trace(const Configuration& u);
Configuration park_sort_fast(const Configuration& u);

// sort(park(u)) for any full configuration: stabilize, sort, one-shot park.
Configuration park_sort(const Configuration& u);

struct RankSummands {
    Value rank = -1;
    Value q = 0;
    Value r = 0;
    std::vector<Value> summands;  // empty when sink < 0
};

RankSummands rank_formula_detail(const Configuration& u);
Value rank_formula(const Configuration& u);

struct GreedyResult {
    Value rank = -1;
    ProofOfRank proof;
};

GreedyResult rank_greedy(const Configuration& u);
Value rank_scan(const Configuration& u);
Value rank_of(const Configuration& u);

Configuration canonical_divisor(GraphShape shape);

GridShift decompose_compact(const Configuration& u);

}  // namespace sandpile
