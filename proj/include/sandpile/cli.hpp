#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "sandpile/core.hpp"

namespace sandpile {

// Exit codes: 0 success, 1 domain error or failed check, 2 usage or input error.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

// a uniform in [0, 4n], b uniform in [0, 4m], sink uniform in [-mn, 3mn].
Configuration random_bench_config(GraphShape shape, std::uint64_t seed);

struct BenchRow {
    GraphShape shape;
    double median_seconds = 0;
    double ratio = 0;  // to the previous row; 0 for the first
};

struct BenchReport {
    std::vector<BenchRow> rows;
    double max_ratio = 0;
    bool pass = true;  // every ratio <= 3
};

// Sizes of m + n, split as evenly as possible.
BenchReport run_bench(const std::vector<Value>& totals, std::uint64_t seed, int runs);
BenchReport run_bench_shapes(const std::vector<GraphShape>& shapes, std::uint64_t seed, int runs);

}  // namespace sandpile
