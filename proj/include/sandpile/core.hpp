#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sandpile {

using Value = std::int64_t;

// Domain errors (bad preconditions, arithmetic overflow). The CLI maps these
// to exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

// Malformed input at the serialization boundary (exit code 2 in the CLI).
class InputError : public Error {
public:
    using Error::Error;
};

// An internal invariant failed. Never expected; indicates a bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

Value checked_add(Value x, Value y);
Value checked_sub(Value x, Value y);
Value checked_mul(Value x, Value y);

// Floor division: r in [0, d) for d > 0, also for negative x.
struct DivMod {
    Value q;
    Value r;
};
DivMod floor_divmod(Value x, Value d);

struct GraphShape {
    Value m = 1;
    Value n = 1;

    GraphShape() = default;
    GraphShape(Value m_, Value n_);

    std::size_t a_len() const { return static_cast<std::size_t>(m - 1); }
    std::size_t b_len() const { return static_cast<std::size_t>(n); }
    bool operator==(const GraphShape&) const = default;
};

// Values on K_{m,n}. `a` holds the m-1 non-sink vertices of part A, `b` the
// n vertices of part B. The sink a_m is optional (partial configuration).
struct Configuration {
    GraphShape shape;
    std::vector<Value> a;
    std::optional<Value> sink;
    std::vector<Value> b;

    Configuration() = default;
    Configuration(GraphShape s, std::vector<Value> a_, std::optional<Value> sink_,
                  std::vector<Value> b_);

    static Configuration zero(GraphShape s);

    Value sink_value() const;  // throws Error("partial configuration") if absent
    Configuration with_sink(std::optional<Value> s) const;
    bool operator==(const Configuration&) const = default;
};

std::string to_string(const Configuration& u);

enum class Part { A, B };

// 0-based. Part A index m-1 is the sink.
struct Vertex {
    Part part;
    std::size_t index;
    bool operator==(const Vertex&) const = default;
};

bool is_sink(const GraphShape& s, Vertex v);
Value vertex_degree(const GraphShape& s, Vertex v);

// f with zero sink; returned by the rank algorithms.
struct ProofOfRank {
    Configuration f;
};

Value degree(const Configuration& u);

Configuration topple(const Configuration& u, Vertex v);
Configuration topple_set(const Configuration& u, const std::vector<Vertex>& c);

bool is_quasi_stable(const Configuration& u);
bool is_stable(const Configuration& u);
bool is_sorted(const Configuration& u);

Configuration stabilize_equiv(const Configuration& u);

std::vector<Value> counting_sort(Value bound, const std::vector<Value>& w);
// Stable permutation p with w[p[0]] <= w[p[1]] <= ...
std::vector<std::size_t> counting_sort_indices(Value bound, const std::vector<Value>& w);

Configuration sort_config(const Configuration& u);

bool is_effective(const Configuration& u);

Configuration add(const Configuration& u, const Configuration& v);
Configuration subtract(const Configuration& u, const Configuration& v);

}  // namespace sandpile
