#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "sandpile/core.hpp"

namespace testkit {

using sandpile::Configuration;
using sandpile::GraphShape;
using sandpile::Value;

inline Configuration cfg(Value m, Value n, std::vector<Value> a, std::optional<Value> sink, std::vector<Value> b) {
    return Configuration(GraphShape(m, n), std::move(a), sink, std::move(b));
}

// Nondecreasing sequences of length len with entries in [lo, hi].
inline void for_each_sorted(std::size_t len, Value lo, Value hi, const std::function<void(const std::vector<Value>&)>& f) {
    std::vector<Value> v(len, lo);
    std::function<void(std::size_t, Value)> rec = [&](std::size_t i, Value from) {
        if (i == len) {
            f(v);
            return;
        }
        for (Value x = from; x <= hi; ++x) {
            v[i] = x;
            rec(i + 1, x);
        }
    };
    rec(0, lo);
}

// Stable sorted partial configurations of one shape.
inline std::vector<Configuration> stable_sorted(GraphShape s) {
    std::vector<Configuration> out;
    for_each_sorted(s.a_len(), 0, s.n - 1, [&](const std::vector<Value>& a) {
        for_each_sorted(s.b_len(), 0, s.m - 1, [&](const std::vector<Value>& b) {
            out.emplace_back(s, a, std::nullopt, b);
        });
    });
    return out;
}

inline Configuration random_config(std::mt19937_64& rng, GraphShape s, Value lo, Value hi) {
    std::uniform_int_distribution<Value> d(lo, hi);
    std::vector<Value> a(s.a_len()), b(s.b_len());
    for (Value& x : a) x = d(rng);
    for (Value& x : b) x = d(rng);
    return Configuration(s, a, d(rng), b);
}

inline std::vector<std::tuple<Value, Value, Value>> parse_triples(const char* text) {
    std::vector<std::tuple<Value, Value, Value>> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        Value x, y, z;
        char s1, s2;
        std::stringstream is(item);
        is >> x >> s1 >> y >> s2 >> z;
        out.emplace_back(x, y, z);
    }
    return out;
}

}  // namespace testkit
