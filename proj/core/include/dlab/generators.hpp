#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "dlab/matrix.hpp"
#include "dlab/witness.hpp"

namespace dlab {

// Deterministic random source. mt19937_64 is bit-exact across platforms and
// standard libraries; the helpers below avoid std::uniform_*_distribution,
// whose output is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // Uniform-enough index in [0, n); n > 0.
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }

    // Rational p/denom with p uniform in [-denom, denom]; denom > 0.
    Rat rational_pm1(std::int64_t denom) {
        const std::int64_t p = static_cast<std::int64_t>(below(static_cast<std::size_t>(2 * denom + 1))) - denom;
        return Rat(p, denom);
    }

    // k distinct indices from [0, n), ascending.
    std::vector<std::size_t> distinct(std::size_t k, std::size_t n);

    // k positive rational weights summing to 1.
    std::vector<Rat> convex_weights(std::size_t k);

private:
    std::mt19937_64 gen_;
};

// The n x n linear-order family: entry(i, j) = 1 if i >= j else 0.
EvalMatrix gen_linear_order(std::size_t n);

// The degree-d shatter family: d rows, 2^d columns indexed by subset masks;
// entry(i, mask) = 0 if bit i of mask is set, else 1. With thresholds (0, 1)
// the column for mask P realizes exactly the pattern "low on P".
EvalMatrix gen_shatter(std::size_t d);

// The canonical total witness for gen_shatter(d) at thresholds (s, r) with
// s < r inside [0, 1]: pattern P -> column P.
ShatterWitness shatter_full_witness(std::size_t d, ThresholdPair t);

// Seed-pinned random matrix, entries p/denom in [-1, 1], bound 1.
EvalMatrix gen_random(std::size_t n, std::size_t m, std::uint64_t seed, std::int64_t denom = 16);

// n nondecreasing 0/1 step rows over m columns; row i steps up at column
// (i mod m).
EvalMatrix gen_monotone_family(std::size_t n, std::size_t m);

}  // namespace dlab
