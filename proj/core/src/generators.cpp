#include "dlab/generators.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "dlab/error.hpp"

namespace dlab {

namespace {

std::string row_label(std::size_t i) { return "f" + std::to_string(i); }
std::string col_label(std::size_t j) { return "x" + std::to_string(j); }

EvalMatrix make(std::size_t rows, std::size_t cols, std::vector<Rat> entries,
                std::vector<std::string> col_labels = {}) {
    EvalMatrix m;
    m.entries = std::move(entries);
    m.bound = 1;
    m.row_labels.reserve(rows);
    for (std::size_t i = 0; i < rows; ++i) m.row_labels.push_back(row_label(i));
    if (col_labels.empty()) {
        m.col_labels.reserve(cols);
        for (std::size_t j = 0; j < cols; ++j) m.col_labels.push_back(col_label(j));
    } else {
        m.col_labels = std::move(col_labels);
    }
    return m;
}

}  // namespace

std::vector<std::size_t> Rng::distinct(std::size_t k, std::size_t n) {
    if (k > n) throw InvalidInput("cannot draw " + std::to_string(k) + " distinct indices from " + std::to_string(n));
    // Partial Fisher-Yates over an explicit index pool: deterministic and
    // loop-free regardless of k/n ratio.
    std::vector<std::size_t> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = i;
    std::vector<std::size_t> out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + below(n - i);
        std::swap(pool[i], pool[j]);
        out.push_back(pool[i]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Rat> Rng::convex_weights(std::size_t k) {
    if (k == 0) throw InvalidInput("convex_weights requires k >= 1");
    std::vector<Int> raw(k);
    Int total = 0;
    for (std::size_t i = 0; i < k; ++i) {
        raw[i] = Int(1 + below(16));
        total += raw[i];
    }
    std::vector<Rat> w(k);
    for (std::size_t i = 0; i < k; ++i) w[i] = Rat(raw[i], total);
    return w;
}

EvalMatrix gen_linear_order(std::size_t n) {
    if (n == 0) throw InvalidInput("linear-order size must be >= 1");
    std::vector<Rat> e(n * n, Rat(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) e[i * n + j] = 1;
    return make(n, n, std::move(e));
}

EvalMatrix gen_shatter(std::size_t d) {
    if (d == 0 || d > 20) throw InvalidInput("shatter degree must be in [1, 20]");
    const std::size_t cols = std::size_t{1} << d;
    std::vector<Rat> e(d * cols, Rat(0));
    std::vector<std::string> col_labels;
    col_labels.reserve(cols);
    for (std::size_t mask = 0; mask < cols; ++mask) {
        col_labels.push_back(col_label(mask));
        for (std::size_t i = 0; i < d; ++i)
            if (!((mask >> i) & 1u)) e[i * cols + mask] = 1;
    }
    return make(d, cols, std::move(e), std::move(col_labels));
}

ShatterWitness shatter_full_witness(std::size_t d, ThresholdPair t) {
    if (d == 0 || d > 20) throw InvalidInput("shatter degree must be in [1, 20]");
    if (t.s < 0 || t.r > 1) throw InvalidInput("shatter witness thresholds must lie in [0, 1]");
    ShatterWitness w;
    w.thresholds = t;
    for (std::size_t i = 0; i < d; ++i) w.rows.push_back(i);
    const std::uint32_t patterns = std::uint32_t{1} << d;
    for (std::uint32_t p = 0; p < patterns; ++p) w.witness[p] = p;
    return w;
}

EvalMatrix gen_random(std::size_t n, std::size_t m, std::uint64_t seed, std::int64_t denom) {
    if (n == 0 || m == 0) throw InvalidInput("random matrix needs n, m >= 1");
    if (denom <= 0) throw InvalidInput("random matrix denominator must be positive");
    Rng rng(seed);
    std::vector<Rat> e;
    e.reserve(n * m);
    for (std::size_t i = 0; i < n * m; ++i) e.push_back(rng.rational_pm1(denom));
    return make(n, m, std::move(e));
}

EvalMatrix gen_monotone_family(std::size_t n, std::size_t m) {
    if (n == 0 || m == 0) throw InvalidInput("monotone family needs n, m >= 1");
    std::vector<Rat> e(n * m, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t jump = i % m;
        for (std::size_t j = jump; j < m; ++j) e[i * m + j] = 1;
    }
    return make(n, m, std::move(e));
}

}  // namespace dlab
