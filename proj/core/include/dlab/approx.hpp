#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <variant>
#include <vector>

#include "dlab/matrix.hpp"

namespace dlab::approx {

struct SelectResult {
    std::vector<std::size_t> features;                       // chosen rows, in selection order
    std::vector<std::pair<std::size_t, std::size_t>> pairs;  // separated column pairs, in order
    std::size_t iterations = 0;
};

struct FeatureFailure {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;  // recorded pairs, in order
    std::vector<std::size_t> features;                       // rows chosen before the failure
    std::vector<std::vector<Rat>> pattern;  // |features| x |pairs| absolute differences
    bool cap_hit = false;                   // failure by iteration cap rather than exhaustion
    std::size_t iterations = 0;
};

using FeatureOutcome = std::variant<SelectResult, FeatureFailure>;

// Iterative feature selection. While some column pair (x, y), taken in
// ascending lexicographic order, is epsilon-close under every chosen feature
// yet has |target(x) - target(y)| > 3*epsilon, the pair is recorded and a
// new feature row must separate it: admissible rows differ by more than
// 3*epsilon on every recorded pair. Among admissible rows the least one that
// is also epsilon-close to the target on every recorded pair's columns is
// preferred; otherwise the least admissible row is taken. FeatureFailure
// reports the recorded pairs and the difference pattern when no admissible
// row exists (or the iteration cap, default #ordered column pairs, trips).
//
// Errors: empty candidate rows, bad indices, target length != cols,
// epsilon <= 0.
FeatureOutcome select_features(const EvalMatrix& m, const std::vector<std::size_t>& rows,
                               const std::vector<Rat>& target, const Rat& epsilon,
                               std::size_t cap = 0);

// Monotone lookup table: g(u) = max target over columns whose feature vector
// is coordinatewise <= u (floor_value when none), and the table evaluates
// h(u) = g(u + epsilon * ones). g <= h <= g(. + epsilon) by construction,
// and both are monotone.
struct MonotoneTable {
    std::vector<std::size_t> features;
    std::vector<std::vector<Rat>> feature_vectors;  // one per column
    std::vector<Rat> target;
    Rat epsilon;
    Rat floor_value;                    // returned below every observed vector
    std::map<std::vector<Rat>, Rat> observed;  // feature vector -> h at that vector

    Rat sup_below(const std::vector<Rat>& query) const;  // g
    Rat evaluate(const std::vector<Rat>& query) const;   // h = g(query + epsilon)
};

// Errors: empty features, bad indices, target length != cols, epsilon <= 0.
MonotoneTable build_monotone_table(const EvalMatrix& m, const std::vector<std::size_t>& features,
                                   const std::vector<Rat>& target, const Rat& epsilon);

struct ApproxResult {
    SelectResult selection;
    MonotoneTable table;
    std::vector<Rat> approximant;  // h at each column's feature vector
    Rat err;                       // max |target - approximant|
};

using ApproxOutcome = std::variant<ApproxResult, FeatureFailure>;

// Feature selection followed by the monotone table. When selection
// terminates on a comonotone family (rows pairwise order-compatible on the
// columns), err <= 3*epsilon.
ApproxOutcome approximate(const EvalMatrix& m, const std::vector<std::size_t>& rows,
                          const std::vector<Rat>& target, const Rat& epsilon, std::size_t cap = 0);

}  // namespace dlab::approx
