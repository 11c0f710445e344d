#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "dlab/budget.hpp"
#include "dlab/matrix.hpp"
#include "dlab/witness.hpp"

namespace dlab {

// Two-coloring of the pairs of {1, .., n}. Vertices are 1-based.
class PairColoring {
public:
    explicit PairColoring(std::size_t n, std::uint8_t fill = 0);

    std::size_t size() const { return n_; }
    std::uint8_t color(std::size_t i, std::size_t j) const;
    void set_color(std::size_t i, std::size_t j, std::uint8_t c);

private:
    std::size_t index(std::size_t i, std::size_t j) const;
    std::size_t n_;
    std::vector<std::uint8_t> colors_;
};

struct RamseyResult {
    bool success;                     // found a homogeneous set of size m
    std::vector<std::size_t> subset;  // ascending; size m on success, else the largest found
    std::uint8_t color;               // the homogeneous color
};

// Monochromatic subset extraction. The greedy focal-vertex argument succeeds
// whenever n >= 2^(2m-2); below that an exact per-color search (n <= 32)
// finds the true largest homogeneous set. Ties prefer color 0 and the
// lexicographically least set.
//
// Errors: m < 1 or an empty coloring.
RamseyResult ramsey_pairs(const PairColoring& coloring, std::size_t m);

struct CauchyResult {
    std::vector<std::size_t> rows;  // ascending row indices, pairwise sup-distance <= epsilon
    Rat epsilon;
};

// Pigeonhole subsequence: rows are binned by the cell of each entry on the
// grid of width epsilon over [-bound, bound] (the top cell is closed so the
// cell count is exactly ceil(2*bound/epsilon)), and the largest bin is
// returned; ties prefer the bin containing the smallest row index. The
// result has at least rows/cells^cols members.
//
// Errors: epsilon <= 0.
CauchyResult cauchy_subsequence(const EvalMatrix& m, const Rat& epsilon);

struct CauchyBranch {
    std::vector<std::size_t> rows;
    Rat epsilon;
};
struct IndependentBranch {
    ShatterWitness witness;
};
struct DichotomyInconclusive {
    std::size_t cauchy_len;   // best bin size found
    std::size_t indep_rank;   // best shattered-set size found
    bool indep_exhausted;     // whether the independence search completed
    std::uint64_t nodes;
};
using DichotomyOutcome = std::variant<CauchyBranch, IndependentBranch, DichotomyInconclusive>;

// Finite dichotomy: either an epsilon-clustered subsequence of length
// want_cauchy, or a shattered row set of size want_indep, or an explicit
// inconclusive report when the scale supports neither.
//
// Errors: epsilon <= 0, want_cauchy < 1, want_indep < 1.
DichotomyOutcome rosenthal_dichotomy(const EvalMatrix& m, const ThresholdPair& t, const Rat& epsilon,
                                     std::size_t want_cauchy, std::size_t want_indep,
                                     SearchBudget budget = {});

}  // namespace dlab
