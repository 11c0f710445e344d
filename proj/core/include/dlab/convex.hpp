#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dlab/budget.hpp"
#include "dlab/lp.hpp"
#include "dlab/matrix.hpp"
#include "dlab/order.hpp"
#include "dlab/witness.hpp"

namespace dlab::convex {

// Finite set family over ground points {0, .., ground-1}.
struct SetFamily {
    std::size_t ground = 0;
    std::vector<std::vector<std::size_t>> members;  // each sorted, non-empty, in range
};

void validate_family(const SetFamily& f);

struct GameSolution {
    Rat value;              // min over means of max member mass
    std::vector<Rat> mean;  // optimal probability vector over the ground set
    std::vector<Rat> dual;  // probability vector over members: min point coverage == value
};

// Exact value of the mass game: minimize (over probability vectors mu on the
// ground set) the maximum of mu(F) over members F. The dual is a probability
// vector lambda over members with min_point sum_{F ni point} lambda_F equal
// to the same value (empty family: value 0, empty dual). Both certificates
// are re-verified exactly before returning.
//
// Errors: ground < 1, empty or out-of-range members.
GameSolution ptak_value(const SetFamily& f);

struct PtakChain {
    std::vector<std::size_t> member_indices;           // F_1, .., F_L
    std::vector<std::vector<std::size_t>> chain_sets;  // A_1 c A_2 c .. c A_L, strict
};

struct PtakChainResult {
    bool found = false;
    PtakChain chain;          // on success
    std::size_t longest = 0;  // longest strict chain reached (<= requested length)
    std::uint64_t nodes = 0;
    bool exhausted = true;
};

// Searches for members F_1, .., F_L (repetition allowed) and a strictly
// increasing chain of subsets A_1 c .. c A_L of the ground set with
// F_n inside A_n for every n. Members and padding points are tried in
// ascending order, so the first chain found is canonical.
//
// Errors: length < 1, ground > 63.
PtakChainResult ptak_chain_search(const SetFamily& f, std::size_t length, SearchBudget budget = {});

struct MazurResult {
    CoefVector coefficients;  // convex combination over seq[tail..]
    Rat distance;             // exact minimax distance to the target vector
};

// Best sup-distance approximation of `target` by convex combinations of the
// rows seq[tail], seq[tail+1], ..: minimize max_col |sum_i c_i M(row_i, col)
// - target(col)|.
//
// Errors: bad indices, duplicate rows in seq, tail >= seq.size(), target
// length != cols.
MazurResult mazur_approx(const EvalMatrix& m, const std::vector<std::size_t>& seq,
                         const std::vector<Rat>& target, std::size_t tail);

struct GaugeResult {
    bool in_span = false;           // target lies in the span of the generators
    Rat value;                      // min sum |c_k| over representations (0 if not in span)
    std::vector<Rat> coefficients;  // realizing coefficients when in_span
};

// Minkowski gauge of the symmetric convex hull of the generators: the least
// total |coefficient| mass expressing the target, or in_span = false.
//
// Errors: mismatched dimensions, zero-dimensional vectors.
GaugeResult gauge_norm(const std::vector<std::vector<Rat>>& generators, const std::vector<Rat>& target);

struct ProbeReport {
    std::size_t base_rank = 0;
    std::size_t extended_rank = 0;
    bool extended = false;  // extended_rank > base_rank
    std::vector<CoefVector> appended;
    std::optional<StaircaseWitness> witness;  // on the extended matrix, if rank >= 1
    bool exhausted = true;
    std::uint64_t seed = 0;
    std::size_t samples = 0;
};

// Appends seed-pinned random convex combinations of rows (support 2..4,
// integer weights 1..16 normalized) and reports whether the order rank at
// the given thresholds grows. On canonical families (linear orders, shatter
// families at their native thresholds) it does not; in general a combination
// row can lengthen a staircase at one fixed pair — e.g. rows (1,1,1) and
// (1,0,-1) at thresholds (0, 1/2), whose midpoint row supports a length-3
// staircase — which is exactly what `extended` makes observable.
//
// Errors: samples < 1, k_max < 1.
ProbeReport conv_stability_probe(const EvalMatrix& m, const ThresholdPair& t, std::size_t samples,
                                 std::uint64_t seed, std::size_t k_max, SearchBudget budget = {});

}  // namespace dlab::convex
