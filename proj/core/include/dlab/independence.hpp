#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dlab/budget.hpp"
#include "dlab/matrix.hpp"
#include "dlab/witness.hpp"

namespace dlab {

struct IndependenceRankResult {
    std::size_t rank = 0;                   // largest shattered row-set size found
    std::optional<ShatterWitness> witness;  // present iff rank >= 1; lex-min row set,
                                            // lex-min column per pattern
    bool exhausted = true;                  // false iff the budget tripped or the
                                            // degree cap (25) bit
    std::uint64_t nodes = 0;
};

// Largest size (up to d_max) of a row set shattered at thresholds t: every
// low/high pattern over the set is realized by some column. Level-wise
// search: size-k shattered sets are extended one row at a time, a candidate
// being kept only if all its size-k subsets are shattered, with the pattern
// check pruning a candidate as soon as some pattern has no column left.
// When exhausted is false the rank is a certified lower bound.
//
// Errors: d_max < 1.
IndependenceRankResult independence_rank(const EvalMatrix& m, const ThresholdPair& t,
                                         std::size_t d_max, SearchBudget budget = {});

// Builds a staircase from a shatter witness: position q's column is the
// witness column of the chain pattern {0, .., q-1}, giving a row-dominant
// staircase of the same length on the same rows and thresholds. The input
// may be a partial witness, but it must cover all chain patterns and they
// must be realized as claimed.
//
// Errors: missing or falsified chain patterns, bad indices.
StaircaseWitness ip_to_op(const EvalMatrix& m, const ShatterWitness& w);

struct L1Certificate {
    Rat bound;     // ((r - s)/2) * sum |c_i|
    Rat achieved;  // max |sum_i c_i (E(i, col) - mid)| over the two columns
    bool holds;    // achieved >= bound
    std::size_t col_neg;  // column realizing "low exactly on negative-weight rows"
    std::size_t col_pos;  // column realizing the complementary pattern
};

// l1 lower bound witnessed by a shattered set: any coefficient vector
// supported on the witness rows moves the functional by at least
// ((r - s)/2) * ||c||_1 against one of two witness columns.
//
// Errors: support not inside the witness rows, duplicated support entries,
// missing or falsified patterns.
L1Certificate l1_lower_cert(const EvalMatrix& m, const ShatterWitness& w, const CoefVector& c);

}  // namespace dlab
