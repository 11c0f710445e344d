#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "dlab/matrix.hpp"

namespace dlab {

enum class Orientation { RowDominant, ColDominant };

const char* to_string(Orientation o);

// A staircase of length k: ordered distinct row indices i_1..i_k and column
// indices j_1..j_k such that, in the row-dominant orientation,
//   entry(i_p, j_q) >= r  when p >= q,   entry(i_p, j_q) <= s  when p < q.
// The col-dominant orientation flips the comparison to p <= q.
struct StaircaseWitness {
    Orientation orientation = Orientation::RowDominant;
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
    ThresholdPair thresholds;

    std::size_t length() const { return rows.size(); }
};

struct StaircaseViolation {
    std::size_t p, q;      // positions within the witness (0-based)
    std::size_t row, col;  // the offending matrix cell
    bool expected_high;    // true: entry >= r was required, false: entry <= s
};

struct StaircaseCheck {
    bool ok = false;
    std::optional<StaircaseViolation> violation;
};

// Verifies a staircase witness cell by cell, scanning positions (p, q) in
// row-major order and reporting the first violation. Out-of-range or
// duplicate indices and length mismatches throw InvalidInput.
StaircaseCheck check_staircase(const EvalMatrix& m, const StaircaseWitness& w);

// A shatter system on the row set R = rows: for a subset P of R (encoded as
// a bitmask over positions in `rows`), witness[P] is a column c with
//   entry(i, c) <= s  for i in P,   entry(i, c) >= r  for i in R \ P.
// The map may be partial (e.g. only the chain subsets); check_shatter
// demands totality, consumers that need less validate what they use.
struct ShatterWitness {
    std::vector<std::size_t> rows;
    std::map<std::uint32_t, std::size_t> witness;  // pattern mask -> column
    ThresholdPair thresholds;

    std::size_t degree() const { return rows.size(); }
};

struct ShatterViolation {
    std::uint32_t pattern;
    std::size_t position;  // offending row position within `rows`
    std::size_t row, col;
    bool expected_low;  // true: entry <= s was required, false: entry >= r
};

struct ShatterCheck {
    bool ok = false;
    std::optional<ShatterViolation> violation;
};

// Verifies a total shatter witness: every one of the 2^k patterns must be
// present and realized. Patterns are scanned in increasing mask order, rows
// in position order; the first violation is reported. A missing pattern,
// out-of-range index, or degree > 25 throws InvalidInput.
ShatterCheck check_shatter(const EvalMatrix& m, const ShatterWitness& w);

// A rational coefficient vector over a duplicate-free list of rows. The
// convex flag records the producer's claim that weights are >= 0 and sum
// to 1; is_convex re-derives it.
struct CoefVector {
    std::vector<std::size_t> support;
    std::vector<Rat> weights;
    bool convex = false;

    bool is_convex() const;
};

}  // namespace dlab
