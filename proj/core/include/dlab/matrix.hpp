#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dlab/rational.hpp"

namespace dlab {

// A finite family of bounded functions evaluated on a finite set of points:
// rows index the functions, columns index the points, entries are exact
// rationals with |entry| <= bound.
struct EvalMatrix {
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    std::vector<Rat> entries;  // row-major, rows() * cols()
    Rat bound;

    std::size_t rows() const { return row_labels.size(); }
    std::size_t cols() const { return col_labels.size(); }

    const Rat& at(std::size_t row, std::size_t col) const {
        return entries[row * cols() + col];
    }
    Rat& at(std::size_t row, std::size_t col) {
        return entries[row * cols() + col];
    }
};

// A pair of rational thresholds with s strictly below r. The gap r - s is
// the quantitative wedge every witness in the library is measured against.
struct ThresholdPair {
    Rat s;
    Rat r;

    ThresholdPair() : s(0), r(1) {}   // placeholder pair; still satisfies s < r
    ThresholdPair(Rat low, Rat high);  // throws InvalidInput unless low < high

    Rat gap() const { return r - s; }
};

// Validates labels (non-empty, duplicate-free), dimensions, and the entry
// bound (positive, every |entry| <= bound). Throws InvalidInput naming the
// offending label or cell. Returns the assembled matrix.
EvalMatrix validate_matrix(std::vector<std::string> row_labels,
                           std::vector<std::string> col_labels,
                           std::vector<std::vector<Rat>> entries,
                           Rat bound);

// Same, but parses each entry from text ("p/q" or decimal). Throws
// ParseError naming the cell on undecodable text.
EvalMatrix validate_matrix_text(std::vector<std::string> row_labels,
                                std::vector<std::string> col_labels,
                                const std::vector<std::vector<std::string>>& entries,
                                const Rat& bound);

// Entry-wise negation; labels and bound carry over.
EvalMatrix negate(const EvalMatrix& m);

// Transpose; row/col labels swap roles.
EvalMatrix transpose(const EvalMatrix& m);

// Restriction to the given row/col index lists, in the given order.
// Indices must be in range and duplicate-free.
EvalMatrix submatrix(const EvalMatrix& m,
                     const std::vector<std::size_t>& row_idx,
                     const std::vector<std::size_t>& col_idx);

// Sorted list of distinct entry values.
std::vector<Rat> distinct_entry_values(const EvalMatrix& m);

}  // namespace dlab
