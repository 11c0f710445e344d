#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "dlab/matrix.hpp"

namespace dlab {

// Matrix CSV format:
//   ,x0,x1,x2
//   f0,0,1/2,-1
//   f1,1,0,3/4
// First row: empty cell then column labels. Each following row: row label then
// entries. Entries are canonical rationals on write; parsing also accepts
// decimals ("0.25"). Labels must not contain commas, newlines, or carriage
// returns. ParseError carries 1-based line/column numbers.
//
// bound: when absent, defaults to max |entry| (or 1 for an all-zero matrix).
EvalMatrix parse_matrix_csv(std::string_view text, const std::optional<Rat>& bound = std::nullopt);

std::string write_matrix_csv(const EvalMatrix& m);

}  // namespace dlab
