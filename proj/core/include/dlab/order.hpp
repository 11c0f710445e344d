#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dlab/budget.hpp"
#include "dlab/matrix.hpp"
#include "dlab/witness.hpp"

namespace dlab {

struct OrderRankResult {
    std::size_t rank = 0;                     // longest staircase found, any orientation
    std::optional<StaircaseWitness> witness;  // present iff rank >= 1; canonical (see below)
    bool exhausted = true;                    // false iff the node budget tripped
    std::uint64_t nodes = 0;
};

// Longest staircase of length <= k_max in either orientation. Both
// orientations are searched; row-dominant wins ties. The witness is
// canonical: the lexicographically least row sequence among maximum-length
// staircases of the winning orientation, and for that row sequence the
// lexicographically least column assignment. When exhausted is false the
// rank is a certified lower bound (its witness still verifies).
//
// Errors: k_max < 1.
OrderRankResult order_rank(const EvalMatrix& m, const ThresholdPair& t, std::size_t k_max,
                           SearchBudget budget = {});

struct DefectEntry {
    std::size_t k;             // staircase length
    Rat gap;                   // widest achievable threshold gap r - s at this length
    StaircaseWitness witness;  // realizing witness
};

struct DefectProfile {
    std::vector<DefectEntry> entries;  // k = 1, 2, ... while any entry-value pair works
    bool exhausted = true;
    std::uint64_t nodes = 0;
};

// For each length k = 1..k_max, the widest gap r - s over threshold pairs
// (s, r) drawn from the matrix's distinct entry values such that some
// length-k staircase exists at (s, r), with a realizing witness. Gaps are
// non-increasing in k; ties between equal-gap pairs resolve to the smallest
// s. The profile stops at the first k admitting no pair.
//
// Errors: k_max < 1.
DefectProfile defect_profile(const EvalMatrix& m, std::size_t k_max, SearchBudget budget = {});

}  // namespace dlab
