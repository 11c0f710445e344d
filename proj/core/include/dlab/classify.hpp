#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dlab/budget.hpp"
#include "dlab/matrix.hpp"
#include "dlab/witness.hpp"

namespace dlab::classify {

struct Params {
    std::size_t k_stable = 4;  // staircase length that refutes stability at scale
    std::size_t d_nip = 4;     // shattered-set size that refutes NIP at scale
    std::optional<Rat> gap_min;                // default: (max entry - min entry) / 4
    std::vector<ThresholdPair> thresholds;     // explicit scan list; empty = derive from entries
    SearchBudget budget;                       // applied to each search separately
};

struct ThresholdScan {
    ThresholdPair thresholds;
    std::size_t order_rank = 0;
    bool order_exhausted = true;
    Orientation order_orientation = Orientation::RowDominant;
    std::optional<StaircaseWitness> order_witness;
    std::size_t indep_rank_pos = 0;  // shatter rank of the matrix
    std::size_t indep_rank_neg = 0;  // shatter rank of its negation at (-r, -s)
    std::size_t indep_rank = 0;      // max of the two
    bool indep_negated_larger = false;
    bool indep_exhausted = true;
    std::optional<ShatterWitness> indep_witness;  // on the matrix itself
};

struct Report {
    std::vector<std::string> row_labels, col_labels;
    std::size_t rows = 0, cols = 0;
    Rat bound;
    std::vector<std::vector<Rat>> entries;

    std::size_t k_stable = 0, d_nip = 0;
    Rat gap_min_used;
    std::uint64_t node_limit = 0;

    std::vector<ThresholdScan> scans;

    bool stable_at_scale = false;
    bool nip_at_scale = false;
    bool stable_inconclusive = false;  // falseness driven by budget, not witnesses
    bool nip_inconclusive = false;

    bool reflexive_like = false;   // = stable_at_scale
    bool rosenthal_like = false;   // = nip_at_scale
    bool wsc_like = false;         // = stable or not NIP
};

// Scans threshold pairs (either the provided list or all pairs of distinct
// entry values with gap >= gap_min, ascending), computes order and
// independence ranks at each, and classifies:
//   stable_at_scale: every scanned order rank < k_stable, all searches
//   exhausted; nip_at_scale: likewise with independence ranks < d_nip.
// Independence is computed both on the matrix and on its negation at the
// mirrored thresholds; the two agree for complete searches and both are
// reported. Banach-side labels: reflexive_like = stable, rosenthal_like =
// NIP, wsc_like = stable or not NIP. A constant matrix scans no pairs and is
// vacuously stable and NIP.
//
// Errors: cutoffs < 1, k_stable > d_nip, non-positive gap_min.
Report classify(const EvalMatrix& m, const Params& p = {});

}  // namespace dlab::classify
