#include "dlab/classify.hpp"

#include <algorithm>

#include "dlab/error.hpp"
#include "dlab/independence.hpp"
#include "dlab/order.hpp"

namespace dlab::classify {

Report classify(const EvalMatrix& m, const Params& p) {
    if (p.k_stable < 1 || p.d_nip < 1) throw InvalidInput("classification cutoffs must be >= 1");
    if (p.k_stable > p.d_nip)
        throw InvalidInput("k_stable must not exceed d_nip: a staircase of length k shatters pairs, so "
                           "instability at scale k refutes NIP at scale k as well");
    if (p.gap_min && *p.gap_min <= 0) throw InvalidInput("gap_min must be positive");

    Report rep;
    rep.row_labels = m.row_labels;
    rep.col_labels = m.col_labels;
    rep.rows = m.rows();
    rep.cols = m.cols();
    rep.bound = m.bound;
    rep.entries.resize(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        rep.entries[i].reserve(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) rep.entries[i].push_back(m.at(i, j));
    }
    rep.k_stable = p.k_stable;
    rep.d_nip = p.d_nip;
    rep.node_limit = p.budget.node_limit;

    std::vector<ThresholdPair> scan_pairs = p.thresholds;
    if (scan_pairs.empty()) {
        const std::vector<Rat> values = distinct_entry_values(m);
        const Rat spread = values.size() < 2 ? Rat(0) : values.back() - values.front();
        rep.gap_min_used = p.gap_min ? *p.gap_min : spread / 4;
        for (std::size_t a = 0; a < values.size(); ++a)
            for (std::size_t b = a + 1; b < values.size(); ++b)
                if (values[b] - values[a] >= rep.gap_min_used)
                    scan_pairs.emplace_back(values[a], values[b]);
    } else {
        rep.gap_min_used = p.gap_min ? *p.gap_min : Rat(0);
    }

    const EvalMatrix neg = negate(m);
    bool any_order_over = false, any_indep_over = false;
    bool any_order_tripped = false, any_indep_tripped = false;

    for (const ThresholdPair& t : scan_pairs) {
        ThresholdScan scan{t};

        const std::size_t k_cap = std::min(m.rows(), m.cols());
        const OrderRankResult ord = order_rank(m, t, k_cap, p.budget);
        scan.order_rank = ord.rank;
        scan.order_exhausted = ord.exhausted;
        if (ord.witness) {
            scan.order_orientation = ord.witness->orientation;
            scan.order_witness = ord.witness;
        }

        const IndependenceRankResult pos = independence_rank(m, t, m.rows(), p.budget);
        const ThresholdPair mirrored(-t.r, -t.s);
        const IndependenceRankResult negr = independence_rank(neg, mirrored, m.rows(), p.budget);
        scan.indep_rank_pos = pos.rank;
        scan.indep_rank_neg = negr.rank;
        scan.indep_rank = std::max(pos.rank, negr.rank);
        scan.indep_negated_larger = negr.rank > pos.rank;
        scan.indep_exhausted = pos.exhausted && negr.exhausted;
        scan.indep_witness = pos.witness;

        if (scan.order_rank >= p.k_stable) any_order_over = true;
        if (!scan.order_exhausted) any_order_tripped = true;
        if (scan.indep_rank >= p.d_nip) any_indep_over = true;
        if (!scan.indep_exhausted) any_indep_tripped = true;

        rep.scans.push_back(std::move(scan));
    }

    rep.stable_at_scale = !any_order_over && !any_order_tripped;
    rep.nip_at_scale = !any_indep_over && !any_indep_tripped;
    rep.stable_inconclusive = !any_order_over && any_order_tripped;
    rep.nip_inconclusive = !any_indep_over && any_indep_tripped;

    rep.reflexive_like = rep.stable_at_scale;
    rep.rosenthal_like = rep.nip_at_scale;
    rep.wsc_like = rep.stable_at_scale || !rep.nip_at_scale;
    return rep;
}

}  // namespace dlab::classify
