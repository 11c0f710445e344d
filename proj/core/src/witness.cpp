#include "dlab/witness.hpp"

#include <set>

#include "dlab/error.hpp"

namespace dlab {

const char* to_string(Orientation o) {
    return o == Orientation::RowDominant ? "row-dominant" : "col-dominant";
}

namespace {

void check_index_list(const std::vector<std::size_t>& idx, std::size_t limit, const char* kind) {
    std::set<std::size_t> seen;
    for (auto i : idx) {
        if (i >= limit)
            throw InvalidInput(std::string(kind) + " index " + std::to_string(i) +
                               " out of range (limit " + std::to_string(limit) + ")");
        if (!seen.insert(i).second)
            throw InvalidInput(std::string("duplicate ") + kind + " index " + std::to_string(i));
    }
}

}  // namespace

StaircaseCheck check_staircase(const EvalMatrix& m, const StaircaseWitness& w) {
    if (w.rows.size() != w.cols.size())
        throw InvalidInput("staircase witness has " + std::to_string(w.rows.size()) +
                           " rows but " + std::to_string(w.cols.size()) + " cols");
    if (w.rows.empty()) throw InvalidInput("staircase witness is empty");
    check_index_list(w.rows, m.rows(), "row");
    check_index_list(w.cols, m.cols(), "col");

    const std::size_t k = w.rows.size();
    for (std::size_t p = 0; p < k; ++p) {
        for (std::size_t q = 0; q < k; ++q) {
            const bool high = w.orientation == Orientation::RowDominant ? p >= q : p <= q;
            const Rat& e = m.at(w.rows[p], w.cols[q]);
            const bool ok = high ? e >= w.thresholds.r : e <= w.thresholds.s;
            if (!ok)
                return {false, StaircaseViolation{p, q, w.rows[p], w.cols[q], high}};
        }
    }
    return {true, std::nullopt};
}

ShatterCheck check_shatter(const EvalMatrix& m, const ShatterWitness& w) {
    const std::size_t k = w.rows.size();
    if (k == 0) throw InvalidInput("shatter witness has no rows");
    if (k > 25) throw InvalidInput("shatter witness degree " + std::to_string(k) + " exceeds 25");
    check_index_list(w.rows, m.rows(), "row");

    const std::uint32_t patterns = std::uint32_t{1} << k;
    for (std::uint32_t pattern = 0; pattern < patterns; ++pattern) {
        auto it = w.witness.find(pattern);
        if (it == w.witness.end())
            throw InvalidInput("shatter witness is missing pattern " + std::to_string(pattern));
        const std::size_t col = it->second;
        if (col >= m.cols())
            throw InvalidInput("shatter witness column " + std::to_string(col) + " out of range");
        for (std::size_t b = 0; b < k; ++b) {
            const bool low = (pattern >> b) & 1u;
            const Rat& e = m.at(w.rows[b], col);
            const bool ok = low ? e <= w.thresholds.s : e >= w.thresholds.r;
            if (!ok)
                return {false, ShatterViolation{pattern, b, w.rows[b], col, low}};
        }
    }
    return {true, std::nullopt};
}

bool CoefVector::is_convex() const {
    if (support.size() != weights.size()) return false;
    Rat sum = 0;
    for (const auto& wgt : weights) {
        if (wgt < 0) return false;
        sum += wgt;
    }
    return sum == 1;
}

}  // namespace dlab
