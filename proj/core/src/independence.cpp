#include "dlab/independence.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

#include "dlab/error.hpp"

namespace dlab {

namespace {

using Word = std::uint64_t;

std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

bool mask_any(const std::vector<Word>& a, std::size_t off, std::size_t W) {
    for (std::size_t w = 0; w < W; ++w)
        if (a[off + w]) return true;
    return false;
}

int mask_first(const std::vector<Word>& a, std::size_t off, std::size_t W) {
    for (std::size_t w = 0; w < W; ++w)
        if (a[off + w]) return static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(a[off + w])));
    return -1;
}

struct PatternChecker {
    const std::vector<Word>& low;
    const std::vector<Word>& high;
    std::size_t W;
    std::uint64_t node_limit;
    std::uint64_t& nodes;
    bool aborted = false;

    PatternChecker(const std::vector<Word>& low_, const std::vector<Word>& high_, std::size_t W_,
                   std::uint64_t node_limit_, std::uint64_t& nodes_)
        : low(low_), high(high_), W(W_), node_limit(node_limit_), nodes(nodes_) {}

    // Depth-first pattern coverage over the rows of S (positions handle bits
    // from the most significant down, high branch first, so leaf patterns
    // appear in ascending mask order). Returns false as soon as some pattern
    // has no candidate column. `collect`, when set, receives the least
    // column for each pattern. `charge` toggles budget accounting.
    bool shattered(const std::vector<std::size_t>& S, std::map<std::uint32_t, std::size_t>* collect,
                   bool charge) {
        const std::size_t k = S.size();
        buf.assign((k + 1) * W, 0);
        for (std::size_t w = 0; w < W; ++w) buf[w] = full[w];
        return descend(S, k, 0, 0, collect, charge);
    }

    std::vector<Word> full;  // all-columns mask

private:
    std::vector<Word> buf;  // (k+1) levels of column masks

    bool descend(const std::vector<std::size_t>& S, std::size_t k, std::size_t depth,
                 std::uint32_t pattern, std::map<std::uint32_t, std::size_t>* collect, bool charge) {
        if (charge && ++nodes > node_limit) {
            aborted = true;
            return false;
        }
        if (depth == k) {
            if (collect) {
                const int col = mask_first(buf, depth * W, W);
                (*collect)[pattern] = static_cast<std::size_t>(col);
            }
            return true;
        }
        // Bit for this depth: positions are numbered by row order in S, and
        // depth d decides bit (k - 1 - d) so patterns enumerate ascending.
        const std::size_t bit = k - 1 - depth;
        const std::size_t row = S[bit];
        const std::size_t parent = depth * W;
        const std::size_t child = (depth + 1) * W;
        // High branch: row stays out of the low set (bit = 0).
        bool ok_high = false;
        for (std::size_t w = 0; w < W; ++w) buf[child + w] = buf[parent + w] & high[row * W + w];
        if (mask_any(buf, child, W)) {
            ok_high = descend(S, k, depth + 1, pattern, collect, charge);
            if (aborted) return false;
        }
        if (!ok_high) return false;
        // Low branch: row joins the low set (bit = 1).
        for (std::size_t w = 0; w < W; ++w) buf[child + w] = buf[parent + w] & low[row * W + w];
        if (!mask_any(buf, child, W)) return false;
        const bool ok_low =
            descend(S, k, depth + 1, pattern | (std::uint32_t(1) << bit), collect, charge);
        return ok_low && !aborted;
    }
};

}  // namespace

IndependenceRankResult independence_rank(const EvalMatrix& m, const ThresholdPair& t,
                                         std::size_t d_max, SearchBudget budget) {
    if (d_max < 1) throw InvalidInput("independence_rank requires d_max >= 1");
    const std::size_t n = m.rows(), c = m.cols(), W = words_for(c);
    constexpr std::size_t kDegreeCap = 25;  // pattern masks are 32-bit
    const std::size_t d_want = std::min(d_max, n);
    const std::size_t d_cap = std::min(d_want, kDegreeCap);

    std::vector<Word> low(n * W, 0), high(n * W, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < c; ++j) {
            const Rat& e = m.at(i, j);
            if (e <= t.s) low[i * W + j / 64] |= Word(1) << (j % 64);
            if (e >= t.r) high[i * W + j / 64] |= Word(1) << (j % 64);
        }
    }

    IndependenceRankResult res;
    PatternChecker checker{low, high, W, budget.node_limit, res.nodes};
    checker.full.assign(W, 0);
    for (std::size_t j = 0; j < c; ++j) checker.full[j / 64] |= Word(1) << (j % 64);

    std::vector<std::vector<std::size_t>> level;  // shattered sets, lex order
    std::vector<std::size_t> winner;

    // Level 1: singletons.
    for (std::size_t i = 0; i < n && !checker.aborted; ++i) {
        const std::vector<std::size_t> S{i};
        if (checker.shattered(S, nullptr, true)) {
            level.push_back(S);
            if (res.rank < 1) {
                res.rank = 1;
                winner = S;
            }
        }
    }

    for (std::size_t k = 2; k <= d_cap && !checker.aborted && !level.empty(); ++k) {
        std::set<std::vector<std::size_t>> prev(level.begin(), level.end());
        std::vector<std::vector<std::size_t>> next;
        for (const auto& S : level) {
            if (checker.aborted) break;
            for (std::size_t e = S.back() + 1; e < n; ++e) {
                std::vector<std::size_t> ext = S;
                ext.push_back(e);
                // Every (k-1)-subset must already be shattered; S itself is.
                bool all_sub = true;
                for (std::size_t drop = 0; drop + 1 < ext.size() && all_sub; ++drop) {
                    std::vector<std::size_t> sub;
                    sub.reserve(ext.size() - 1);
                    for (std::size_t q = 0; q < ext.size(); ++q)
                        if (q != drop) sub.push_back(ext[q]);
                    all_sub = prev.count(sub) > 0;
                }
                if (!all_sub) continue;
                if (checker.shattered(ext, nullptr, true)) {
                    next.push_back(ext);
                    if (res.rank < k) {
                        res.rank = k;
                        winner = ext;
                    }
                } else if (checker.aborted) {
                    break;
                }
            }
        }
        level = std::move(next);
    }

    res.exhausted = !checker.aborted;
    if (res.rank == d_cap && d_cap < d_want) res.exhausted = false;  // degree cap bit first
    if (res.rank >= 1) {
        ShatterWitness w;
        w.rows = winner;
        w.thresholds = t;
        std::map<std::uint32_t, std::size_t> cols;
        checker.aborted = false;  // uncharged re-walk of a set already known shattered
        if (!checker.shattered(winner, &cols, false))
            throw std::logic_error("independence search lost its witness on re-check");
        w.witness = std::move(cols);
        const ShatterCheck chk = check_shatter(m, w);
        if (!chk.ok) throw std::logic_error("independence search produced an invalid witness");
        res.witness = std::move(w);
    }
    return res;
}

namespace {

void check_rows_valid(const EvalMatrix& m, const std::vector<std::size_t>& rows) {
    if (rows.empty()) throw InvalidInput("witness has no rows");
    std::set<std::size_t> seen;
    for (std::size_t r : rows) {
        if (r >= m.rows()) throw InvalidInput("witness row index out of range");
        if (!seen.insert(r).second) throw InvalidInput("witness row index repeated");
    }
}

// Verifies that `col` realizes `pattern` (bit b set = rows[b] low) over all
// witness rows.
void check_pattern_column(const EvalMatrix& m, const ShatterWitness& w, std::uint32_t pattern,
                          std::size_t col) {
    if (col >= m.cols()) throw InvalidInput("witness column index out of range");
    for (std::size_t b = 0; b < w.rows.size(); ++b) {
        const Rat& e = m.at(w.rows[b], col);
        const bool want_low = (pattern >> b) & 1u;
        if (want_low ? !(e <= w.thresholds.s) : !(e >= w.thresholds.r))
            throw InvalidInput("witness column does not realize its pattern");
    }
}

std::size_t pattern_column(const EvalMatrix& m, const ShatterWitness& w, std::uint32_t pattern) {
    const auto it = w.witness.find(pattern);
    if (it == w.witness.end()) throw InvalidInput("witness lacks a required pattern");
    check_pattern_column(m, w, pattern, it->second);
    return it->second;
}

}  // namespace

StaircaseWitness ip_to_op(const EvalMatrix& m, const ShatterWitness& w) {
    check_rows_valid(m, w.rows);
    const std::size_t k = w.rows.size();
    if (k > 25) throw InvalidInput("witness degree exceeds 25");
    StaircaseWitness s;
    s.orientation = Orientation::RowDominant;
    s.rows = w.rows;
    s.thresholds = w.thresholds;
    s.cols.reserve(k);
    for (std::size_t q = 0; q < k; ++q) {
        // Chain pattern: exactly the positions before q are low.
        const std::uint32_t chain = static_cast<std::uint32_t>((std::uint64_t(1) << q) - 1);
        s.cols.push_back(pattern_column(m, w, chain));
    }
    const StaircaseCheck chk = check_staircase(m, s);
    if (!chk.ok) throw std::logic_error("chain transform produced an invalid staircase");
    return s;
}

L1Certificate l1_lower_cert(const EvalMatrix& m, const ShatterWitness& w, const CoefVector& c) {
    check_rows_valid(m, w.rows);
    const std::size_t k = w.rows.size();
    if (k > 25) throw InvalidInput("witness degree exceeds 25");
    if (c.support.size() != c.weights.size()) throw InvalidInput("coefficient support/weight size mismatch");
    if (c.support.empty()) throw InvalidInput("coefficient vector is empty");

    std::map<std::size_t, std::size_t> position;  // matrix row -> witness position
    for (std::size_t b = 0; b < k; ++b) position[w.rows[b]] = b;

    std::uint32_t neg_mask = 0;
    std::set<std::size_t> seen;
    for (std::size_t i = 0; i < c.support.size(); ++i) {
        const auto it = position.find(c.support[i]);
        if (it == position.end()) throw InvalidInput("coefficient support outside witness rows");
        if (!seen.insert(c.support[i]).second) throw InvalidInput("coefficient support repeated");
        if (c.weights[i] < 0) neg_mask |= std::uint32_t(1) << it->second;
    }
    const std::uint32_t full = static_cast<std::uint32_t>((std::uint64_t(1) << k) - 1);

    L1Certificate cert;
    cert.col_neg = pattern_column(m, w, neg_mask);
    cert.col_pos = pattern_column(m, w, full ^ neg_mask);

    const Rat mid = (w.thresholds.s + w.thresholds.r) / 2;
    const Rat half = (w.thresholds.r - w.thresholds.s) / 2;
    Rat l1(0), sum_neg(0), sum_pos(0);
    for (std::size_t i = 0; i < c.support.size(); ++i) {
        l1 += rat_abs(c.weights[i]);
        sum_neg += c.weights[i] * (m.at(c.support[i], cert.col_neg) - mid);
        sum_pos += c.weights[i] * (m.at(c.support[i], cert.col_pos) - mid);
    }
    cert.bound = half * l1;
    cert.achieved = std::max(rat_abs(sum_neg), rat_abs(sum_pos));
    cert.holds = cert.achieved >= cert.bound;
    return cert;
}

}  // namespace dlab
