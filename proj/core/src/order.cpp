#include "dlab/order.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "dlab/error.hpp"

namespace dlab {

namespace {

using Word = std::uint64_t;

std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

bool mask_any(const Word* a, std::size_t W) {
    for (std::size_t w = 0; w < W; ++w)
        if (a[w]) return true;
    return false;
}

void mask_and(Word* dst, const Word* a, const Word* b, std::size_t W) {
    for (std::size_t w = 0; w < W; ++w) dst[w] = a[w] & b[w];
}

struct MatchScratch {
    std::vector<int> match;     // position -> column, -1 when unmatched
    std::vector<Word> visited;  // column-visited scratch, W words
};

// Kuhn augmenting step for position q over slot masks `slots` (slot i at
// slots + i*W). Positions range over [q0, t).
bool kuhn_augment(const Word* slots, std::size_t W, std::size_t q0, std::size_t t, std::size_t q,
                  MatchScratch& sc) {
    const Word* cm = slots + q * W;
    for (std::size_t w = 0; w < W; ++w) {
        Word avail = cm[w] & ~sc.visited[w];
        while (avail) {
            const int b = std::countr_zero(avail);
            avail &= avail - 1;
            sc.visited[w] |= Word(1) << b;
            const int col = static_cast<int>(w * 64 + static_cast<std::size_t>(b));
            int owner = -1;
            for (std::size_t p = q0; p < t; ++p) {
                if (p != q && sc.match[p] == col) {
                    owner = static_cast<int>(p);
                    break;
                }
            }
            if (owner < 0 || kuhn_augment(slots, W, q0, t, static_cast<std::size_t>(owner), sc)) {
                sc.match[q] = col;
                return true;
            }
        }
    }
    return false;
}

// Perfect matching of positions [q0, t) into distinct columns of their slots.
bool kuhn_feasible(const Word* slots, std::size_t W, std::size_t q0, std::size_t t, MatchScratch& sc) {
    if (sc.match.size() < t) sc.match.resize(t);
    std::fill(sc.match.begin() + static_cast<std::ptrdiff_t>(q0), sc.match.begin() + static_cast<std::ptrdiff_t>(t), -1);
    for (std::size_t q = q0; q < t; ++q) {
        std::fill(sc.visited.begin(), sc.visited.end(), Word(0));
        if (!kuhn_augment(slots, W, q0, t, q, sc)) return false;
    }
    return true;
}

struct SearchOutcome {
    std::size_t best = 0;
    std::vector<std::size_t> rows, cols;
    std::uint64_t nodes = 0;
    bool aborted = false;
};

class StairSearch {
public:
    StairSearch(const EvalMatrix& m, const ThresholdPair& t, std::size_t k_cap)
        : n_(m.rows()), c_(m.cols()), W_(words_for(m.cols())), k_cap_(k_cap) {
        high_.assign(n_ * W_, 0);
        low_.assign(n_ * W_, 0);
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < c_; ++j) {
                const Rat& e = m.at(i, j);
                if (e >= t.r) high_[i * W_ + j / 64] |= Word(1) << (j % 64);
                if (e <= t.s) low_[i * W_ + j / 64] |= Word(1) << (j % 64);
            }
        }
        cand_.assign((k_cap_ + 1) * std::max<std::size_t>(k_cap_, 1) * W_, 0);
        running_.assign((k_cap_ + 1) * W_, 0);
        used_.assign(n_, 0);
        prefix_.reserve(k_cap_);
        scratch_.match.assign(std::max<std::size_t>(k_cap_, 1), -1);
        scratch_.visited.assign(W_, 0);
    }

    // Search one orientation. `carry_best` suppresses recording anything not
    // strictly longer (used so row-dominant wins ties). `stop_at` ends the
    // search as soon as best reaches it. Node counting continues from
    // `nodes_so_far` against `node_limit`.
    SearchOutcome run(Orientation orient, std::size_t carry_best, std::size_t stop_at,
                      std::uint64_t nodes_so_far, std::uint64_t node_limit) {
        orient_ = orient;
        out_ = SearchOutcome{};
        out_.best = carry_best;
        out_.nodes = nodes_so_far;
        stop_at_ = stop_at;
        node_limit_ = node_limit;
        std::fill(used_.begin(), used_.end(), std::uint8_t(0));
        prefix_.clear();
        Word* r0 = running_at(0);
        std::fill(r0, r0 + W_, Word(0));
        for (std::size_t j = 0; j < c_; ++j) r0[j / 64] |= Word(1) << (j % 64);
        if (k_cap_ > 0) dfs(0);
        return out_;
    }

private:
    Word* cand_at(std::size_t level, std::size_t slot) {
        return cand_.data() + (level * std::max<std::size_t>(k_cap_, 1) + slot) * W_;
    }
    Word* running_at(std::size_t level) { return running_.data() + level * W_; }

    // Lexicographically least system of distinct column representatives for
    // the t slots at `level` (greedy smallest column with a matchability
    // re-check on the remainder).
    std::vector<std::size_t> lexmin_cols(std::size_t level, std::size_t t) {
        std::vector<Word> rem(cand_at(level, 0), cand_at(level, 0) + t * W_);
        std::vector<Word> trial(rem.size());
        std::vector<std::size_t> out;
        out.reserve(t);
        for (std::size_t q = 0; q < t; ++q) {
            bool placed = false;
            for (std::size_t w = 0; w < W_ && !placed; ++w) {
                Word avail = rem[q * W_ + w];
                while (avail) {
                    const int b = std::countr_zero(avail);
                    avail &= avail - 1;
                    const std::size_t col = w * 64 + static_cast<std::size_t>(b);
                    trial = rem;
                    for (std::size_t p = q + 1; p < t; ++p) trial[p * W_ + w] &= ~(Word(1) << b);
                    if (kuhn_feasible(trial.data(), W_, q + 1, t, scratch_)) {
                        rem = trial;
                        out.push_back(col);
                        placed = true;
                        break;
                    }
                }
            }
            if (!placed) throw std::logic_error("staircase search: matching vanished while extracting columns");
        }
        return out;
    }

    void dfs(std::size_t t) {
        if (t > out_.best) {
            out_.best = t;
            out_.rows = prefix_;
            out_.cols = lexmin_cols(t, t);
        }
        if (out_.best >= stop_at_) return;
        if (t == k_cap_) return;
        if (t + std::min(n_ - t, k_cap_ - t) <= out_.best) return;
        for (std::size_t i = 0; i < n_; ++i) {
            if (used_[i]) continue;
            if (++out_.nodes > node_limit_) {
                out_.aborted = true;
                return;
            }
            const Word* hi = high_.data() + i * W_;
            const Word* lo = low_.data() + i * W_;
            bool ok = true;
            if (orient_ == Orientation::RowDominant) {
                for (std::size_t q = 0; q < t && ok; ++q) {
                    mask_and(cand_at(t + 1, q), cand_at(t, q), hi, W_);
                    ok = mask_any(cand_at(t + 1, q), W_);
                }
                if (ok) {
                    mask_and(cand_at(t + 1, t), running_at(t), hi, W_);
                    ok = mask_any(cand_at(t + 1, t), W_);
                }
                if (ok) mask_and(running_at(t + 1), running_at(t), lo, W_);
            } else {
                for (std::size_t q = 0; q < t && ok; ++q) {
                    mask_and(cand_at(t + 1, q), cand_at(t, q), lo, W_);
                    ok = mask_any(cand_at(t + 1, q), W_);
                }
                if (ok) {
                    mask_and(cand_at(t + 1, t), running_at(t), hi, W_);
                    ok = mask_any(cand_at(t + 1, t), W_);
                }
                if (ok) mask_and(running_at(t + 1), running_at(t), hi, W_);
            }
            if (!ok) continue;
            if (!kuhn_feasible(cand_at(t + 1, 0), W_, 0, t + 1, scratch_)) continue;
            used_[i] = 1;
            prefix_.push_back(i);
            dfs(t + 1);
            prefix_.pop_back();
            used_[i] = 0;
            if (out_.aborted) return;
            if (out_.best >= stop_at_) return;
            if (t + std::min(n_ - t, k_cap_ - t) <= out_.best) return;
        }
    }

    std::size_t n_, c_, W_, k_cap_;
    std::vector<Word> high_, low_;
    std::vector<Word> cand_, running_;
    std::vector<std::uint8_t> used_;
    std::vector<std::size_t> prefix_;
    MatchScratch scratch_;
    Orientation orient_ = Orientation::RowDominant;
    std::size_t stop_at_ = 0;
    std::uint64_t node_limit_ = 0;
    SearchOutcome out_;
};

constexpr std::size_t kNoStop = static_cast<std::size_t>(-1);

struct TwoSidedOutcome {
    std::size_t rank = 0;
    Orientation orient = Orientation::RowDominant;
    std::vector<std::size_t> rows, cols;
    std::uint64_t nodes = 0;
    bool aborted = false;
};

TwoSidedOutcome search_both(const EvalMatrix& m, const ThresholdPair& t, std::size_t k_cap,
                            std::size_t stop_at, std::uint64_t nodes_so_far, std::uint64_t node_limit) {
    StairSearch search(m, t, k_cap);
    TwoSidedOutcome out;
    SearchOutcome row = search.run(Orientation::RowDominant, 0, stop_at, nodes_so_far, node_limit);
    out.rank = row.best;
    out.orient = Orientation::RowDominant;
    out.rows = std::move(row.rows);
    out.cols = std::move(row.cols);
    out.nodes = row.nodes;
    out.aborted = row.aborted;
    if (!row.aborted && row.best < stop_at) {
        SearchOutcome col = search.run(Orientation::ColDominant, row.best, stop_at, row.nodes, node_limit);
        out.nodes = col.nodes;
        out.aborted = col.aborted;
        if (col.best > row.best) {
            out.rank = col.best;
            out.orient = Orientation::ColDominant;
            out.rows = std::move(col.rows);
            out.cols = std::move(col.cols);
        }
    }
    return out;
}

StaircaseWitness make_witness(const EvalMatrix& m, const ThresholdPair& t, const TwoSidedOutcome& o) {
    StaircaseWitness w;
    w.orientation = o.orient;
    w.rows = o.rows;
    w.cols = o.cols;
    w.thresholds = t;
    const StaircaseCheck chk = check_staircase(m, w);
    if (!chk.ok) throw std::logic_error("staircase search produced an invalid witness");
    return w;
}

}  // namespace

OrderRankResult order_rank(const EvalMatrix& m, const ThresholdPair& t, std::size_t k_max,
                           SearchBudget budget) {
    if (k_max < 1) throw InvalidInput("order_rank requires k_max >= 1");
    const std::size_t k_cap = std::min({k_max, m.rows(), m.cols()});
    const TwoSidedOutcome o = search_both(m, t, k_cap, kNoStop, 0, budget.node_limit);
    OrderRankResult res;
    res.rank = o.rank;
    res.exhausted = !o.aborted;
    res.nodes = o.nodes;
    if (o.rank >= 1) res.witness = make_witness(m, t, o);
    return res;
}

DefectProfile defect_profile(const EvalMatrix& m, std::size_t k_max, SearchBudget budget) {
    if (k_max < 1) throw InvalidInput("defect_profile requires k_max >= 1");
    DefectProfile profile;
    const std::vector<Rat> values = distinct_entry_values(m);
    if (values.size() < 2) return profile;

    struct Pair {
        Rat gap, s, r;
    };
    std::vector<Pair> pairs;
    for (std::size_t a = 0; a < values.size(); ++a)
        for (std::size_t b = a + 1; b < values.size(); ++b)
            pairs.push_back({values[b] - values[a], values[a], values[b]});
    std::sort(pairs.begin(), pairs.end(), [](const Pair& x, const Pair& y) {
        if (x.gap != y.gap) return x.gap > y.gap;
        return x.s < y.s;
    });

    const std::size_t k_cap = std::min({k_max, m.rows(), m.cols()});
    std::size_t ptr = 0;
    std::uint64_t nodes = 0;
    for (std::size_t k = 1; k <= k_cap; ++k) {
        bool found = false;
        for (std::size_t idx = ptr; idx < pairs.size(); ++idx) {
            const ThresholdPair t(pairs[idx].s, pairs[idx].r);
            const TwoSidedOutcome o = search_both(m, t, k, k, nodes, budget.node_limit);
            nodes = o.nodes;
            if (o.aborted && o.rank < k) {
                profile.exhausted = false;
                profile.nodes = nodes;
                return profile;
            }
            if (o.rank >= k) {
                profile.entries.push_back({k, pairs[idx].gap, make_witness(m, t, o)});
                ptr = idx;
                found = true;
                break;
            }
        }
        if (!found) break;
    }
    profile.nodes = nodes;
    return profile;
}

}  // namespace dlab
