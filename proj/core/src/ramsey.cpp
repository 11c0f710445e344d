#include "dlab/ramsey.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "dlab/error.hpp"
#include "dlab/independence.hpp"
#include "dlab/rational.hpp"

namespace dlab {

PairColoring::PairColoring(std::size_t n, std::uint8_t fill) : n_(n) {
    if (n < 1) throw InvalidInput("coloring needs at least one vertex");
    if (fill > 1) throw InvalidInput("colors are 0 or 1");
    colors_.assign(n * (n - 1) / 2, fill);
}

std::size_t PairColoring::index(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    if (i < 1 || j > n_ || i == j) throw InvalidInput("pair indices must satisfy 1 <= i < j <= n");
    // Pairs with first element i occupy a block of length n - i.
    return (i - 1) * n_ - (i - 1) * i / 2 + (j - i - 1);
}

std::uint8_t PairColoring::color(std::size_t i, std::size_t j) const { return colors_[index(i, j)]; }

void PairColoring::set_color(std::size_t i, std::size_t j, std::uint8_t c) {
    if (c > 1) throw InvalidInput("colors are 0 or 1");
    colors_[index(i, j)] = c;
}

namespace {

struct GreedyOutcome {
    std::vector<std::size_t> set;
    std::uint8_t color;
};

GreedyOutcome greedy_focal(const PairColoring& g) {
    const std::size_t n = g.size();
    std::vector<std::size_t> live(n);
    for (std::size_t v = 0; v < n; ++v) live[v] = v + 1;

    struct Step {
        std::size_t v;
        std::uint8_t c;  // 2 marks the final free vertex
    };
    std::vector<Step> seq;
    while (!live.empty()) {
        const std::size_t v = live.front();
        if (live.size() == 1) {
            seq.push_back({v, 2});
            break;
        }
        std::vector<std::size_t> part[2];
        for (std::size_t idx = 1; idx < live.size(); ++idx)
            part[g.color(v, live[idx])].push_back(live[idx]);
        const std::uint8_t c = part[1].size() > part[0].size() ? 1 : 0;
        seq.push_back({v, c});
        live = std::move(part[c]);
    }

    GreedyOutcome best{{}, 0};
    for (std::uint8_t c = 0; c < 2; ++c) {
        std::vector<std::size_t> set;
        for (std::size_t t = 0; t + 1 < seq.size(); ++t)
            if (seq[t].c == c) set.push_back(seq[t].v);
        set.push_back(seq.back().v);  // the final vertex joins either class
        if (c == 0 || set.size() > best.set.size()) best = {std::move(set), c};
    }
    return best;
}

struct CliqueOutcome {
    std::uint64_t set = 0;
    std::size_t size = 0;
};

void max_clique_dfs(const std::vector<std::uint64_t>& adj, std::uint64_t cur, std::size_t size,
                    std::uint64_t cand, CliqueOutcome& best) {
    if (size > best.size) best = {cur, size};
    if (!cand) return;
    if (size + static_cast<std::size_t>(std::popcount(cand)) <= best.size) return;
    const int v = std::countr_zero(cand);
    const std::uint64_t bit = std::uint64_t(1) << v;
    max_clique_dfs(adj, cur | bit, size + 1, cand & adj[static_cast<std::size_t>(v)], best);
    max_clique_dfs(adj, cur, size, cand ^ bit, best);
}

}  // namespace

RamseyResult ramsey_pairs(const PairColoring& coloring, std::size_t m) {
    if (m < 1) throw InvalidInput("ramsey_pairs requires m >= 1");
    const std::size_t n = coloring.size();

    GreedyOutcome greedy = greedy_focal(coloring);
    if (greedy.set.size() >= m) {
        greedy.set.resize(m);
        return {true, std::move(greedy.set), greedy.color};
    }

    if (n <= 32) {
        // Exact per-color maximum clique; include-first ascending order makes
        // the first maximum found the lexicographically least one.
        std::vector<std::size_t> best_set;
        std::uint8_t best_color = 0;
        for (std::uint8_t c = 0; c < 2; ++c) {
            std::vector<std::uint64_t> adj(n, 0);
            for (std::size_t i = 1; i <= n; ++i)
                for (std::size_t j = i + 1; j <= n; ++j)
                    if (coloring.color(i, j) == c) {
                        adj[i - 1] |= std::uint64_t(1) << (j - 1);
                        adj[j - 1] |= std::uint64_t(1) << (i - 1);
                    }
            CliqueOutcome out;
            const std::uint64_t all = n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
            max_clique_dfs(adj, 0, 0, all, out);
            if (out.size > best_set.size()) {
                best_set.clear();
                for (std::size_t v = 0; v < n; ++v)
                    if ((out.set >> v) & 1u) best_set.push_back(v + 1);
                best_color = c;
            }
        }
        const bool ok = best_set.size() >= m;
        if (ok) best_set.resize(m);
        return {ok, std::move(best_set), best_color};
    }

    return {false, std::move(greedy.set), greedy.color};
}

CauchyResult cauchy_subsequence(const EvalMatrix& m, const Rat& epsilon) {
    if (epsilon <= 0) throw InvalidInput("epsilon must be positive");
    const Rat& C = m.bound;
    Int cells = rat_ceil(Rat(2) * C / epsilon);
    if (cells < 1) cells = 1;

    std::map<std::vector<Int>, std::vector<std::size_t>> bins;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::vector<Int> key;
        key.reserve(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Int cell = rat_floor((m.at(i, j) + C) / epsilon);
            if (cell > cells - 1) cell = cells - 1;  // close the top cell
            key.push_back(std::move(cell));
        }
        bins[std::move(key)].push_back(i);
    }

    const std::vector<std::size_t>* best = nullptr;
    for (const auto& [key, rows] : bins) {
        if (!best || rows.size() > best->size() ||
            (rows.size() == best->size() && rows.front() < best->front()))
            best = &rows;
    }
    return {*best, epsilon};
}

DichotomyOutcome rosenthal_dichotomy(const EvalMatrix& m, const ThresholdPair& t, const Rat& epsilon,
                                     std::size_t want_cauchy, std::size_t want_indep,
                                     SearchBudget budget) {
    if (want_cauchy < 1 || want_indep < 1) throw InvalidInput("dichotomy targets must be >= 1");
    CauchyResult cauchy = cauchy_subsequence(m, epsilon);
    if (cauchy.rows.size() >= want_cauchy) return CauchyBranch{std::move(cauchy.rows), epsilon};

    IndependenceRankResult indep = independence_rank(m, t, want_indep, budget);
    if (indep.rank >= want_indep && indep.witness) return IndependentBranch{std::move(*indep.witness)};

    return DichotomyInconclusive{cauchy.rows.size(), indep.rank, indep.exhausted, indep.nodes};
}

}  // namespace dlab
