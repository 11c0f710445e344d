#include "dlab/convex.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "dlab/error.hpp"
#include "dlab/generators.hpp"

namespace dlab::convex {

void validate_family(const SetFamily& f) {
    if (f.ground < 1) throw InvalidInput("set family needs a non-empty ground set");
    for (const auto& mem : f.members) {
        if (mem.empty()) throw InvalidInput("set family members must be non-empty");
        for (std::size_t q = 0; q < mem.size(); ++q) {
            if (mem[q] >= f.ground) throw InvalidInput("set family member out of range");
            if (q > 0 && mem[q] <= mem[q - 1]) throw InvalidInput("set family members must be sorted and duplicate-free");
        }
    }
}

GameSolution ptak_value(const SetFamily& f) {
    validate_family(f);
    const std::size_t g = f.ground;

    GameSolution out;
    if (f.members.empty()) {
        out.value = 0;
        out.mean.assign(g, Rat(0));
        out.mean[0] = 1;
        return out;
    }

    // Variables: mu_0..mu_{g-1}, then t. Minimize t subject to sum mu = 1 and
    // mu(F) - t <= 0 for every member F.
    lp::Problem p;
    p.num_vars = g + 1;
    p.objective.assign(g + 1, Rat(0));
    p.objective[g] = 1;
    {
        lp::Constraint c;
        c.coeffs.assign(g + 1, Rat(0));
        for (std::size_t i = 0; i < g; ++i) c.coeffs[i] = 1;
        c.sense = lp::Sense::Eq;
        c.rhs = 1;
        p.constraints.push_back(std::move(c));
    }
    for (const auto& mem : f.members) {
        lp::Constraint c;
        c.coeffs.assign(g + 1, Rat(0));
        for (std::size_t pt : mem) c.coeffs[pt] = 1;
        c.coeffs[g] = -1;
        c.sense = lp::Sense::Le;
        c.rhs = 0;
        p.constraints.push_back(std::move(c));
    }
    const lp::Solution s = lp::solve(p);
    if (s.status != lp::Status::Optimal) throw std::logic_error("mass game LP must be feasible and bounded");

    out.value = s.objective;
    out.mean.assign(s.primal.begin(), s.primal.begin() + static_cast<std::ptrdiff_t>(g));
    out.dual.resize(f.members.size());
    Rat total(0);
    for (std::size_t k = 0; k < f.members.size(); ++k) {
        out.dual[k] = -s.dual[k + 1];  // Le rows of a min problem carry y <= 0
        total += out.dual[k];
    }
    if (total == 0) {
        out.dual.assign(f.members.size(), Rat(0));
        out.dual[0] = 1;
    } else {
        for (Rat& d : out.dual) d /= total;
    }

    // Exact certificate re-check: the mean's worst member mass equals the
    // value, and the dual's least point coverage equals it too.
    Rat mass_sum(0);
    for (const Rat& v : out.mean) {
        if (v < 0) throw std::logic_error("mass game mean has a negative weight");
        mass_sum += v;
    }
    if (mass_sum != 1) throw std::logic_error("mass game mean is not a probability vector");
    Rat worst(0);
    for (const auto& mem : f.members) {
        Rat mass(0);
        for (std::size_t pt : mem) mass += out.mean[pt];
        if (mass > worst) worst = mass;
    }
    if (worst != out.value) throw std::logic_error("mass game value disagrees with its mean");
    Rat dual_sum(0);
    for (const Rat& d : out.dual) {
        if (d < 0) throw std::logic_error("mass game dual has a negative weight");
        dual_sum += d;
    }
    if (dual_sum != 1) throw std::logic_error("mass game dual is not a probability vector");
    std::optional<Rat> least;
    for (std::size_t pt = 0; pt < g; ++pt) {
        Rat cover(0);
        for (std::size_t k = 0; k < f.members.size(); ++k) {
            const auto& mem = f.members[k];
            if (std::binary_search(mem.begin(), mem.end(), pt)) cover += out.dual[k];
        }
        if (!least || cover < *least) least = cover;
    }
    if (!least || *least != out.value) throw std::logic_error("mass game dual coverage disagrees with the value");
    return out;
}

namespace {

struct ChainSearch {
    const SetFamily& f;
    std::size_t length;
    std::uint64_t node_limit;
    std::uint64_t nodes = 0;
    bool aborted = false;
    std::size_t longest = 0;
    std::vector<std::uint64_t> member_mask;
    std::vector<std::size_t> picked_members;
    std::vector<std::uint64_t> picked_sets;
    std::set<std::pair<std::uint64_t, std::size_t>> dead;  // (set, step) that cannot finish

    bool dfs(std::uint64_t current, std::size_t step) {
        if (step > longest) longest = step;
        if (step == length) return true;
        // Each later step must add at least one fresh point.
        const std::size_t room = f.ground - static_cast<std::size_t>(std::popcount(current));
        if (room < length - step) return false;
        if (dead.count({current, step})) return false;
        for (std::size_t mi = 0; mi < f.members.size(); ++mi) {
            if (++nodes > node_limit) {
                aborted = true;
                return false;
            }
            const std::uint64_t grown = current | member_mask[mi];
            if (grown != current) {
                picked_members.push_back(mi);
                picked_sets.push_back(grown);
                if (dfs(grown, step + 1)) return true;
                picked_members.pop_back();
                picked_sets.pop_back();
                if (aborted) return false;
            } else {
                // The member fits inside the current set; pad with one point.
                for (std::size_t pt = 0; pt < f.ground; ++pt) {
                    const std::uint64_t bit = std::uint64_t(1) << pt;
                    if (current & bit) continue;
                    if (++nodes > node_limit) {
                        aborted = true;
                        return false;
                    }
                    picked_members.push_back(mi);
                    picked_sets.push_back(current | bit);
                    if (dfs(current | bit, step + 1)) return true;
                    picked_members.pop_back();
                    picked_sets.pop_back();
                    if (aborted) return false;
                }
            }
        }
        dead.insert({current, step});
        return false;
    }
};

}  // namespace

PtakChainResult ptak_chain_search(const SetFamily& f, std::size_t length, SearchBudget budget) {
    validate_family(f);
    if (length < 1) throw InvalidInput("chain length must be >= 1");
    if (f.ground > 63) throw InvalidInput("chain search supports ground sets up to 63 points");

    PtakChainResult res;
    if (f.members.empty()) return res;

    ChainSearch search{f, length, budget.node_limit};
    search.member_mask.reserve(f.members.size());
    for (const auto& mem : f.members) {
        std::uint64_t mask = 0;
        for (std::size_t pt : mem) mask |= std::uint64_t(1) << pt;
        search.member_mask.push_back(mask);
    }

    const bool found = search.dfs(0, 0);
    res.nodes = search.nodes;
    res.exhausted = !search.aborted;
    res.longest = search.longest;
    res.found = found;
    if (found) {
        res.chain.member_indices = search.picked_members;
        for (std::uint64_t mask : search.picked_sets) {
            std::vector<std::size_t> set;
            for (std::size_t pt = 0; pt < f.ground; ++pt)
                if ((mask >> pt) & 1u) set.push_back(pt);
            res.chain.chain_sets.push_back(std::move(set));
        }
        // Re-verify strictness and membership.
        std::uint64_t prev = 0;
        for (std::size_t nidx = 0; nidx < length; ++nidx) {
            const std::uint64_t cur = search.picked_sets[nidx];
            if ((search.member_mask[res.chain.member_indices[nidx]] & ~cur) != 0)
                throw std::logic_error("chain step does not contain its member");
            if (nidx > 0 && ((prev & ~cur) != 0 || prev == cur))
                throw std::logic_error("chain is not strictly increasing");
            prev = cur;
        }
    }
    return res;
}

MazurResult mazur_approx(const EvalMatrix& m, const std::vector<std::size_t>& seq,
                         const std::vector<Rat>& target, std::size_t tail) {
    if (seq.empty()) throw InvalidInput("row sequence is empty");
    std::set<std::size_t> seen;
    for (std::size_t r : seq) {
        if (r >= m.rows()) throw InvalidInput("row sequence index out of range");
        if (!seen.insert(r).second) throw InvalidInput("row sequence index repeated");
    }
    if (tail >= seq.size()) throw InvalidInput("tail start is past the end of the sequence");
    if (target.size() != m.cols()) throw InvalidInput("target length must match the column count");

    const std::vector<std::size_t> rows(seq.begin() + static_cast<std::ptrdiff_t>(tail), seq.end());
    const std::size_t K = rows.size();

    // Variables: c_0..c_{K-1}, then d. Minimize d subject to sum c = 1 and
    // |sum_i c_i M(row_i, col) - target(col)| <= d per column.
    lp::Problem p;
    p.num_vars = K + 1;
    p.objective.assign(K + 1, Rat(0));
    p.objective[K] = 1;
    {
        lp::Constraint c;
        c.coeffs.assign(K + 1, Rat(0));
        for (std::size_t i = 0; i < K; ++i) c.coeffs[i] = 1;
        c.sense = lp::Sense::Eq;
        c.rhs = 1;
        p.constraints.push_back(std::move(c));
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
        lp::Constraint up, down;
        up.coeffs.assign(K + 1, Rat(0));
        down.coeffs.assign(K + 1, Rat(0));
        for (std::size_t i = 0; i < K; ++i) {
            up.coeffs[i] = m.at(rows[i], j);
            down.coeffs[i] = m.at(rows[i], j);
        }
        up.coeffs[K] = -1;
        up.sense = lp::Sense::Le;
        up.rhs = target[j];
        down.coeffs[K] = 1;
        down.sense = lp::Sense::Ge;
        down.rhs = target[j];
        p.constraints.push_back(std::move(up));
        p.constraints.push_back(std::move(down));
    }
    const lp::Solution s = lp::solve(p);
    if (s.status != lp::Status::Optimal) throw std::logic_error("approximation LP must be feasible and bounded");

    MazurResult res;
    res.coefficients.support = rows;
    res.coefficients.weights.assign(s.primal.begin(), s.primal.begin() + static_cast<std::ptrdiff_t>(K));
    res.coefficients.convex = true;
    res.distance = s.objective;

    if (!res.coefficients.is_convex()) throw std::logic_error("approximation weights are not convex");
    Rat worst(0);
    for (std::size_t j = 0; j < m.cols(); ++j) {
        Rat v(0);
        for (std::size_t i = 0; i < K; ++i) v += res.coefficients.weights[i] * m.at(rows[i], j);
        const Rat err = rat_abs(v - target[j]);
        if (err > worst) worst = err;
    }
    if (worst != res.distance) throw std::logic_error("approximation distance disagrees with its weights");
    return res;
}

GaugeResult gauge_norm(const std::vector<std::vector<Rat>>& generators, const std::vector<Rat>& target) {
    if (target.empty()) throw InvalidInput("target vector is empty");
    for (const auto& gvec : generators)
        if (gvec.size() != target.size()) throw InvalidInput("generator dimension mismatch");

    GaugeResult res;
    const std::size_t K = generators.size();
    if (K == 0) {
        bool zero = true;
        for (const Rat& v : target)
            if (v != 0) zero = false;
        res.in_span = zero;
        res.value = 0;
        return res;
    }

    // Variables: p_0..p_{K-1}, n_0..n_{K-1}; coefficients c_k = p_k - n_k.
    lp::Problem p;
    p.num_vars = 2 * K;
    p.objective.assign(2 * K, Rat(1));
    for (std::size_t d = 0; d < target.size(); ++d) {
        lp::Constraint c;
        c.coeffs.assign(2 * K, Rat(0));
        for (std::size_t k = 0; k < K; ++k) {
            c.coeffs[k] = generators[k][d];
            c.coeffs[K + k] = -generators[k][d];
        }
        c.sense = lp::Sense::Eq;
        c.rhs = target[d];
        p.constraints.push_back(std::move(c));
    }
    const lp::Solution s = lp::solve(p);
    if (s.status == lp::Status::Infeasible) {
        res.in_span = false;
        res.value = 0;
        return res;
    }
    if (s.status != lp::Status::Optimal) throw std::logic_error("gauge LP cannot be unbounded");

    res.in_span = true;
    res.value = s.objective;
    res.coefficients.resize(K);
    Rat total(0);
    for (std::size_t k = 0; k < K; ++k) {
        res.coefficients[k] = s.primal[k] - s.primal[K + k];
        total += rat_abs(res.coefficients[k]);
    }
    if (total != res.value) throw std::logic_error("gauge value disagrees with its coefficients");
    for (std::size_t d = 0; d < target.size(); ++d) {
        Rat v(0);
        for (std::size_t k = 0; k < K; ++k) v += res.coefficients[k] * generators[k][d];
        if (v != target[d]) throw std::logic_error("gauge coefficients do not reproduce the target");
    }
    return res;
}

ProbeReport conv_stability_probe(const EvalMatrix& m, const ThresholdPair& t, std::size_t samples,
                                 std::uint64_t seed, std::size_t k_max, SearchBudget budget) {
    if (samples < 1) throw InvalidInput("probe needs at least one sample");
    if (k_max < 1) throw InvalidInput("probe requires k_max >= 1");

    const OrderRankResult base = order_rank(m, t, k_max, budget);

    Rng rng(seed);
    EvalMatrix ext = m;
    ProbeReport report;
    for (std::size_t s = 0; s < samples; ++s) {
        const std::size_t max_support = std::min<std::size_t>(m.rows(), 4);
        const std::size_t size = max_support <= 2 ? max_support : 2 + rng.below(max_support - 1);
        CoefVector combo;
        combo.support = rng.distinct(std::max<std::size_t>(size, 1), m.rows());
        combo.weights = rng.convex_weights(combo.support.size());
        combo.convex = true;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Rat v(0);
            for (std::size_t i = 0; i < combo.support.size(); ++i)
                v += combo.weights[i] * m.at(combo.support[i], j);
            ext.entries.push_back(v);
        }
        ext.row_labels.push_back("conv" + std::to_string(s));
        report.appended.push_back(std::move(combo));
    }

    const OrderRankResult extended = order_rank(ext, t, k_max, budget);

    report.base_rank = base.rank;
    report.extended_rank = extended.rank;
    report.extended = extended.rank > base.rank;
    report.witness = extended.witness;
    report.exhausted = base.exhausted && extended.exhausted;
    report.seed = seed;
    report.samples = samples;
    return report;
}

}  // namespace dlab::convex
