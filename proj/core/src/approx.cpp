#include "dlab/approx.hpp"

#include <algorithm>
#include <set>

#include "dlab/error.hpp"

namespace dlab::approx {

namespace {

void validate_inputs(const EvalMatrix& m, const std::vector<std::size_t>& rows,
                     const std::vector<Rat>& target, const Rat& epsilon) {
    if (rows.empty()) throw InvalidInput("no candidate feature rows");
    std::set<std::size_t> seen;
    for (std::size_t r : rows) {
        if (r >= m.rows()) throw InvalidInput("feature row index out of range");
        if (!seen.insert(r).second) throw InvalidInput("feature row index repeated");
    }
    if (target.size() != m.cols()) throw InvalidInput("target length must match the column count");
    if (epsilon <= 0) throw InvalidInput("epsilon must be positive");
}

}  // namespace

FeatureOutcome select_features(const EvalMatrix& m, const std::vector<std::size_t>& rows,
                               const std::vector<Rat>& target, const Rat& epsilon, std::size_t cap) {
    validate_inputs(m, rows, target, epsilon);
    const std::size_t c = m.cols();
    if (cap == 0) cap = c * (c - 1);
    const Rat three_eps = Rat(3) * epsilon;

    std::vector<std::size_t> features;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;

    auto make_failure = [&](bool cap_hit) {
        FeatureFailure fail;
        fail.pairs = pairs;
        fail.features = features;
        fail.cap_hit = cap_hit;
        fail.iterations = pairs.size();
        fail.pattern.resize(features.size());
        for (std::size_t t = 0; t < features.size(); ++t) {
            fail.pattern[t].reserve(pairs.size());
            for (const auto& [x, y] : pairs)
                fail.pattern[t].push_back(rat_abs(m.at(features[t], x) - m.at(features[t], y)));
        }
        return fail;
    };

    while (true) {
        // Least unseparated pair with a large target difference.
        std::size_t px = c, py = c;
        for (std::size_t x = 0; x < c && px == c; ++x) {
            for (std::size_t y = x + 1; y < c; ++y) {
                if (rat_abs(target[x] - target[y]) <= three_eps) continue;
                bool close = true;
                for (std::size_t f : features) {
                    if (rat_abs(m.at(f, x) - m.at(f, y)) > epsilon) {
                        close = false;
                        break;
                    }
                }
                if (close) {
                    px = x;
                    py = y;
                    break;
                }
            }
        }
        if (px == c) {
            SelectResult ok;
            ok.features = features;
            ok.pairs = pairs;
            ok.iterations = pairs.size();
            return ok;
        }
        if (pairs.size() >= cap) return make_failure(true);
        pairs.emplace_back(px, py);

        // Admissible rows separate every recorded pair by more than 3*epsilon.
        std::size_t chosen = m.rows();
        std::size_t fallback = m.rows();
        for (std::size_t f : rows) {
            bool admissible = true;
            for (const auto& [x, y] : pairs) {
                if (rat_abs(m.at(f, x) - m.at(f, y)) <= three_eps) {
                    admissible = false;
                    break;
                }
            }
            if (!admissible) continue;
            if (fallback == m.rows()) fallback = f;
            bool tracks_target = true;
            for (const auto& [x, y] : pairs) {
                if (rat_abs(m.at(f, x) - target[x]) > epsilon ||
                    rat_abs(m.at(f, y) - target[y]) > epsilon) {
                    tracks_target = false;
                    break;
                }
            }
            if (tracks_target) {
                chosen = f;
                break;
            }
        }
        if (chosen == m.rows()) chosen = fallback;
        if (chosen == m.rows()) return make_failure(false);
        features.push_back(chosen);
    }
}

Rat MonotoneTable::sup_below(const std::vector<Rat>& query) const {
    if (query.size() != features.size()) throw InvalidInput("query dimension mismatch");
    Rat best = floor_value;
    bool any = false;
    for (std::size_t x = 0; x < feature_vectors.size(); ++x) {
        bool below = true;
        for (std::size_t d = 0; d < query.size(); ++d) {
            if (feature_vectors[x][d] > query[d]) {
                below = false;
                break;
            }
        }
        if (below && (!any || target[x] > best)) {
            best = target[x];
            any = true;
        }
    }
    return best;
}

Rat MonotoneTable::evaluate(const std::vector<Rat>& query) const {
    std::vector<Rat> shifted = query;
    for (Rat& v : shifted) v += epsilon;
    return sup_below(shifted);
}

namespace {

MonotoneTable make_table(const EvalMatrix& m, const std::vector<std::size_t>& features,
                         const std::vector<Rat>& target, const Rat& epsilon) {
    MonotoneTable t;
    t.features = features;
    t.target = target;
    t.epsilon = epsilon;
    t.floor_value = -m.bound;
    t.feature_vectors.resize(m.cols());
    for (std::size_t x = 0; x < m.cols(); ++x) {
        t.feature_vectors[x].reserve(features.size());
        for (std::size_t f : features) t.feature_vectors[x].push_back(m.at(f, x));
    }
    for (std::size_t x = 0; x < m.cols(); ++x) {
        const std::vector<Rat>& v = t.feature_vectors[x];
        if (!t.observed.count(v)) t.observed[v] = t.evaluate(v);
    }
    return t;
}

}  // namespace

MonotoneTable build_monotone_table(const EvalMatrix& m, const std::vector<std::size_t>& features,
                                   const std::vector<Rat>& target, const Rat& epsilon) {
    if (features.empty()) throw InvalidInput("no features given");
    validate_inputs(m, features, target, epsilon);
    return make_table(m, features, target, epsilon);
}

ApproxOutcome approximate(const EvalMatrix& m, const std::vector<std::size_t>& rows,
                          const std::vector<Rat>& target, const Rat& epsilon, std::size_t cap) {
    FeatureOutcome sel = select_features(m, rows, target, epsilon, cap);
    if (std::holds_alternative<FeatureFailure>(sel)) return std::get<FeatureFailure>(std::move(sel));

    ApproxResult res;
    res.selection = std::get<SelectResult>(std::move(sel));
    // An empty selection (no pair ever violated) yields the constant table
    // h = max target, which the sandwich bounds still cover.
    res.table = make_table(m, res.selection.features, target, epsilon);
    res.approximant.reserve(m.cols());
    res.err = 0;
    for (std::size_t x = 0; x < m.cols(); ++x) {
        const Rat h = res.table.observed.at(res.table.feature_vectors[x]);
        res.approximant.push_back(h);
        const Rat e = rat_abs(target[x] - h);
        if (e > res.err) res.err = e;
    }
    return res;
}

}  // namespace dlab::approx
