#include "dlab/lp.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "dlab/error.hpp"

namespace dlab::lp {

namespace {

void validate(const Problem& p) {
    if (p.num_vars < 1) throw InvalidInput("LP needs at least one variable");
    if (p.objective.size() != p.num_vars) throw InvalidInput("objective size mismatch");
    for (const auto& c : p.constraints)
        if (c.coeffs.size() != p.num_vars) throw InvalidInput("constraint size mismatch");
}

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

struct Tableau {
    std::size_t m = 0, N = 0;       // constraint rows, total columns
    std::vector<Rat> a;             // m x N
    std::vector<Rat> rhs;           // m, kept >= 0
    std::vector<std::size_t> basis; // m
    std::vector<Rat> cost;          // N, current phase costs
    std::vector<bool> artificial;   // N
    std::vector<std::size_t> unit_col;  // per row: its original +1 unit column
    std::vector<int> sigma;         // per row: +1, or -1 if the row was negated

    Rat& at(std::size_t i, std::size_t j) { return a[i * N + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a[i * N + j]; }

    void pivot(std::size_t pr, std::size_t pc) {
        const Rat piv = at(pr, pc);
        for (std::size_t j = 0; j < N; ++j) at(pr, j) /= piv;
        rhs[pr] /= piv;
        for (std::size_t k = 0; k < m; ++k) {
            if (k == pr) continue;
            const Rat f = at(k, pc);
            if (f == 0) continue;
            for (std::size_t j = 0; j < N; ++j) at(k, j) -= f * at(pr, j);
            rhs[k] -= f * rhs[pr];
        }
        basis[pr] = pc;
    }

    Rat reduced_cost(std::size_t j) const {
        Rat z(0);
        for (std::size_t i = 0; i < m; ++i) {
            if (cost[basis[i]] != 0) z += cost[basis[i]] * at(i, j);
        }
        return cost[j] - z;
    }

    Rat basic_objective() const {
        Rat z(0);
        for (std::size_t i = 0; i < m; ++i)
            if (cost[basis[i]] != 0) z += cost[basis[i]] * rhs[i];
        return z;
    }

    // Bland iteration. bar_artificials excludes artificial columns from
    // entering. Returns the entering column if unbounded, else nullopt on
    // optimality.
    std::optional<std::size_t> run_simplex(bool bar_artificials) {
        while (true) {
            std::size_t enter = N;
            for (std::size_t j = 0; j < N; ++j) {
                if (bar_artificials && artificial[j]) continue;
                bool is_basic = false;
                for (std::size_t i = 0; i < m; ++i)
                    if (basis[i] == j) {
                        is_basic = true;
                        break;
                    }
                if (is_basic) continue;
                if (reduced_cost(j) < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == N) return std::nullopt;

            std::size_t leave = m;
            Rat best_ratio(0);
            for (std::size_t i = 0; i < m; ++i) {
                if (at(i, enter) <= 0) continue;
                const Rat ratio = rhs[i] / at(i, enter);
                if (leave == m || ratio < best_ratio ||
                    (ratio == best_ratio && basis[i] < basis[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == m) return enter;  // unbounded
            pivot(leave, enter);
        }
    }

    // Multiplier for each row: y_i = (c_B B^{-1})_i, read off the row's
    // original unit column, then mapped back through the row sign.
    std::vector<Rat> duals_user() const {
        std::vector<Rat> y(m);
        for (std::size_t i = 0; i < m; ++i) {
            Rat z(0);
            for (std::size_t k = 0; k < m; ++k)
                if (cost[basis[k]] != 0) z += cost[basis[k]] * at(k, unit_col[i]);
            y[i] = Rat(sigma[i]) * z;
        }
        return y;
    }
};

Tableau build(const Problem& p) {
    Tableau t;
    t.m = p.constraints.size();
    const std::size_t n = p.num_vars;
    std::size_t n_art = 0;
    for (const auto& c : p.constraints) {
        const bool flip = c.rhs < 0;
        Sense s = c.sense;
        if (flip) s = s == Sense::Le ? Sense::Ge : (s == Sense::Ge ? Sense::Le : Sense::Eq);
        if (s != Sense::Le) ++n_art;
    }
    t.N = n + t.m + n_art;
    t.a.assign(t.m * t.N, Rat(0));
    t.rhs.resize(t.m);
    t.basis.resize(t.m);
    t.artificial.assign(t.N, false);
    t.unit_col.resize(t.m);
    t.sigma.resize(t.m);

    std::size_t next_art = n + t.m;
    for (std::size_t i = 0; i < t.m; ++i) {
        const Constraint& c = p.constraints[i];
        const bool flip = c.rhs < 0;
        t.sigma[i] = flip ? -1 : 1;
        Sense s = c.sense;
        if (flip) s = s == Sense::Le ? Sense::Ge : (s == Sense::Ge ? Sense::Le : Sense::Eq);
        for (std::size_t j = 0; j < n; ++j) t.at(i, j) = flip ? -c.coeffs[j] : c.coeffs[j];
        t.rhs[i] = flip ? -c.rhs : c.rhs;
        const std::size_t extra = n + i;  // this row's slack or surplus column
        if (s == Sense::Le) {
            t.at(i, extra) = 1;
            t.unit_col[i] = extra;
            t.basis[i] = extra;
        } else {
            if (s == Sense::Ge) t.at(i, extra) = -1;
            const std::size_t art = next_art++;
            t.at(i, art) = 1;
            t.artificial[art] = true;
            t.unit_col[i] = art;
            t.basis[i] = art;
        }
    }
    return t;
}

// ---- certificate verification ----------------------------------------

void verify_optimal(const Problem& p, const Solution& s) {
    if (s.primal.size() != p.num_vars || s.dual.size() != p.constraints.size())
        throw std::logic_error("LP: certificate size mismatch");
    for (const Rat& x : s.primal)
        if (x < 0) throw std::logic_error("LP: negative primal value");
    for (std::size_t i = 0; i < p.constraints.size(); ++i) {
        const Constraint& c = p.constraints[i];
        const Rat lhs = dot(c.coeffs, s.primal);
        const bool ok = c.sense == Sense::Le ? lhs <= c.rhs : (c.sense == Sense::Ge ? lhs >= c.rhs : lhs == c.rhs);
        if (!ok) throw std::logic_error("LP: primal infeasible");
        const Rat& y = s.dual[i];
        if (c.sense == Sense::Ge && (p.maximize ? y > 0 : y < 0))
            throw std::logic_error("LP: dual sign violated on Ge row");
        if (c.sense == Sense::Le && (p.maximize ? y < 0 : y > 0))
            throw std::logic_error("LP: dual sign violated on Le row");
        if (y != 0 && lhs != c.rhs) throw std::logic_error("LP: complementary slackness violated");
    }
    if (dot(s.primal, p.objective) != s.objective) throw std::logic_error("LP: objective mismatch");
    Rat yb(0);
    for (std::size_t i = 0; i < p.constraints.size(); ++i) yb += s.dual[i] * p.constraints[i].rhs;
    if (yb != s.objective) throw std::logic_error("LP: strong duality violated");
    for (std::size_t j = 0; j < p.num_vars; ++j) {
        Rat ya(0);
        for (std::size_t i = 0; i < p.constraints.size(); ++i)
            ya += s.dual[i] * p.constraints[i].coeffs[j];
        const bool ok = p.maximize ? ya >= p.objective[j] : ya <= p.objective[j];
        if (!ok) throw std::logic_error("LP: dual infeasible");
        if (s.primal[j] != 0 && ya != p.objective[j])
            throw std::logic_error("LP: complementary slackness violated on a variable");
    }
}

void verify_farkas(const Problem& p, const std::vector<Rat>& y) {
    if (y.size() != p.constraints.size()) throw std::logic_error("LP: Farkas size mismatch");
    Rat yb(0);
    bool nonzero = false;
    for (std::size_t i = 0; i < y.size(); ++i) {
        const Constraint& c = p.constraints[i];
        if (c.sense == Sense::Ge && y[i] < 0) throw std::logic_error("LP: Farkas sign violated");
        if (c.sense == Sense::Le && y[i] > 0) throw std::logic_error("LP: Farkas sign violated");
        if (y[i] != 0) nonzero = true;
        yb += y[i] * c.rhs;
    }
    if (!nonzero || yb <= 0) throw std::logic_error("LP: Farkas certificate is vacuous");
    for (std::size_t j = 0; j < p.num_vars; ++j) {
        Rat ya(0);
        for (std::size_t i = 0; i < y.size(); ++i) ya += y[i] * p.constraints[i].coeffs[j];
        if (ya > 0) throw std::logic_error("LP: Farkas combination not nonpositive");
    }
}

void verify_ray(const Problem& p, const Solution& s) {
    if (s.ray.size() != p.num_vars || s.ray_base.size() != p.num_vars)
        throw std::logic_error("LP: ray size mismatch");
    bool nonzero = false;
    for (const Rat& d : s.ray) {
        if (d < 0) throw std::logic_error("LP: ray leaves the nonnegative orthant");
        if (d != 0) nonzero = true;
    }
    if (!nonzero) throw std::logic_error("LP: zero ray");
    for (const Rat& x : s.ray_base)
        if (x < 0) throw std::logic_error("LP: ray base infeasible");
    for (const Constraint& c : p.constraints) {
        const Rat base = dot(c.coeffs, s.ray_base);
        const Rat dir = dot(c.coeffs, s.ray);
        const bool base_ok =
            c.sense == Sense::Le ? base <= c.rhs : (c.sense == Sense::Ge ? base >= c.rhs : base == c.rhs);
        const bool dir_ok = c.sense == Sense::Le ? dir <= 0 : (c.sense == Sense::Ge ? dir >= 0 : dir == 0);
        if (!base_ok || !dir_ok) throw std::logic_error("LP: ray not feasible");
    }
    const Rat gain = dot(p.objective, s.ray);
    if (p.maximize ? gain <= 0 : gain >= 0) throw std::logic_error("LP: ray does not improve");
}

}  // namespace

Solution solve(const Problem& p) {
    validate(p);
    const std::size_t n = p.num_vars;

    // Work on a minimization copy; flip results back at the end.
    std::vector<Rat> obj = p.objective;
    if (p.maximize)
        for (Rat& v : obj) v = -v;

    Solution sol;
    if (p.constraints.empty()) {
        sol.primal.assign(n, Rat(0));
        for (std::size_t j = 0; j < n; ++j) {
            if (obj[j] < 0) {
                sol.status = Status::Unbounded;
                sol.ray.assign(n, Rat(0));
                sol.ray[j] = 1;
                sol.ray_base.assign(n, Rat(0));
                sol.primal.clear();
                verify_ray(p, sol);
                return sol;
            }
        }
        sol.status = Status::Optimal;
        sol.objective = 0;
        verify_optimal(p, sol);
        return sol;
    }

    Tableau t = build(p);

    // Phase I: minimize the artificial sum.
    t.cost.assign(t.N, Rat(0));
    for (std::size_t j = 0; j < t.N; ++j)
        if (t.artificial[j]) t.cost[j] = 1;
    if (t.run_simplex(false)) throw std::logic_error("LP: phase I unbounded");
    if (t.basic_objective() > 0) {
        sol.status = Status::Infeasible;
        sol.farkas = t.duals_user();
        verify_farkas(p, sol.farkas);
        return sol;
    }

    // Drive artificials out of the basis where the row allows it; rows that
    // do not are redundant and stay pinned at zero.
    for (std::size_t i = 0; i < t.m; ++i) {
        if (!t.artificial[t.basis[i]]) continue;
        for (std::size_t j = 0; j < t.N; ++j) {
            if (t.artificial[j]) continue;
            if (t.at(i, j) != 0) {
                t.pivot(i, j);
                break;
            }
        }
    }

    // Phase II.
    t.cost.assign(t.N, Rat(0));
    for (std::size_t j = 0; j < n; ++j) t.cost[j] = obj[j];
    if (const auto enter = t.run_simplex(true)) {
        sol.status = Status::Unbounded;
        sol.ray.assign(n, Rat(0));
        if (*enter < n) sol.ray[*enter] = 1;
        sol.ray_base.assign(n, Rat(0));
        for (std::size_t i = 0; i < t.m; ++i) {
            if (t.basis[i] < n) sol.ray_base[t.basis[i]] = t.rhs[i];
            const Rat step = -t.at(i, *enter);
            if (t.basis[i] < n && step != 0) sol.ray[t.basis[i]] = step;
        }
        verify_ray(p, sol);
        return sol;
    }

    sol.status = Status::Optimal;
    sol.primal.assign(n, Rat(0));
    for (std::size_t i = 0; i < t.m; ++i)
        if (t.basis[i] < n) sol.primal[t.basis[i]] = t.rhs[i];
    sol.objective = dot(sol.primal, p.objective);
    sol.dual = t.duals_user();
    if (p.maximize)
        for (Rat& y : sol.dual) y = -y;
    verify_optimal(p, sol);
    return sol;
}

}  // namespace dlab::lp
