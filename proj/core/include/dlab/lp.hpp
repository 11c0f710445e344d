#pragma once

#include <cstddef>
#include <vector>

#include "dlab/rational.hpp"

namespace dlab::lp {

enum class Sense { Le, Ge, Eq };

struct Constraint {
    std::vector<Rat> coeffs;  // one per variable
    Sense sense;
    Rat rhs;
};

// All variables are constrained x >= 0.
struct Problem {
    std::size_t num_vars = 0;
    bool maximize = false;
    std::vector<Rat> objective;  // size num_vars
    std::vector<Constraint> constraints;
};

enum class Status { Optimal, Infeasible, Unbounded };

// Exact solution with certificates; every returned certificate is verified
// internally before the call returns (a std::logic_error signals a solver
// bug, never bad user input).
//
// Duals (Optimal): one multiplier per constraint. For minimization they
// satisfy A^T y <= c componentwise, y_i >= 0 on Ge rows, y_i <= 0 on Le
// rows, free on Eq rows, b.y == objective, and exact complementary
// slackness. For maximization the inequalities flip (A^T y >= c, y_i <= 0 on
// Ge, y_i >= 0 on Le).
//
// Farkas (Infeasible): y with y_i >= 0 on Ge rows, y_i <= 0 on Le rows,
// sum_i y_i a_i <= 0 componentwise and y.b > 0, certifying that no x >= 0
// satisfies the constraints.
//
// Ray (Unbounded): a feasible point ray_base and a direction ray >= 0 with
// A.ray respecting every row's sense direction and the objective strictly
// improving along it.
struct Solution {
    Status status = Status::Optimal;
    Rat objective;
    std::vector<Rat> primal;
    std::vector<Rat> dual;
    std::vector<Rat> farkas;
    std::vector<Rat> ray;
    std::vector<Rat> ray_base;
};

// Two-phase primal simplex over exact rationals with Bland's rule (smallest
// eligible index enters; smallest basis index leaves on ratio ties), so the
// iteration always terminates.
//
// Errors: num_vars < 1 or mismatched dimensions.
Solution solve(const Problem& p);

}  // namespace dlab::lp
