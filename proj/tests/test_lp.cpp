#include "doctest.h"

#include "dlab/error.hpp"
#include "dlab/generators.hpp"
#include "dlab/lp.hpp"
#include "oracles.hpp"

using namespace dlab;
using lp::Constraint;
using lp::Problem;
using lp::Sense;
using lp::Status;

namespace {

Constraint row(std::vector<Rat> coeffs, Sense s, Rat rhs) {
    return Constraint{std::move(coeffs), s, std::move(rhs)};
}

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    Rat out(0);
    for (std::size_t i = 0; i < a.size(); ++i) out += a[i] * b[i];
    return out;
}

bool point_feasible(const Problem& p, const std::vector<Rat>& x) {
    for (const Rat& v : x)
        if (v < 0) return false;
    for (const auto& c : p.constraints) {
        Rat lhs = dot(c.coeffs, x);
        if (c.sense == Sense::Le && lhs > c.rhs) return false;
        if (c.sense == Sense::Ge && lhs < c.rhs) return false;
        if (c.sense == Sense::Eq && lhs != c.rhs) return false;
    }
    return true;
}

}  // namespace

TEST_SUITE("lp") {

TEST_CASE("pinned minimization with dual recheck") {
    Problem p;
    p.num_vars = 2;
    p.objective = {Rat(1), Rat(1)};
    p.constraints = {row({Rat(1), Rat(2)}, Sense::Ge, Rat(3))};
    auto s = lp::solve(p);
    REQUIRE(s.status == Status::Optimal);
    CHECK(s.objective == Rat(3, 2));
    CHECK(s.primal == std::vector<Rat>{Rat(0), Rat(3, 2)});
    REQUIRE(s.dual.size() == 1);
    // Minimization duals: y >= 0 on Ge rows, A^T y <= c, b.y == objective.
    CHECK(s.dual[0] >= 0);
    CHECK(s.dual[0] * Rat(1) <= Rat(1));
    CHECK(s.dual[0] * Rat(2) <= Rat(1));
    CHECK(s.dual[0] * Rat(3) == s.objective);
}

TEST_CASE("pinned maximization") {
    Problem p;
    p.num_vars = 2;
    p.maximize = true;
    p.objective = {Rat(3), Rat(2)};
    p.constraints = {row({Rat(1), Rat(1)}, Sense::Le, Rat(4)),
                     row({Rat(1), Rat(0)}, Sense::Le, Rat(2))};
    auto s = lp::solve(p);
    REQUIRE(s.status == Status::Optimal);
    CHECK(s.objective == Rat(10));
    CHECK(s.primal == std::vector<Rat>{Rat(2), Rat(2)});
    // Maximization duals: y >= 0 on Le rows, A^T y >= c, b.y == objective.
    REQUIRE(s.dual.size() == 2);
    CHECK(s.dual[0] >= 0);
    CHECK(s.dual[1] >= 0);
    CHECK(s.dual[0] + s.dual[1] >= Rat(3));
    CHECK(s.dual[0] >= Rat(2));
    CHECK(Rat(4) * s.dual[0] + Rat(2) * s.dual[1] == s.objective);
}

TEST_CASE("equality constraints") {
    Problem p;
    p.num_vars = 2;
    p.objective = {Rat(1), Rat(0)};
    p.constraints = {row({Rat(1), Rat(1)}, Sense::Eq, Rat(2))};
    auto s = lp::solve(p);
    REQUIRE(s.status == Status::Optimal);
    CHECK(s.objective == Rat(0));
    CHECK(s.primal == std::vector<Rat>{Rat(0), Rat(2)});
}

TEST_CASE("infeasibility comes with a Farkas certificate") {
    Problem p;
    p.num_vars = 1;
    p.objective = {Rat(1)};
    p.constraints = {row({Rat(1)}, Sense::Ge, Rat(1)), row({Rat(1)}, Sense::Le, Rat(0))};
    auto s = lp::solve(p);
    REQUIRE(s.status == Status::Infeasible);
    REQUIRE(s.farkas.size() == 2);
    // y_0 >= 0 (Ge), y_1 <= 0 (Le), y_0 + y_1 <= 0 on the lone column,
    // and y.b = y_0 > 0: no x >= 0 can satisfy both rows.
    CHECK(s.farkas[0] >= 0);
    CHECK(s.farkas[1] <= 0);
    CHECK(s.farkas[0] + s.farkas[1] <= 0);
    CHECK(s.farkas[0] * Rat(1) + s.farkas[1] * Rat(0) > 0);
}

TEST_CASE("unbounded problems come with an improving ray") {
    Problem p;
    p.num_vars = 1;
    p.maximize = true;
    p.objective = {Rat(1)};
    p.constraints = {row({Rat(1)}, Sense::Ge, Rat(1))};
    auto s = lp::solve(p);
    REQUIRE(s.status == Status::Unbounded);
    REQUIRE(s.ray.size() == 1);
    REQUIRE(s.ray_base.size() == 1);
    CHECK(point_feasible(p, s.ray_base));
    CHECK(s.ray[0] > 0);  // improving for maximize c = (1)
    // Walking along the ray stays feasible.
    std::vector<Rat> far = {s.ray_base[0] + Rat(10) * s.ray[0]};
    CHECK(point_feasible(p, far));
}

TEST_CASE("degenerate and redundant rows do not confuse the solver") {
    Problem p;
    p.num_vars = 2;
    p.objective = {Rat(-1), Rat(-1)};
    p.maximize = false;  // minimize -x-y == maximize x+y
    p.constraints = {row({Rat(1), Rat(1)}, Sense::Le, Rat(1)),
                     row({Rat(1), Rat(1)}, Sense::Le, Rat(1)),
                     row({Rat(2), Rat(2)}, Sense::Le, Rat(2)),
                     row({Rat(1), Rat(0)}, Sense::Ge, Rat(0))};
    auto s = lp::solve(p);
    REQUIRE(s.status == Status::Optimal);
    CHECK(s.objective == Rat(-1));
}

TEST_CASE("zero-rhs equality pins a variable") {
    Problem p;
    p.num_vars = 2;
    p.objective = {Rat(0), Rat(1)};
    p.constraints = {row({Rat(1), Rat(0)}, Sense::Eq, Rat(0)),
                     row({Rat(1), Rat(1)}, Sense::Ge, Rat(1))};
    auto s = lp::solve(p);
    REQUIRE(s.status == Status::Optimal);
    CHECK(s.primal[0] == Rat(0));
    CHECK(s.objective == Rat(1));
}

TEST_CASE("input validation") {
    Problem p;
    p.num_vars = 0;
    CHECK_THROWS_AS(lp::solve(p), InvalidInput);
    p.num_vars = 2;
    p.objective = {Rat(1)};  // wrong size
    CHECK_THROWS_AS(lp::solve(p), InvalidInput);
    p.objective = {Rat(1), Rat(1)};
    p.constraints = {row({Rat(1)}, Sense::Le, Rat(1))};  // short row
    CHECK_THROWS_AS(lp::solve(p), InvalidInput);
}

TEST_CASE("random problems agree with the vertex-scan oracle") {
    Rng rng(31337);
    int optimal_seen = 0, infeasible_seen = 0, unbounded_seen = 0;
    for (int it = 0; it < 120; ++it) {
        Problem p;
        p.num_vars = 1 + rng.below(3);
        p.maximize = rng.below(2) == 1;
        for (std::size_t j = 0; j < p.num_vars; ++j)
            p.objective.push_back(Rat(static_cast<long>(rng.below(9)) - 4, 2));
        std::size_t m = 1 + rng.below(3);
        for (std::size_t i = 0; i < m; ++i) {
            Constraint c;
            for (std::size_t j = 0; j < p.num_vars; ++j)
                c.coeffs.push_back(Rat(static_cast<long>(rng.below(9)) - 4, 2));
            c.rhs = Rat(static_cast<long>(rng.below(9)) - 4, 2);
            std::size_t pick = rng.below(3);
            c.sense = pick == 0 ? Sense::Le : (pick == 1 ? Sense::Ge : Sense::Eq);
            p.constraints.push_back(c);
        }
        auto s = lp::solve(p);
        auto scan = oracle::lp_vertex_scan(p);
        switch (s.status) {
            case Status::Optimal:
                ++optimal_seen;
                REQUIRE(scan.feasible);
                CHECK(s.objective == scan.best);
                CHECK(point_feasible(p, s.primal));
                CHECK(dot(p.objective, s.primal) == s.objective);
                break;
            case Status::Infeasible:
                ++infeasible_seen;
                CHECK(!scan.feasible);
                break;
            case Status::Unbounded: {
                ++unbounded_seen;
                CHECK(scan.feasible);  // pointed + unbounded still has a vertex
                CHECK(point_feasible(p, s.ray_base));
                std::vector<Rat> far = s.ray_base;
                for (std::size_t j = 0; j < p.num_vars; ++j) far[j] += Rat(7) * s.ray[j];
                CHECK(point_feasible(p, far));
                Rat drift = dot(p.objective, s.ray);
                CHECK((p.maximize ? drift > 0 : drift < 0));
                break;
            }
        }
    }
    // The corpus should exercise every status.
    CHECK(optimal_seen > 0);
    CHECK(infeasible_seen > 0);
    CHECK(unbounded_seen > 0);
}

}  // TEST_SUITE
