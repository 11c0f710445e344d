#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "dlab/error.hpp"
#include "dlab/generators.hpp"
#include "dlab/order.hpp"
#include "oracles.hpp"

using namespace dlab;

namespace {

const ThresholdPair kUnit{Rat(0), Rat(1)};

EvalMatrix constant_matrix(std::size_t n, const Rat& v) {
    std::vector<std::string> rl, cl;
    std::vector<std::vector<Rat>> e(n, std::vector<Rat>(n, v));
    for (std::size_t i = 0; i < n; ++i) {
        rl.push_back("f" + std::to_string(i));
        cl.push_back("x" + std::to_string(i));
    }
    return validate_matrix(rl, cl, e, Rat(1));
}

}  // namespace

TEST_SUITE("order") {

TEST_CASE("linear order has full rank with the canonical witness") {
    EvalMatrix m = gen_linear_order(5);
    auto res = order_rank(m, kUnit, 5);
    CHECK(res.rank == 5);
    CHECK(res.exhausted);
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->orientation == Orientation::RowDominant);
    CHECK(res.witness->rows == std::vector<std::size_t>{0, 1, 2, 3, 4});
    CHECK(res.witness->cols == std::vector<std::size_t>{0, 1, 2, 3, 4});
    CHECK(check_staircase(m, *res.witness).ok);
}

TEST_CASE("constant matrix has rank zero") {
    EvalMatrix m = constant_matrix(3, Rat(1, 2));
    auto res = order_rank(m, kUnit, 3);
    CHECK(res.rank == 0);
    CHECK(!res.witness.has_value());
    CHECK(res.exhausted);
}

TEST_CASE("k_max caps the search and must be positive") {
    EvalMatrix m = gen_linear_order(5);
    auto res = order_rank(m, kUnit, 3);
    CHECK(res.rank == 3);
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->length() == 3);
    CHECK(check_staircase(m, *res.witness).ok);
    CHECK_THROWS_AS(order_rank(m, kUnit, 0), InvalidInput);
}

TEST_CASE("row order within a staircase matters and the search finds it") {
    // Rows must be taken in the order (1, 0): entry(1,0)=1 >= 1, entry(1,1)=0 <= 0,
    // entry(0,0)=1, entry(0,1)=1. The ascending order (0, 1) fails.
    EvalMatrix m = validate_matrix({"a", "b"}, {"x", "y"},
                                   {{Rat(1), Rat(1)}, {Rat(1), Rat(0)}}, Rat(1));
    auto res = order_rank(m, kUnit, 2);
    CHECK(res.rank == 2);
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->rows == std::vector<std::size_t>{1, 0});
    CHECK(check_staircase(m, *res.witness).ok);
    CHECK(oracle::order_rank(m, kUnit, 2) == 2);
}

TEST_CASE("budget trips report a certified lower bound") {
    EvalMatrix m = gen_linear_order(8);
    auto res = order_rank(m, kUnit, 8, SearchBudget{2});
    CHECK(!res.exhausted);
    CHECK(res.rank <= 8);
    if (res.witness) {
        CHECK(res.witness->length() == res.rank);
        CHECK(check_staircase(m, *res.witness).ok);
    }
}

TEST_CASE("both orientations reach the same maximum") {
    // Reversing the row and column tuples maps a row-dominant staircase onto a
    // col-dominant one of the same length, so the two maxima always agree.
    std::mt19937_64 rng(20260816);
    for (int it = 0; it < 40; ++it) {
        std::size_t n = 1 + rng() % 4, c = 1 + rng() % 4;
        EvalMatrix m = gen_random(n, c, 100 + it, 2);
        auto vals = distinct_entry_values(m);
        for (std::size_t a = 0; a + 1 < vals.size(); ++a) {
            ThresholdPair t(vals[a], vals[a + 1]);
            CHECK(oracle::order_rank_oriented(m, t, 4, Orientation::RowDominant) ==
                  oracle::order_rank_oriented(m, t, 4, Orientation::ColDominant));
        }
    }
}

TEST_CASE("transpose preserves order rank exactly") {
    for (int it = 0; it < 30; ++it) {
        EvalMatrix m = gen_random(1 + it % 4, 1 + (it / 2) % 4, 300 + it, 2);
        EvalMatrix mt = transpose(m);
        auto vals = distinct_entry_values(m);
        for (std::size_t a = 0; a + 1 < vals.size(); ++a) {
            ThresholdPair t(vals[a], vals[a + 1]);
            auto r1 = order_rank(m, t, std::min(m.rows(), m.cols()));
            auto r2 = order_rank(mt, t, std::min(m.rows(), m.cols()));
            REQUIRE(r1.exhausted);
            REQUIRE(r2.exhausted);
            CHECK(r1.rank == r2.rank);
        }
    }
}

TEST_CASE("negation with mirrored thresholds moves rank by at most one") {
    for (int it = 0; it < 30; ++it) {
        EvalMatrix m = gen_random(1 + it % 4, 1 + (it / 3) % 4, 400 + it, 2);
        EvalMatrix neg = negate(m);
        auto vals = distinct_entry_values(m);
        for (std::size_t a = 0; a + 1 < vals.size(); ++a) {
            ThresholdPair t(vals[a], vals[a + 1]);
            ThresholdPair mirrored(-t.r, -t.s);
            std::size_t cap = std::min(m.rows(), m.cols());
            auto r1 = order_rank(m, t, cap);
            auto r2 = order_rank(neg, mirrored, cap);
            REQUIRE(r1.exhausted);
            REQUIRE(r2.exhausted);
            CHECK(r1.rank + 1 >= r2.rank);
            CHECK(r2.rank + 1 >= r1.rank);
        }
    }
}

TEST_CASE("the one-sided loss in the negation transport is real") {
    // L_2 at (0,1) has rank 2; its negation at (-1,0) has rank 1: a length-2
    // staircase there would need a +1 entry somewhere in -L_2, which has none.
    EvalMatrix m = gen_linear_order(2);
    auto r1 = order_rank(m, kUnit, 2);
    auto r2 = order_rank(negate(m), ThresholdPair(Rat(-1), Rat(0)), 2);
    CHECK(r1.rank == 2);
    CHECK(r2.rank == 1);
}

TEST_CASE("widening thresholds never increases rank") {
    for (int it = 0; it < 25; ++it) {
        EvalMatrix m = gen_random(3, 3, 500 + it, 4);
        auto vals = distinct_entry_values(m);
        if (vals.size() < 3) continue;
        ThresholdPair narrow(vals[vals.size() / 2 - 1], vals[vals.size() / 2]);
        ThresholdPair wide(vals.front(), vals.back());
        auto rn = order_rank(m, narrow, 3);
        auto rw = order_rank(m, wide, 3);
        REQUIRE(rn.exhausted);
        REQUIRE(rw.exhausted);
        CHECK(rw.rank <= rn.rank);
    }
}

TEST_CASE("rank is invariant under row and column permutations") {
    std::mt19937_64 rng(77);
    for (int it = 0; it < 20; ++it) {
        EvalMatrix m = gen_random(4, 4, 600 + it, 2);
        std::vector<std::size_t> pr(4), pc(4);
        std::iota(pr.begin(), pr.end(), 0);
        std::iota(pc.begin(), pc.end(), 0);
        std::shuffle(pr.begin(), pr.end(), rng);
        std::shuffle(pc.begin(), pc.end(), rng);
        EvalMatrix p = submatrix(m, pr, pc);
        auto vals = distinct_entry_values(m);
        ThresholdPair t(vals.front(), vals.back());
        auto r1 = order_rank(m, t, 4);
        auto r2 = order_rank(p, t, 4);
        REQUIRE(r1.exhausted);
        REQUIRE(r2.exhausted);
        CHECK(r1.rank == r2.rank);
    }
}

TEST_CASE("submatrices never have larger rank") {
    for (int it = 0; it < 20; ++it) {
        EvalMatrix m = gen_random(4, 4, 700 + it, 2);
        EvalMatrix s = submatrix(m, {0, 1, 2}, {0, 1, 2, 3});
        auto vals = distinct_entry_values(m);
        ThresholdPair t(vals.front(), vals.back());
        auto r1 = order_rank(m, t, 4);
        auto r2 = order_rank(s, t, 3);
        REQUIRE(r1.exhausted);
        REQUIRE(r2.exhausted);
        CHECK(r2.rank <= r1.rank);
    }
}

TEST_CASE("defect profile of the linear order") {
    EvalMatrix m = gen_linear_order(5);
    auto prof = defect_profile(m, 8);
    CHECK(prof.exhausted);
    REQUIRE(prof.entries.size() == 5);
    for (std::size_t i = 0; i < prof.entries.size(); ++i) {
        const auto& e = prof.entries[i];
        CHECK(e.k == i + 1);
        CHECK(e.gap == Rat(1));  // only distinct values are 0 and 1
        CHECK(e.witness.length() == e.k);
        CHECK(check_staircase(m, e.witness).ok);
    }
    CHECK_THROWS_AS(defect_profile(m, 0), InvalidInput);
}

TEST_CASE("defect profile gaps are non-increasing and witnesses verify") {
    EvalMatrix m = gen_random(4, 5, 42, 8);
    auto prof = defect_profile(m, 4);
    REQUIRE(prof.exhausted);
    for (std::size_t i = 0; i + 1 < prof.entries.size(); ++i)
        CHECK(prof.entries[i].gap >= prof.entries[i + 1].gap);
    for (const auto& e : prof.entries) {
        CHECK(e.witness.thresholds.gap() == e.gap);
        CHECK(check_staircase(m, e.witness).ok);
    }
}

}  // TEST_SUITE
