#include "doctest.h"

#include "dlab/error.hpp"
#include "dlab/generators.hpp"
#include "dlab/independence.hpp"
#include "dlab/order.hpp"
#include "oracles.hpp"

using namespace dlab;

namespace {
const ThresholdPair kUnit{Rat(0), Rat(1)};
}

TEST_SUITE("independence") {

TEST_CASE("linear order shatters only singletons") {
    EvalMatrix m = gen_linear_order(5);
    auto res = independence_rank(m, kUnit, 5);
    CHECK(res.rank == 1);
    CHECK(res.exhausted);
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->rows == std::vector<std::size_t>{0});
    CHECK(res.witness->witness.at(0) == 0);  // high column for row 0: column 0
    CHECK(res.witness->witness.at(1) == 1);  // low column: column 1
    CHECK(check_shatter(m, *res.witness).ok);
}

TEST_CASE("shatter family has full independence rank with the identity witness") {
    EvalMatrix m = gen_shatter(3);
    auto res = independence_rank(m, kUnit, 3);
    CHECK(res.rank == 3);
    CHECK(res.exhausted);
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->rows == std::vector<std::size_t>{0, 1, 2});
    // Column `mask` is low exactly on the rows in `mask`, and it is the only
    // such column, so the witness map is the identity.
    for (std::uint32_t p = 0; p < 8; ++p) CHECK(res.witness->witness.at(p) == p);
    CHECK(check_shatter(m, *res.witness).ok);
}

TEST_CASE("d_max caps the reported rank") {
    EvalMatrix m = gen_shatter(3);
    auto res = independence_rank(m, kUnit, 2);
    CHECK(res.rank == 2);
    CHECK(res.exhausted);
    CHECK_THROWS_AS(independence_rank(m, kUnit, 0), InvalidInput);
}

TEST_CASE("budget trips report a certified lower bound") {
    EvalMatrix m = gen_shatter(3);
    auto res = independence_rank(m, kUnit, 3, SearchBudget{1});
    CHECK(!res.exhausted);
    CHECK(res.rank <= 3);
    if (res.witness) {
        CHECK(res.witness->degree() == res.rank);
        CHECK(check_shatter(m, *res.witness).ok);
    }
}

TEST_CASE("shattering is hereditary") {
    EvalMatrix m = gen_shatter(3);
    // Every nonempty subset of a shattered set is shattered.
    for (std::uint32_t mask = 1; mask < 8; ++mask) {
        std::vector<std::size_t> rows;
        for (std::size_t b = 0; b < 3; ++b)
            if ((mask >> b) & 1u) rows.push_back(b);
        CHECK(oracle::is_shattered(m, kUnit, rows));
    }
}

TEST_CASE("independence rank transports exactly under negation with mirrored thresholds") {
    for (int it = 0; it < 40; ++it) {
        EvalMatrix m = gen_random(1 + it % 5, 1 + (it / 2) % 5, 900 + it, 2);
        EvalMatrix neg = negate(m);
        auto vals = distinct_entry_values(m);
        for (std::size_t a = 0; a + 1 < vals.size(); ++a) {
            ThresholdPair t(vals[a], vals[a + 1]);
            ThresholdPair mirrored(-t.r, -t.s);
            auto r1 = independence_rank(m, t, m.rows());
            auto r2 = independence_rank(neg, mirrored, m.rows());
            REQUIRE(r1.exhausted);
            REQUIRE(r2.exhausted);
            CHECK(r1.rank == r2.rank);
        }
    }
}

TEST_CASE("ip_to_op on the shatter family yields the chain staircase") {
    EvalMatrix m = gen_shatter(3);
    ShatterWitness w = shatter_full_witness(3, kUnit);
    StaircaseWitness s = ip_to_op(m, w);
    CHECK(s.orientation == Orientation::RowDominant);
    CHECK(s.rows == std::vector<std::size_t>{0, 1, 2});
    CHECK(s.cols == std::vector<std::size_t>{0, 1, 3});  // chain patterns {}, {0}, {0,1}
    CHECK(check_staircase(m, s).ok);
}

TEST_CASE("ip_to_op accepts partial witnesses covering the chain") {
    EvalMatrix m = gen_shatter(3);
    ShatterWitness w = shatter_full_witness(3, kUnit);
    w.witness.erase(7);  // not a chain pattern for degree 3
    w.witness.erase(5);
    StaircaseWitness s = ip_to_op(m, w);
    CHECK(s.length() == 3);
}

TEST_CASE("ip_to_op rejects missing or falsified chain patterns") {
    EvalMatrix m = gen_shatter(3);
    ShatterWitness w = shatter_full_witness(3, kUnit);
    w.witness.erase(1);
    CHECK_THROWS_AS(ip_to_op(m, w), InvalidInput);

    ShatterWitness lying = shatter_full_witness(3, kUnit);
    lying.witness[1] = 2;  // column 2 is low on row 1, not row 0
    CHECK_THROWS_AS(ip_to_op(m, lying), InvalidInput);

    ShatterWitness dup = shatter_full_witness(3, kUnit);
    dup.rows = {0, 0, 1};
    CHECK_THROWS_AS(ip_to_op(m, dup), InvalidInput);
}

TEST_CASE("ip_to_op transform length equals independence rank on shatter families") {
    for (std::size_t d = 1; d <= 6; ++d) {
        EvalMatrix m = gen_shatter(d);
        ShatterWitness w = shatter_full_witness(d, kUnit);
        StaircaseWitness s = ip_to_op(m, w);
        CHECK(s.length() == d);
        CHECK(check_staircase(m, s).ok);
    }
}

TEST_CASE("l1 certificate: pinned mixed-sign example") {
    EvalMatrix m = gen_shatter(2);
    ShatterWitness w = shatter_full_witness(2, kUnit);
    CoefVector c;
    c.support = {0, 1};
    c.weights = {Rat(1, 2), Rat(-1, 3)};
    L1Certificate cert = l1_lower_cert(m, w, c);
    CHECK(cert.bound == Rat(5, 12));     // (1/2) * (1/2 + 1/3)
    CHECK(cert.achieved == Rat(5, 12));  // met exactly on both columns
    CHECK(cert.holds);
    CHECK(cert.col_neg == 2);  // low exactly on row 1 (the negative weight)
    CHECK(cert.col_pos == 1);  // complementary pattern: low exactly on row 0
}

TEST_CASE("l1 certificate holds for random coefficients on shatter families") {
    for (std::size_t d = 2; d <= 4; ++d) {
        EvalMatrix m = gen_shatter(d);
        ShatterWitness w = shatter_full_witness(d, kUnit);
        Rng rng(5000 + d);
        for (int it = 0; it < 50; ++it) {
            std::size_t sz = 1 + rng.below(d);
            CoefVector c;
            c.support = rng.distinct(sz, d);
            Rat sum_abs(0);
            for (std::size_t i = 0; i < sz; ++i) {
                Rat wgt(static_cast<long>(rng.below(17)) - 8, 8);
                c.weights.push_back(wgt);
                sum_abs += rat_abs(wgt);
            }
            L1Certificate cert = l1_lower_cert(m, w, c);
            CHECK(cert.bound == Rat(1, 2) * sum_abs);
            CHECK(cert.holds);
        }
    }
}

TEST_CASE("l1 certificate input validation") {
    EvalMatrix m = gen_shatter(2);
    ShatterWitness w = shatter_full_witness(2, kUnit);
    CoefVector c;
    c.support = {0, 5};
    c.weights = {Rat(1), Rat(1)};
    CHECK_THROWS_AS(l1_lower_cert(m, w, c), InvalidInput);  // outside witness rows
    c.support = {0, 0};
    CHECK_THROWS_AS(l1_lower_cert(m, w, c), InvalidInput);  // repeated support
    c.support = {0};
    CHECK_THROWS_AS(l1_lower_cert(m, w, c), InvalidInput);  // size mismatch
    c.support = {};
    c.weights = {};
    CHECK_THROWS_AS(l1_lower_cert(m, w, c), InvalidInput);  // empty
}

TEST_CASE("independence never exceeds order rank on exhausted searches") {
    for (int it = 0; it < 60; ++it) {
        EvalMatrix m = gen_random(1 + it % 5, 1 + (it / 3) % 5, 1100 + it, 4);
        auto vals = distinct_entry_values(m);
        for (std::size_t a = 0; a + 1 < vals.size(); ++a) {
            ThresholdPair t(vals[a], vals[a + 1]);
            auto ord = order_rank(m, t, std::min(m.rows(), m.cols()));
            auto ind = independence_rank(m, t, m.rows());
            REQUIRE(ord.exhausted);
            REQUIRE(ind.exhausted);
            CHECK(ind.rank <= ord.rank);
        }
    }
}

}  // TEST_SUITE
