#include "doctest.h"

#include "dlab/error.hpp"
#include "dlab/generators.hpp"
#include "dlab/ramsey.hpp"
#include "oracles.hpp"

using namespace dlab;

TEST_SUITE("ramsey") {

TEST_CASE("pair coloring stores symmetric colors") {
    PairColoring c(4, 0);
    c.set_color(1, 3, 1);
    CHECK(c.color(1, 3) == 1);
    CHECK(c.color(3, 1) == 1);
    CHECK(c.color(1, 2) == 0);
    CHECK(c.size() == 4);
    CHECK_THROWS_AS(c.set_color(0, 1, 0), InvalidInput);  // vertices are 1-based
    CHECK_THROWS_AS(c.set_color(1, 1, 0), InvalidInput);
    CHECK_THROWS_AS(c.set_color(1, 5, 0), InvalidInput);
    CHECK_THROWS_AS(c.set_color(1, 2, 2), InvalidInput);
    CHECK_THROWS_AS(PairColoring(0), InvalidInput);
}

TEST_CASE("constant coloring yields the least homogeneous subset") {
    PairColoring c(6, 0);
    RamseyResult r = ramsey_pairs(c, 3);
    CHECK(r.success);
    CHECK(r.color == 0);
    CHECK(r.subset == std::vector<std::size_t>{1, 2, 3});
    int color = -1;
    CHECK(oracle::is_homogeneous(c, r.subset, &color));
    CHECK(color == 0);
}

TEST_CASE("pentagon has no monochromatic triple") {
    // C_5 edges colored 1, diagonals colored 0: both graphs are pentagons,
    // which are triangle-free.
    PairColoring c(5, 0);
    c.set_color(1, 2, 1);
    c.set_color(2, 3, 1);
    c.set_color(3, 4, 1);
    c.set_color(4, 5, 1);
    c.set_color(1, 5, 1);
    CHECK(!oracle::homogeneous_subset_exists(c, 3));
    RamseyResult r = ramsey_pairs(c, 3);
    CHECK(!r.success);
    CHECK(r.subset.size() == 2);
    CHECK(oracle::is_homogeneous(c, r.subset, nullptr));
}

TEST_CASE("every 2-coloring of K6 has a monochromatic triple (spot checks)") {
    // The full 2^15 sweep lives in the acceptance gate; spot-check a few
    // structured colorings here, including both parities.
    for (std::uint32_t mask : {0u, 32767u, 21845u, 10922u, 18350u, 4681u}) {
        PairColoring c(6, 0);
        std::size_t bit = 0;
        for (std::size_t i = 1; i <= 6; ++i)
            for (std::size_t j = i + 1; j <= 6; ++j, ++bit)
                c.set_color(i, j, (mask >> bit) & 1u ? 1 : 0);
        RamseyResult r = ramsey_pairs(c, 3);
        CHECK(r.success);
        REQUIRE(r.subset.size() == 3);
        int color = -1;
        CHECK(oracle::is_homogeneous(c, r.subset, &color));
        CHECK(color == r.color);
        CHECK(oracle::homogeneous_subset_exists(c, 3));
    }
}

TEST_CASE("greedy path handles large constant instances") {
    PairColoring c(16, 1);
    RamseyResult r = ramsey_pairs(c, 4);
    CHECK(r.success);
    CHECK(r.subset.size() == 4);
    CHECK(oracle::is_homogeneous(c, r.subset, nullptr));
    CHECK(r.color == 1);
}

TEST_CASE("ramsey_pairs validates m and allows the trivial goal") {
    PairColoring c(4, 0);
    CHECK_THROWS_AS(ramsey_pairs(c, 0), InvalidInput);
    RamseyResult r = ramsey_pairs(c, 1);
    CHECK(r.success);
    CHECK(r.subset == std::vector<std::size_t>{1});
}

TEST_CASE("cauchy subsequence on a constant matrix keeps every row") {
    EvalMatrix m = validate_matrix({"a", "b", "c"}, {"x", "y"},
                                   {{Rat(1, 2), Rat(1, 2)},
                                    {Rat(1, 2), Rat(1, 2)},
                                    {Rat(1, 2), Rat(1, 2)}},
                                   Rat(1));
    CauchyResult res = cauchy_subsequence(m, Rat(1, 4));
    CHECK(res.rows == std::vector<std::size_t>{0, 1, 2});
    CHECK(res.epsilon == Rat(1, 4));
}

TEST_CASE("cauchy top-endpoint values share the last cell") {
    // Bound 1, eps 1/4: 8 cells over [-1, 1]; the closed endpoint +1 is
    // clamped into the final cell together with 15/16.
    EvalMatrix m = validate_matrix({"a", "b"}, {"x"},
                                   {{Rat(1)}, {Rat(15, 16)}}, Rat(1));
    CauchyResult res = cauchy_subsequence(m, Rat(1, 4));
    CHECK(res.rows == std::vector<std::size_t>{0, 1});
}

TEST_CASE("cauchy rows are pairwise within epsilon and the count meets the pigeonhole bound") {
    for (int it = 0; it < 30; ++it) {
        EvalMatrix m = gen_random(1 + it % 12, 1 + it % 3, 8800 + it, 8);
        Rat eps = it % 2 == 0 ? Rat(1, 2) : Rat(2, 3);
        CauchyResult res = cauchy_subsequence(m, eps);
        REQUIRE(!res.rows.empty());
        for (std::size_t a = 0; a < res.rows.size(); ++a)
            for (std::size_t b = a + 1; b < res.rows.size(); ++b)
                for (std::size_t j = 0; j < m.cols(); ++j)
                    CHECK(rat_abs(m.at(res.rows[a], j) - m.at(res.rows[b], j)) <= eps);
        // cells^cols bins must cover all rows.
        Rat ratio = Rat(2) * m.bound / eps;
        Int cells = rat_ceil(ratio);
        if (cells < 1) cells = 1;
        Int bins = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) bins *= cells;
        CHECK(Int(res.rows.size()) * bins >= Int(m.rows()));
    }
}

TEST_CASE("cauchy epsilon must be positive") {
    EvalMatrix m = gen_random(2, 2, 1, 4);
    CHECK_THROWS_AS(cauchy_subsequence(m, Rat(0)), InvalidInput);
    CHECK_THROWS_AS(cauchy_subsequence(m, Rat(-1)), InvalidInput);
}

TEST_CASE("dichotomy: constant matrix takes the Cauchy branch") {
    EvalMatrix m = validate_matrix({"a", "b", "c"}, {"x"},
                                   {{Rat(1, 2)}, {Rat(1, 2)}, {Rat(1, 2)}}, Rat(1));
    auto out = rosenthal_dichotomy(m, ThresholdPair(Rat(0), Rat(1)), Rat(1, 4), 3, 2);
    auto* branch = std::get_if<CauchyBranch>(&out);
    REQUIRE(branch != nullptr);
    CHECK(branch->rows.size() == 3);
}

TEST_CASE("dichotomy: shatter family takes the independent branch") {
    EvalMatrix m = gen_shatter(3);
    // At eps = 1/4 the 0/1 rows of the shatter family land in distinct cells,
    // so no 2-row Cauchy subsequence exists and the shatter search wins.
    auto out = rosenthal_dichotomy(m, ThresholdPair(Rat(0), Rat(1)), Rat(1, 4), 2, 3);
    auto* branch = std::get_if<IndependentBranch>(&out);
    REQUIRE(branch != nullptr);
    CHECK(branch->witness.degree() == 3);
    CHECK(check_shatter(m, branch->witness).ok);
}

TEST_CASE("dichotomy: linear order at scale is inconclusive") {
    EvalMatrix m = gen_linear_order(8);
    auto out = rosenthal_dichotomy(m, ThresholdPair(Rat(0), Rat(1)), Rat(1, 2), 8, 2);
    auto* inc = std::get_if<DichotomyInconclusive>(&out);
    REQUIRE(inc != nullptr);
    CHECK(inc->cauchy_len == 1);
    CHECK(inc->indep_rank == 1);
    CHECK(inc->indep_exhausted);
}

TEST_CASE("dichotomy validates its goals") {
    EvalMatrix m = gen_linear_order(3);
    ThresholdPair t(Rat(0), Rat(1));
    CHECK_THROWS_AS(rosenthal_dichotomy(m, t, Rat(0), 2, 2), InvalidInput);
    CHECK_THROWS_AS(rosenthal_dichotomy(m, t, Rat(1, 2), 0, 2), InvalidInput);
    CHECK_THROWS_AS(rosenthal_dichotomy(m, t, Rat(1, 2), 2, 0), InvalidInput);
}

}  // TEST_SUITE
