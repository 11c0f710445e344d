#include "doctest.h"

#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "dlab/csv.hpp"
#include "dlab/error.hpp"
#include "dlab/generators.hpp"

using namespace dlab;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_SUITE("generators") {

TEST_CASE("linear order, pinned 3x3 instance") {
    EvalMatrix m = gen_linear_order(3);
    CHECK(m.rows() == 3);
    CHECK(m.cols() == 3);
    CHECK(m.bound == Rat(1));
    std::vector<std::vector<Rat>> expect = {{Rat(1), Rat(0), Rat(0)},
                                            {Rat(1), Rat(1), Rat(0)},
                                            {Rat(1), Rat(1), Rat(1)}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(m.at(i, j) == expect[i][j]);
    CHECK(m.row_labels == std::vector<std::string>{"f0", "f1", "f2"});
    CHECK(m.col_labels == std::vector<std::string>{"x0", "x1", "x2"});
    CHECK_THROWS_AS(gen_linear_order(0), InvalidInput);
}

TEST_CASE("shatter family, pinned degree-2 instance") {
    EvalMatrix m = gen_shatter(2);
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 4);
    // Column `mask` is low exactly on the rows named in `mask`:
    // col 0 -> (1,1), col 1 -> (0,1), col 2 -> (1,0), col 3 -> (0,0).
    std::vector<std::vector<Rat>> expect = {{Rat(1), Rat(0), Rat(1), Rat(0)},
                                            {Rat(1), Rat(1), Rat(0), Rat(0)}};
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 4; ++j) CHECK(m.at(i, j) == expect[i][j]);
    CHECK(m.col_labels ==
          std::vector<std::string>{"x0", "x1", "x2", "x3"});
    CHECK_THROWS_AS(gen_shatter(0), InvalidInput);
    CHECK_THROWS_AS(gen_shatter(21), InvalidInput);
}

TEST_CASE("shatter witness bounds its thresholds inside the 0/1 entries") {
    CHECK_THROWS_AS(shatter_full_witness(2, ThresholdPair(Rat(-1), Rat(1, 2))), InvalidInput);
    CHECK_THROWS_AS(shatter_full_witness(2, ThresholdPair(Rat(1, 2), Rat(2))), InvalidInput);
    ShatterWitness w = shatter_full_witness(2, ThresholdPair(Rat(0), Rat(1)));
    CHECK(w.witness.size() == 4);
    for (std::uint32_t p = 0; p < 4; ++p) CHECK(w.witness.at(p) == p);
}

TEST_CASE("random matrices are deterministic in the seed") {
    EvalMatrix a = gen_random(4, 3, 7, 16);
    EvalMatrix b = gen_random(4, 3, 7, 16);
    CHECK(a.entries == b.entries);
    EvalMatrix c = gen_random(4, 3, 8, 16);
    CHECK(a.entries != c.entries);
    CHECK(a.bound == Rat(1));
    for (const Rat& e : a.entries) {
        CHECK(rat_abs(e) <= Rat(1));
        CHECK(denominator(e) <= Int(16));
    }
    CHECK_THROWS_AS(gen_random(0, 3, 1, 16), InvalidInput);
    CHECK_THROWS_AS(gen_random(3, 0, 1, 16), InvalidInput);
    CHECK_THROWS_AS(gen_random(3, 3, 1, 0), InvalidInput);
}

TEST_CASE("random matrix CSV matches the committed golden file") {
    EvalMatrix m = gen_random(4, 3, 7, 16);
    std::string expect = slurp(std::string(DLAB_GOLDEN_DIR) + "/gen_random_4x3_seed7.csv");
    CHECK(write_matrix_csv(m) == expect);
}

TEST_CASE("monotone family rows step up at their jump column") {
    EvalMatrix m = gen_monotone_family(5, 3);
    CHECK(m.rows() == 5);
    CHECK(m.cols() == 3);
    for (std::size_t i = 0; i < 5; ++i) {
        std::size_t jump = i % 3;
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(m.at(i, j) == (j >= jump ? Rat(1) : Rat(0)));
    }
    // Each row is monotone nondecreasing left to right.
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j + 1 < m.cols(); ++j)
            CHECK(m.at(i, j) <= m.at(i, j + 1));
    CHECK_THROWS_AS(gen_monotone_family(0, 3), InvalidInput);
    CHECK_THROWS_AS(gen_monotone_family(3, 0), InvalidInput);
}

TEST_CASE("rng utilities") {
    Rng rng(5);
    // below is bounded and deterministic.
    Rng rng2(5);
    for (int i = 0; i < 50; ++i) {
        std::uint64_t v = rng.below(7);
        CHECK(v < 7);
        CHECK(v == rng2.below(7));
    }
    // distinct returns sorted unique indices.
    auto d = rng.distinct(3, 10);
    CHECK(d.size() == 3);
    std::set<std::size_t> s(d.begin(), d.end());
    CHECK(s.size() == 3);
    for (std::size_t i = 0; i + 1 < d.size(); ++i) CHECK(d[i] < d[i + 1]);
    for (std::size_t v : d) CHECK(v < 10);
    CHECK_THROWS_AS(rng.distinct(4, 3), InvalidInput);
    // convex_weights produce a convex combination.
    auto w = rng.convex_weights(4);
    REQUIRE(w.size() == 4);
    Rat sum(0);
    for (const Rat& x : w) {
        CHECK(x > 0);
        sum += x;
    }
    CHECK(sum == Rat(1));
}

}  // TEST_SUITE
