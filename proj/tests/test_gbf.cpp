#include <doctest.h>

#include <random>
#include <stdexcept>

#include "test_util.hpp"
#include "zcp/gbf.hpp"

using namespace zcp;

namespace {

Gbf example1() {
    return Gbf(3, 2, {Term(1, {{0, false}, {1, false}}), Term(1, {{1, false}, {2, false}})});
}

std::vector<std::uint8_t> bits_of(std::size_t i, int m) {
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) bits[static_cast<std::size_t>(j)] = (i >> j) & 1u;
    return bits;
}

}  // namespace

TEST_SUITE("gbf") {

TEST_CASE("evaluate quadratic at single points") {
    const Gbf f = example1();
    CHECK(f.evaluate(bits_of(3, 3)) == 1);  // bits (1,1,0)
    CHECK(f.evaluate(bits_of(7, 3)) == 0);  // bits (1,1,1)
}

TEST_CASE("evaluate the zero function") {
    const Gbf zero(4, 2, {});
    for (std::size_t i = 0; i < 16; ++i) CHECK(zero.evaluate(bits_of(i, 4)) == 0);
}

TEST_CASE("evaluate rejects wrong assignment width") {
    const Gbf f = example1();
    CHECK_THROWS_AS((void)f.evaluate(bits_of(0, 2)), std::invalid_argument);
}

TEST_CASE("sequence of the m=3 quadratic") {
    CHECK(example1().to_sequence().phases() == std::vector<int>{0, 0, 0, 1, 0, 0, 1, 0});
}

TEST_CASE("sequence of a constant and of a complemented literal") {
    const Gbf one(1, 2, {Term(1, {})});
    CHECK(one.to_sequence().phases() == std::vector<int>{1, 1});
    const Gbf not_x0(1, 2, {Term(1, {{0, true}})});
    CHECK(not_x0.to_sequence().phases() == std::vector<int>{1, 0});
}

TEST_CASE("bit order is LSB-first") {
    // The sequence of f = x_j has phase 1 exactly where bit j of the index is set.
    for (int m = 1; m <= 6; ++m) {
        for (int j = 0; j < m; ++j) {
            const Gbf f(m, 2, {Term(1, {{j, false}})});
            const PhaseSequence s = f.to_sequence();
            for (std::size_t i = 0; i < s.size(); ++i) {
                CHECK(s[i] == static_cast<int>((i >> j) & 1u));
            }
        }
    }
}

TEST_CASE("truncation") {
    const PhaseSequence s = example1().to_sequence();
    CHECK(s.truncated(1).phases() == std::vector<int>{0, 0, 1, 0, 0, 1});
    CHECK(s.truncated(0) == s);
    CHECK_THROWS_AS((void)s.truncated(4), std::invalid_argument);

    std::mt19937 rng(7);
    const PhaseSequence r = testing::random_sequence(rng, 17, 4);
    const PhaseSequence t = r.truncated(5);
    REQUIRE(t.size() == 7);
    for (std::size_t i = 0; i < t.size(); ++i) CHECK(t[i] == r[i + 5]);
}

TEST_CASE("complementing variables") {
    const Gbf f(2, 2, {Term(1, {{0, false}, {1, false}})});
    const Gbf fbar = f.complement_all_vars();
    CHECK(fbar == Gbf(2, 2, {Term(1, {{0, true}, {1, true}})}));
    CHECK(fbar.evaluate(bits_of(0, 2)) == 1);

    const Gbf g(1, 2, {Term(1, {{0, true}})});
    CHECK(g.complement_all_vars() == Gbf(1, 2, {Term(1, {{0, false}})}));
}

TEST_CASE("complement duality and involution") {
    std::mt19937 rng(11);
    for (int iter = 0; iter < 40; ++iter) {
        const int m = 1 + static_cast<int>(rng() % 6);
        const int q = (iter % 2 == 0) ? 2 : 4;
        const Gbf f = testing::random_gbf(rng, m, q);
        const Gbf fbar = f.complement_all_vars();
        CHECK(fbar.complement_all_vars() == f);
        const std::size_t points = std::size_t{1} << m;
        for (std::size_t i = 0; i < points; ++i) {
            const std::size_t flipped = ~i & (points - 1);
            CHECK(fbar.evaluate(bits_of(i, m)) == f.evaluate(bits_of(flipped, m)));
        }
    }
}

TEST_CASE("sequence length and phase range") {
    std::mt19937 rng(13);
    for (int m = 1; m <= 10; ++m) {
        const Gbf f = testing::random_gbf(rng, m, 4);
        const PhaseSequence s = f.to_sequence();
        REQUIRE(s.size() == (std::size_t{1} << m));
        for (std::size_t i = 0; i < s.size(); ++i) {
            CHECK(s[i] >= 0);
            CHECK(s[i] < 4);
        }
    }
}

TEST_CASE("canonical form merges duplicate terms") {
    const Term t(1, {{0, false}, {1, false}});
    const Gbf f(2, 2, {t, t});
    CHECK(f.terms().empty());  // 1 + 1 = 0 mod 2

    const Gbf g(2, 4, {t, t, Term(3, {})});
    CHECK(g == Gbf(2, 4, {Term(2, {{0, false}, {1, false}}), Term(3, {})}));
}

TEST_CASE("construction rejects invalid input") {
    CHECK_THROWS_AS(Term(1, {{0, false}, {0, true}}), std::invalid_argument);
    CHECK_THROWS_AS(Term(1, {{2, false}, {2, false}}), std::invalid_argument);
    CHECK_THROWS_AS(Gbf(2, 3, {}), std::invalid_argument);  // odd q
    CHECK_THROWS_AS(Gbf(2, 2, {Term(1, {{5, false}})}), std::invalid_argument);
    CHECK_THROWS_AS(Gbf(0, 2, {}), std::invalid_argument);
}

TEST_CASE("negative coefficients reduce mod q") {
    const Gbf f(1, 4, {Term(-1, {{0, false}})});
    CHECK(f == Gbf(1, 4, {Term(3, {{0, false}})}));
}

}  // TEST_SUITE
