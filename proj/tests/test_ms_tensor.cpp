#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sv/ms_tensor.hpp"

using namespace sv;

TEST_CASE("dim_sym matches binomials") {
    CHECK(dim_sym(1, 2) == 3);
    CHECK(dim_sym(2, 2) == 6);
    CHECK(dim_sym(5, 1) == 6);
    CHECK(dim_sym(0, 7) == 1);
    CHECK(dim_sym(3, 0) == 1);
}

TEST_CASE("dim_sym symmetry") {
    for (i64 n = 0; n <= 30; ++n) {
        for (i64 d = 0; d <= 30; ++d) {
            CHECK(dim_sym(n, d) == binomial(n + d, n));
        }
    }
}

TEST_CASE("dim_space products") {
    CHECK(dim_space(Shape({1, 1, 2}, {1, 1, 2})) == 24);
    CHECK(dim_space(Shape({1, 1, 3, 1}, {1, 1, 1, 2})) == 48);
    CHECK(dim_space(Shape({7}, {1})) == 8);
}

TEST_CASE("dim_space handles zero degrees in raw form") {
    CHECK(dim_space({1, 1, 2}, {1, 0, 1}) == 6);
    CHECK(dim_space({1, 1, 2}, {0, 1, 1}) == 6);
}

TEST_CASE("dim_sum") {
    CHECK(dim_sum(Shape({1, 1, 2}, {1, 1, 2})) == 4);
    CHECK(dim_sum(Shape({1, 1, 3, 1}, {1, 1, 1, 2})) == 6);
    CHECK(dim_sum(Shape({7}, {2})) == 7);
}

TEST_CASE("shape validation") {
    CHECK_THROWS_AS(Shape({}, {}), std::invalid_argument);
    CHECK_THROWS_AS(Shape({1, 1}, {1}), std::invalid_argument);
    CHECK_THROWS_AS(Shape({0, 1}, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Shape({1, 1}, {1, 0}), std::invalid_argument);
}

TEST_CASE("multinomial") {
    CHECK(multinomial(2, {1, 1}) == 2);
    CHECK(multinomial(3, {3, 0}) == 1);
    CHECK(multinomial(4, {2, 2}) == 6);
    CHECK(multinomial(0, {0, 0, 0}) == 1);
    CHECK_THROWS_AS(multinomial(3, {1, 1}), std::invalid_argument);
}

TEST_CASE("multinomials over one factor sum to the point count") {
    for (i64 n = 0; n <= 6; ++n) {
        for (i64 d = 0; d <= 6; ++d) {
            Int total = 0;
            for (const auto& alpha : factor_monomials(n, d)) total += multinomial(d, alpha);
            Int expected = 1;
            for (i64 t = 0; t < d; ++t) expected *= n + 1;
            CHECK(total == expected);
        }
    }
}

TEST_CASE("basis order for one binary factor of degree two") {
    const auto b = basis(Shape({1}, {2}));
    REQUIRE(b.size() == 3);
    CHECK(b[0].exponents[0] == std::vector<i64>{2, 0}); // x^2
    CHECK(b[1].exponents[0] == std::vector<i64>{1, 1}); // xy
    CHECK(b[2].exponents[0] == std::vector<i64>{0, 2}); // y^2
}

TEST_CASE("basis sizes") {
    CHECK(basis(Shape({1, 1}, {1, 1})).size() == 4);
    CHECK(basis(Shape({2}, {1})).size() == 3);
}

TEST_CASE("basis capacity error") {
    CHECK_THROWS_AS(basis(Shape({9, 9, 9}, {3, 3, 3}), 1000), CapacityError);
}

TEST_CASE("exponent-to-index bijection") {
    for (const Shape& shape : {Shape({1}, {2}), Shape({1, 1}, {1, 1}), Shape({2, 1}, {1, 3}),
                               Shape({1, 1, 2}, {1, 1, 2}), Shape({2, 2}, {2, 2})}) {
        const auto b = basis(shape);
        CHECK(Int(static_cast<i64>(b.size())) == dim_space(shape));
        for (std::size_t j = 0; j < b.size(); ++j) {
            CHECK(monomial_index(shape, b[j]) == static_cast<i64>(j));
        }
    }
}

TEST_CASE("monomial_index rejects malformed monomials") {
    const Shape shape({1, 1}, {1, 1});
    CHECK_THROWS_AS(monomial_index(shape, Monomial{{{1, 0}}}), std::invalid_argument);
    CHECK_THROWS_AS(monomial_index(shape, Monomial{{{1, 0}, {2, 0}}}), std::invalid_argument);
    CHECK_THROWS_AS(monomial_index(shape, Monomial{{{1, 0}, {1, -1}}}), std::invalid_argument);
}

TEST_CASE("binomial edge cases") {
    CHECK(binomial(10, 0) == 1);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(4, 7) == 0);
    CHECK(binomial(64, 32) == Int("1832624140942590534"));
    // overflows 64 bits; exact value has 18 digits times ~60
    CHECK(binomial(100, 50) == Int("100891344545564193334812497256"));
}
