#include <doctest.h>

#include <random>

#include "bihom/errors.hpp"
#include "bihom/matrix.hpp"
#include "helpers.hpp"

using namespace bihom;

TEST_CASE("rational parsing canonicalizes") {
    CHECK(parse_rational("4/6") == Rational(2, 3));
    CHECK(parse_rational("-3") == Rational(-3));
    CHECK(parse_rational("+7/14") == Rational(1, 2));
    CHECK_THROWS_AS(parse_rational("7/-14"), std::invalid_argument);
    CHECK(to_string(parse_rational("10/5")) == "2");
    CHECK(to_string(Rational(-1, 3)) == "-1/3");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("vector helpers") {
    Vector y = {1, 2};
    axpy(y, Rational(1, 2), Vector{2, -4});
    CHECK(y == Vector{2, 0});
    CHECK(is_zero(zero_vector(3)));
    CHECK(unit_vector(3, 1) == Vector{0, 1, 0});
    CHECK(scaled(Vector{1, 3}, 2) == Vector{2, 6});
}

TEST_CASE("matrix arithmetic and shapes") {
    const Matrix a{{1, 2}, {3, 4}};
    const Matrix b{{0, 1}, {1, 0}};
    CHECK(a * b == Matrix{{2, 1}, {4, 3}});
    CHECK(a.transpose() == Matrix{{1, 3}, {2, 4}});
    CHECK(a.apply({1, 1}) == Vector{3, 7});
    CHECK(a.column(1) == Vector{2, 4});
    CHECK_THROWS_AS(a.apply({1, 2, 3}), DimensionError);
    CHECK_THROWS_AS(Matrix(2, 3) * Matrix(2, 3), DimensionError);
    CHECK(Matrix::identity(3).is_identity());
    CHECK(Matrix::from_columns(2, {{1, 2}, {3, 4}}) == Matrix{{1, 3}, {2, 4}});
}

TEST_CASE("rank, kernel, solve and inverse on a fixed example") {
    const Matrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
    CHECK(rank(m) == 2);
    const auto k = kernel_basis(m);
    REQUIRE(k.size() == 1);
    CHECK(is_zero(m.apply(k[0])));
    CHECK_FALSE(solve(m, {1, 0, 0}).has_value());
    auto x = solve(m, {6, 12, 2});
    REQUIRE(x);
    CHECK(m.apply(*x) == Vector{6, 12, 2});
    CHECK_THROWS_AS(invert(m), SingularMatrixError);
    const Matrix inv = invert(Matrix{{2, 1}, {1, 1}});
    CHECK(inv == Matrix{{1, -1}, {-1, 2}});
    CHECK(power(Matrix{{2, 0}, {0, 3}}, -2) == Matrix{{Rational(1, 4), 0}, {0, Rational(1, 9)}});
    CHECK(kernel_basis(Matrix(0, 2)).size() == 2);
}

TEST_CASE("random matrices: rank-nullity, kernel and inverse identities") {
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
        const Matrix m = testing::random_matrix(rng, rows, cols);
        const auto k = kernel_basis(m);
        CHECK(rank(m) + k.size() == cols);
        for (const auto& v : k) CHECK(is_zero(m.apply(v)));
        CHECK(span_rank(k, cols) == k.size());
        CHECK(rank(m) == rank(m.transpose()));
        const Vector x = m.apply(testing::random_matrix(rng, cols, 1).column(0));
        auto s = solve(m, x);
        REQUIRE(s);
        CHECK(m.apply(*s) == x);
        if (rows == cols && is_invertible(m)) {
            CHECK((invert(m) * m).is_identity());
            CHECK((m * invert(m)).is_identity());
        }
    }
}

TEST_CASE("span containment") {
    const std::vector<Vector> outer = {{1, 0, 1}, {0, 1, 1}};
    CHECK(span_contains(outer, {{1, 1, 2}}, 3));
    CHECK_FALSE(span_contains(outer, {{0, 0, 1}}, 3));
    CHECK(span_rank({{1, 2}, {2, 4}}, 2) == 1);
}
