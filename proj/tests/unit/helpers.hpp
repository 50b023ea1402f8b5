#pragma once

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "bihom/algebra.hpp"
#include "bihom/matrix.hpp"

namespace testing {

using bihom::Matrix;
using bihom::Rational;

inline Rational random_rational(std::mt19937& rng, int range = 5) {
    std::uniform_int_distribution<int> num(-range, range);
    std::uniform_int_distribution<int> den(1, 3);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

inline Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, double density = 0.6) {
    std::bernoulli_distribution keep(density);
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (keep(rng)) m(r, c) = random_rational(rng);
    return m;
}

/// 3x3 supermatrix on C^{1|2}: index 0 even, indices 1 and 2 odd.
inline Matrix unit(std::size_t r, std::size_t c) {
    Matrix m(3, 3);
    m(r, c) = 1;
    return m;
}

/// osp(1,2) as supermatrices in the order H, X, Y, F, G.
inline std::vector<Matrix> osp_matrices() {
    const Matrix H = unit(1, 1) - unit(2, 2);
    return {H, unit(1, 2), unit(2, 1), unit(2, 0) + unit(0, 1), unit(1, 0) - unit(0, 2)};
}

/// Super commutator AB - (-1)^{|a||b|} BA.
inline Matrix super_bracket(const Matrix& a, bool odd_a, const Matrix& b, bool odd_b) {
    return a * b - Rational(odd_a && odd_b ? -1 : 1) * (b * a);
}

/// Coordinates of m in the span of the given matrices (must exist).
inline bihom::Vector coordinates(const std::vector<Matrix>& basis, const Matrix& m) {
    std::vector<bihom::Vector> cols;
    for (const auto& b : basis) cols.emplace_back(b.entries().begin(), b.entries().end());
    const Matrix sys = Matrix::from_columns(m.rows() * m.cols(), cols);
    auto x = bihom::solve(sys, bihom::Vector(m.entries().begin(), m.entries().end()));
    if (!x) throw std::runtime_error("matrix outside the span");
    return *x;
}

}  // namespace testing
