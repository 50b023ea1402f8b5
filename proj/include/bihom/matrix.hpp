#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "bihom/rational.hpp"

namespace bihom {

/// Dense row-major matrix of exact rationals. A linear map on a space with
/// basis e_0..e_{n-1} is stored column-wise: column b holds the image of e_b.
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(std::size_t n);
    static Matrix diagonal(const Vector& d);
    /// Matrix whose columns are the given vectors (all of length `rows`).
    static Matrix from_columns(std::size_t rows, const std::vector<Vector>& columns);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::span<const Rational> entries() const noexcept { return entries_; }

    Vector column(std::size_t c) const;
    Vector row(std::size_t r) const;

    bool is_zero() const;
    bool is_identity() const;

    Matrix transpose() const;

    /// Matrix-vector product; throws DimensionError on size mismatch.
    Vector apply(const Vector& x) const;

    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    Matrix& operator*=(const Rational& c);

    friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
    friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
    friend Matrix operator*(Matrix lhs, const Rational& c) { return lhs *= c; }
    friend Matrix operator*(const Rational& c, Matrix rhs) { return rhs *= c; }
    friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
    friend bool operator==(const Matrix& lhs, const Matrix& rhs);

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

/// Reduced row echelon form with pivots chosen as the first nonzero entry
/// scanning columns left to right, rows top to bottom.
struct RowEchelon {
    Matrix reduced;
    std::vector<std::size_t> pivot_columns;
};

RowEchelon row_reduce(Matrix m);

std::size_t rank(const Matrix& m);

/// Basis of the right null space, one vector per non-pivot column in
/// increasing column order. A 0 x n matrix yields the standard basis.
std::vector<Vector> kernel_basis(const Matrix& m);

/// One exact solution of m x = b, or nullopt when the system is inconsistent.
/// Free variables are set to zero.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Throws SingularMatrixError for singular input, DimensionError for non-square.
Matrix invert(const Matrix& m);

bool is_invertible(const Matrix& m);

/// m^k for any integer k; negative powers go through invert().
Matrix power(const Matrix& m, int k);

/// Rank of the column span of the given vectors.
std::size_t span_rank(const std::vector<Vector>& vectors, std::size_t length);

/// True when every vector of `inner` lies in the span of `outer`.
bool span_contains(const std::vector<Vector>& outer, const std::vector<Vector>& inner, std::size_t length);

}  // namespace bihom
