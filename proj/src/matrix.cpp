#include "bihom/matrix.hpp"

#include <string>

#include "bihom/errors.hpp"

namespace bihom {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionError("ragged matrix literal");
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::diagonal(const Vector& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& columns) {
    Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) throw DimensionError("from_columns: column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

Vector Matrix::column(std::size_t c) const {
    if (c >= cols_) throw DimensionError("column index out of range");
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

Vector Matrix::row(std::size_t r) const {
    if (r >= rows_) throw DimensionError("row index out of range");
    return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

bool Matrix::is_zero() const {
    for (const auto& x : entries_)
        if (sgn(x) != 0) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (!is_square()) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Vector Matrix::apply(const Vector& x) const {
    if (x.size() != cols_)
        throw DimensionError("apply: matrix has " + std::to_string(cols_) + " columns, vector has " +
                             std::to_string(x.size()) + " entries");
    Vector y(rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (sgn(x[c]) == 0) continue;
        for (std::size_t r = 0; r < rows_; ++r) {
            const Rational& a = (*this)(r, c);
            if (sgn(a) != 0) y[r] += a * x[c];
        }
    }
    return y;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("matrix sum: shape mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("matrix difference: shape mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
    return *this;
}

Matrix& Matrix::operator*=(const Rational& c) {
    for (auto& x : entries_) x *= c;
    return *this;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
    if (lhs.cols_ != rhs.rows_)
        throw DimensionError("matrix product: " + std::to_string(lhs.rows_) + "x" + std::to_string(lhs.cols_) +
                             " times " + std::to_string(rhs.rows_) + "x" + std::to_string(rhs.cols_));
    Matrix out(lhs.rows_, rhs.cols_);
    for (std::size_t i = 0; i < lhs.rows_; ++i)
        for (std::size_t k = 0; k < lhs.cols_; ++k) {
            const Rational& a = lhs(i, k);
            if (sgn(a) == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const Rational& b = rhs(k, j);
                if (sgn(b) != 0) out(i, j) += a * b;
            }
        }
    return out;
}

bool operator==(const Matrix& lhs, const Matrix& rhs) {
    return lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ && lhs.entries_ == rhs.entries_;
}

RowEchelon row_reduce(Matrix m) {
    RowEchelon out;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
        std::size_t p = lead;
        while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != lead)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(lead, j));
        Rational inv = 1 / m(lead, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(lead, j) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead || sgn(m(r, c)) == 0) continue;
            Rational f = m(r, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (sgn(m(lead, j)) != 0) m(r, j) -= f * m(lead, j);
        }
        out.pivot_columns.push_back(c);
        ++lead;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivot_columns.size(); }

std::vector<Vector> kernel_basis(const Matrix& m) {
    RowEchelon e = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivot_columns) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v(m.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < e.pivot_columns.size(); ++i) v[e.pivot_columns[i]] = -e.reduced(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
    if (b.size() != m.rows()) throw DimensionError("solve: right-hand side length mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    RowEchelon e = row_reduce(std::move(aug));
    if (!e.pivot_columns.empty() && e.pivot_columns.back() == m.cols()) return std::nullopt;
    Vector x(m.cols());
    for (std::size_t i = 0; i < e.pivot_columns.size(); ++i) x[e.pivot_columns[i]] = e.reduced(i, m.cols());
    return x;
}

Matrix invert(const Matrix& m) {
    if (!m.is_square()) throw DimensionError("invert: matrix is not square");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    RowEchelon e = row_reduce(std::move(aug));
    if (e.pivot_columns.size() < n || (n > 0 && e.pivot_columns[n - 1] != n - 1))
        throw SingularMatrixError("invert: matrix is singular");
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
    return inv;
}

bool is_invertible(const Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

Matrix power(const Matrix& m, int k) {
    if (!m.is_square()) throw DimensionError("power: matrix is not square");
    Matrix base = k < 0 ? invert(m) : m;
    unsigned e = k < 0 ? static_cast<unsigned>(-static_cast<long>(k)) : static_cast<unsigned>(k);
    Matrix out = Matrix::identity(m.rows());
    while (e > 0) {
        if (e & 1u) out = out * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return out;
}

std::size_t span_rank(const std::vector<Vector>& vectors, std::size_t length) {
    return rank(Matrix::from_columns(length, vectors));
}

bool span_contains(const std::vector<Vector>& outer, const std::vector<Vector>& inner, std::size_t length) {
    std::size_t base = span_rank(outer, length);
    std::vector<Vector> all = outer;
    all.insert(all.end(), inner.begin(), inner.end());
    return span_rank(all, length) == base;
}

}  // namespace bihom
