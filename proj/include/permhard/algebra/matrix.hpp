#pragma once

// Dense matrices over the library's rings and the small set of generic ring
// hooks (zero_of, one_of, is_zero_value, inverse_of) they rely on.

#include "permhard/algebra/rational.hpp"
#include "permhard/error.hpp"

#include <cmath>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace permhard {

inline double zero_of(double) { return 0.0; }
inline double one_of(double) { return 1.0; }
inline bool is_zero_value(double x) { return x == 0.0; }
inline double inverse_of(double x) { return 1.0 / x; }

inline Integer zero_of(const Integer&) { return 0; }
inline Integer one_of(const Integer&) { return 1; }
inline bool is_zero_value(const Integer& x) { return x == 0; }

inline Rational zero_of(const Rational&) { return 0; }
inline Rational one_of(const Rational&) { return 1; }
inline bool is_zero_value(const Rational& x) { return x == 0; }
inline Rational inverse_of(const Rational& x) { return Rational(1) / x; }

template <class R>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const R& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    /// Identity built from a ring element that fixes the field (e.g. modulus).
    static Matrix identity(std::size_t n, const R& like) {
        Matrix out(n, n, zero_of(like));
        for (std::size_t i = 0; i < n; ++i) out(i, i) = one_of(like);
        return out;
    }

    static Matrix from_rows(const std::vector<std::vector<R>>& rows) {
        if (rows.empty()) return {};
        Matrix out(rows.size(), rows[0].size(), rows[0].empty() ? R{} : rows[0][0]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != out.cols_) throw DomainError("Matrix::from_rows: ragged rows");
            for (std::size_t j = 0; j < out.cols_; ++j) out(i, j) = rows[i][j];
        }
        return out;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    R& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const R& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix transpose() const {
        if (data_.empty()) return *this;
        Matrix out(cols_, rows_, data_[0]);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    /// Product that skips zero entries of the left factor; gadget networks
    /// are sparse, so this matters over exact rings.
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DomainError("Matrix product: dimension mismatch");
        if (a.data_.empty() || b.data_.empty()) return Matrix(a.rows_, b.cols_, R{});
        const R zero = zero_of(a.data_[0]);
        Matrix out(a.rows_, b.cols_, zero);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const R& aik = a(i, k);
                if (is_zero_value(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const R& bkj = b(k, j);
                    if (!is_zero_value(bkj)) out(i, j) += aik * bkj;
                }
            }
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    template <class F>
    auto map(F&& f) const -> Matrix<decltype(f(std::declval<const R&>()))> {
        using S = decltype(f(std::declval<const R&>()));
        Matrix<S> out;
        if (data_.empty()) return out;
        out = Matrix<S>(rows_, cols_, f(data_[0]));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
        return out;
    }

    /// Copies `block` into rows/cols given by `index` (square embedding).
    void embed(const Matrix& block, const std::vector<std::size_t>& index) {
        for (std::size_t i = 0; i < index.size(); ++i)
            for (std::size_t j = 0; j < index.size(); ++j) (*this)(index[i], index[j]) = block(i, j);
    }

    /// Sub-matrix with rows and columns listed (repetition allowed).
    Matrix select(const std::vector<std::size_t>& row_index, const std::vector<std::size_t>& col_index) const {
        if (row_index.empty() || col_index.empty()) return Matrix(row_index.size(), col_index.size(), R{});
        Matrix out(row_index.size(), col_index.size(), (*this)(0, 0));
        for (std::size_t i = 0; i < row_index.size(); ++i)
            for (std::size_t j = 0; j < col_index.size(); ++j) out(i, j) = (*this)(row_index[i], col_index[j]);
        return out;
    }

    const std::vector<R>& data() const noexcept { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<R> data_;
};

template <class R>
bool is_identity(const Matrix<R>& m) {
    if (!m.is_square()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const R& v = m(i, j);
            if (i == j ? !(v == one_of(v)) : !is_zero_value(v)) return false;
        }
    return true;
}

/// M M^T = I exactly.
template <class R>
bool is_orthogonal(const Matrix<R>& m) {
    return m.is_square() && is_identity(m * m.transpose());
}

inline double max_abs_deviation_from_identity(const Matrix<double>& m) {
    double worst = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) worst = std::max(worst, std::abs(m(i, j) - (i == j ? 1.0 : 0.0)));
    return worst;
}

template <class R>
bool is_symmetric(const Matrix<R>& m) {
    return m.is_square() && m == m.transpose();
}

/// Determinant over a field by Gaussian elimination with exact pivots.
template <class R>
R determinant_field(Matrix<R> m) {
    if (!m.is_square()) throw DomainError("determinant: non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return R{};
    R det = one_of(m(0, 0));
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && is_zero_value(m(pivot, col))) ++pivot;
        if (pivot == n) return zero_of(det);
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
            det = -det;
        }
        det = det * m(col, col);
        const R inv = inverse_of(m(col, col));
        for (std::size_t row = col + 1; row < n; ++row) {
            if (is_zero_value(m(row, col))) continue;
            const R factor = m(row, col) * inv;
            for (std::size_t j = col; j < n; ++j) m(row, j) -= factor * m(col, j);
        }
    }
    return det;
}

/// Leading principal minors by Bareiss elimination without pivoting. Stops
/// after the first zero minor (later entries are then omitted).
inline std::vector<Integer> leading_principal_minors(Matrix<Integer> m) {
    if (!m.is_square()) throw DomainError("leading_principal_minors: non-square matrix");
    const std::size_t n = m.rows();
    std::vector<Integer> minors;
    Integer prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        minors.push_back(m(k, k));
        if (m(k, k) == 0) break;
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return minors;
}

/// Fraction-free (Bareiss) determinant over the integers, with row pivoting.
inline Integer determinant_integer(Matrix<Integer> m) {
    if (!m.is_square()) throw DomainError("determinant: non-square matrix");
    const std::size_t n = m.rows();
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && m(pivot, k) == 0) ++pivot;
            if (pivot == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(k, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return n == 0 ? Integer(1) : prev * sign;
}

}  // namespace permhard
