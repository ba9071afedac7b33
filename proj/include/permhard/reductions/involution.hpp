#pragma once

// Orthogonal involutions and symplectic doublings built from certificate
// networks, plus exact matrix-group membership predicates.

#include "permhard/circuits/combinators.hpp"
#include "permhard/optics/compile.hpp"
#include "permhard/reductions/psd.hpp"

#include <string>

namespace permhard {

/// ((0, B), (B^T, 0)) over any ring; symmetric, and an involution when B is
/// orthogonal.
template <class R>
Matrix<R> lambda_matrix(const Matrix<R>& b) {
    if (!b.is_square() || b.rows() == 0) throw DomainError("lambda_matrix: B must be square and non-empty");
    const std::size_t n = b.rows();
    Matrix<R> out(2 * n, 2 * n, zero_of(b(0, 0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            out(i, n + j) = b(i, j);
            out(n + j, i) = b(i, j);
        }
    return out;
}

/// diag(B, B).
template <class R>
Matrix<R> make_symplectic(const Matrix<R>& b) {
    if (!b.is_square() || b.rows() == 0) throw DomainError("make_symplectic: B must be square and non-empty");
    const std::size_t n = b.rows();
    Matrix<R> out(2 * n, 2 * n, zero_of(b(0, 0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            out(i, j) = b(i, j);
            out(n + i, n + j) = b(i, j);
        }
    return out;
}

/// ((0, I), (-I, 0)) of size 2k, with ring elements taken from `like`.
template <class R>
Matrix<R> omega(std::size_t k, const R& like) {
    Matrix<R> out(2 * k, 2 * k, zero_of(like));
    for (std::size_t i = 0; i < k; ++i) {
        out(i, k + i) = one_of(like);
        out(k + i, i) = -one_of(like);
    }
    return out;
}

struct InvolutionResult {
    Certificate base;  // certificate of or_extend(c)
    QMatrix matrix;    // Lambda of the base network
};

/// Lambda_B for B the certified network of C and not b; Per = (2^a 3^b (Delta_C + 2^n))^2.
inline InvolutionResult make_involution(const BooleanCircuit& c) {
    InvolutionResult r;
    r.base = certify(or_extend(c));
    r.matrix = lambda_matrix(r.base.network.matrix);
    return r;
}

enum class MatrixGroup { GL, SL, O, SO, UAsRealOrthogonal, Sp, Involution };

inline std::string group_name(MatrixGroup g) {
    switch (g) {
        case MatrixGroup::GL: return "GL";
        case MatrixGroup::SL: return "SL";
        case MatrixGroup::O: return "O";
        case MatrixGroup::SO: return "SO";
        case MatrixGroup::UAsRealOrthogonal: return "U";
        case MatrixGroup::Sp: return "Sp";
        case MatrixGroup::Involution: return "involution";
    }
    return "?";
}

template <class R>
R determinant(const Matrix<R>& m) {
    if (!m.is_square() || m.rows() == 0) throw DomainError("determinant: need a non-empty square matrix");
    if constexpr (std::is_same_v<R, Integer>) {
        return determinant_integer(m);
    } else {
        return determinant_field(m);
    }
}

template <class R>
bool check_membership(const Matrix<R>& m, MatrixGroup group) {
    if (!m.is_square() || m.rows() == 0) throw DomainError("check_membership: need a non-empty square matrix");
    const R one = one_of(m(0, 0));
    switch (group) {
        case MatrixGroup::GL: return !is_zero_value(determinant(m));
        case MatrixGroup::SL: return determinant(m) == one;
        case MatrixGroup::O:
        case MatrixGroup::UAsRealOrthogonal: return is_orthogonal(m);
        case MatrixGroup::SO: return is_orthogonal(m) && determinant(m) == one;
        case MatrixGroup::Sp: {
            if (m.rows() % 2) throw DomainError("check_membership: Sp needs even dimension");
            const auto w = omega(m.rows() / 2, m(0, 0));
            return m.transpose() * w * m == w;
        }
        case MatrixGroup::Involution: return is_identity(m * m);
    }
    return false;
}

}  // namespace permhard
