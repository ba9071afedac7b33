#pragma once

// Exact 2x2 matrices of the real single-qubit gates over Q(alpha).

#include "permhard/algebra/matrix.hpp"
#include "permhard/algebra/representations.hpp"
#include "permhard/qsim/qubit_circuit.hpp"

namespace permhard {

using QMatrix = Matrix<QAlpha>;

inline QMatrix qmatrix(const std::vector<std::vector<QAlpha>>& rows) { return QMatrix::from_rows(rows); }

/// R_{pi/4} = (1/2) [[s, -sbar], [sbar, s]] with s = sqrt(2+sqrt 2), sbar = sqrt(2-sqrt 2).
inline const QMatrix& rq_matrix() {
    static const QMatrix m = [] {
        const QAlpha s = representation(Radical::SqrtTwoPlusSqrt2) * Rational(1, 2);
        const QAlpha sb = representation(Radical::SqrtTwoMinusSqrt2) * Rational(1, 2);
        return qmatrix({{s, -sb}, {sb, s}});
    }();
    return m;
}

inline QMatrix single_qubit_matrix(GateKind k) {
    switch (k) {
        case GateKind::H: {
            const QAlpha h = Radicals::inv_sqrt2();
            return qmatrix({{h, h}, {h, -h}});
        }
        case GateKind::Z: return qmatrix({{QAlpha(1), QAlpha(0)}, {QAlpha(0), QAlpha(-1)}});
        case GateKind::X: return qmatrix({{QAlpha(0), QAlpha(1)}, {QAlpha(1), QAlpha(0)}});
        case GateKind::RQ: return rq_matrix();
        case GateKind::RQinv: return rq_matrix().transpose();
        default: throw DomainError("single_qubit_matrix: " + gate_name(k) + " is not a single-qubit gate");
    }
}

/// The rotation R = [[0, -1], [1, 0]] applied by the doubly controlled block.
inline QMatrix r_matrix() { return qmatrix({{QAlpha(0), QAlpha(-1)}, {QAlpha(1), QAlpha(0)}}); }

}  // namespace permhard
