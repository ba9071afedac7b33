#pragma once

#include "permhard/algebra/rational.hpp"
#include "permhard/error.hpp"

#include <utility>
#include <vector>

namespace permhard {

/// Dense row-major rational matrix used for small exact solves.
using RationalRows = std::vector<std::vector<Rational>>;

/// Solves A x = b exactly by Gauss-Jordan elimination. A must be square and
/// nonsingular.
inline std::vector<Rational> solve_rational(RationalRows a, std::vector<Rational> b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw DomainError("solve_rational: dimension mismatch");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) throw DomainError("solve_rational: singular system");
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        const Rational inv = 1 / a[col][col];
        for (std::size_t j = col; j < n; ++j) a[col][j] *= inv;
        b[col] *= inv;
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            const Rational factor = a[row][col];
            for (std::size_t j = col; j < n; ++j) a[row][j] -= factor * a[col][j];
            b[row] -= factor * b[col];
        }
    }
    return b;
}

}  // namespace permhard
