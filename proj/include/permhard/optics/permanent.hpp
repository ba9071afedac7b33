#pragma once

// Permanent kernels. Ryser's inclusion-exclusion with Gray-code column
// updates needs only ring addition, subtraction and multiplication, so one
// template covers Q(alpha), F_p, F_p[x]/(g) and double.

#include "permhard/algebra/matrix.hpp"
#include "permhard/algebra/prime_field.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <type_traits>
#include <vector>

namespace permhard {

inline constexpr std::size_t kExactPermanentGuard = 24;
inline constexpr std::size_t kFloatPermanentGuard = 30;

namespace detail {

template <class R>
void check_permanent_input(const Matrix<R>& m) {
    if (!m.is_square())
        throw DomainError("permanent: matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                          ", not square");
    constexpr std::size_t guard = std::is_floating_point_v<R> ? kFloatPermanentGuard : kExactPermanentGuard;
    if (m.rows() > guard)
        throw GuardError("permanent", "dimension " + std::to_string(m.rows()) + " > " + std::to_string(guard));
}

}  // namespace detail

/// Ryser over any commutative ring. `one` supplies the ring's unit, which
/// matters for rings whose elements carry a modulus.
template <class R>
R permanent(const Matrix<R>& m) {
    detail::check_permanent_input(m);
    const std::size_t n = m.rows();
    if (n == 0) throw DomainError("permanent: empty matrix needs a ring context; handle n = 0 at the call site");
    const R zero = zero_of(m(0, 0));
    std::vector<R> row_sum(n, zero);
    R total = zero;
    std::uint64_t gray = 0;
    const std::uint64_t subsets = std::uint64_t{1} << n;
    for (std::uint64_t k = 1; k < subsets; ++k) {
        const std::size_t j = static_cast<std::size_t>(std::countr_zero(k));
        const std::uint64_t bit = std::uint64_t{1} << j;
        const bool adding = !(gray & bit);
        gray ^= bit;
        for (std::size_t i = 0; i < n; ++i) {
            const R& a = m(i, j);
            if (is_zero_value(a)) continue;
            if (adding)
                row_sum[i] += a;
            else
                row_sum[i] -= a;
        }
        R prod = row_sum[0];
        for (std::size_t i = 1; i < n && !is_zero_value(prod); ++i) prod = prod * row_sum[i];
        if (is_zero_value(prod)) continue;
        if (std::popcount(gray) % 2 == static_cast<int>(n % 2))
            total += prod;
        else
            total -= prod;
    }
    return total;
}

/// Reference n!-term expansion for cross-checks; dimension at most 9.
template <class R>
R permanent_naive(const Matrix<R>& m) {
    detail::check_permanent_input(m);
    const std::size_t n = m.rows();
    if (n > 9) throw GuardError("permanent_naive", "dimension " + std::to_string(n) + " > 9");
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    R total = zero_of(m(0, 0));
    do {
        R prod = m(0, perm[0]);
        for (std::size_t i = 1; i < n; ++i) prod = prod * m(i, perm[i]);
        total += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// Word-size Ryser for F_p with p < 2^31; residues are stored in [0, p).
inline std::uint64_t permanent_mod_p(const Matrix<std::uint64_t>& m, std::uint64_t p) {
    if (!m.is_square()) throw DomainError("permanent_mod_p: matrix is not square");
    if (p >= (std::uint64_t{1} << 31)) throw DomainError("permanent_mod_p: modulus must be below 2^31");
    const std::size_t n = m.rows();
    if (n > kExactPermanentGuard)
        throw GuardError("permanent", "dimension " + std::to_string(n) + " > " + std::to_string(kExactPermanentGuard));
    if (n == 0) return 1 % p;
    std::vector<std::uint64_t> row_sum(n, 0);
    std::uint64_t even = 0, odd = 0;
    std::uint64_t gray = 0;
    for (std::uint64_t k = 1; k < (std::uint64_t{1} << n); ++k) {
        const std::size_t j = static_cast<std::size_t>(std::countr_zero(k));
        const std::uint64_t bit = std::uint64_t{1} << j;
        const bool adding = !(gray & bit);
        gray ^= bit;
        for (std::size_t i = 0; i < n; ++i) {
            const std::uint64_t a = m(i, j);
            row_sum[i] = adding ? (row_sum[i] + a) % p : (row_sum[i] + p - a) % p;
        }
        std::uint64_t prod = row_sum[0];
        for (std::size_t i = 1; i < n && prod; ++i) prod = prod * row_sum[i] % p;
        if (std::popcount(gray) % 2 == static_cast<int>(n % 2))
            even = (even + prod) % p;
        else
            odd = (odd + prod) % p;
    }
    return (even + p - odd) % p;
}

/// F_p permanent through the word-size kernel.
inline PrimeFieldElem permanent(const Matrix<PrimeFieldElem>& m) {
    detail::check_permanent_input(m);
    if (m.rows() == 0) throw DomainError("permanent: empty matrix needs a ring context");
    const std::uint64_t p = m(0, 0).modulus();
    if (p >= (std::uint64_t{1} << 31)) return permanent<PrimeFieldElem>(m);
    const auto raw = m.map([](const PrimeFieldElem& x) { return x.residue(); });
    return PrimeFieldElem::from_residue(permanent_mod_p(raw, p), p);
}

}  // namespace permhard
