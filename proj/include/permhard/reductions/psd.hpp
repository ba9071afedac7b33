#pragma once

// Permanents of 0-1 matrices from permanents of positive-definite matrices:
// Per(B)^2 = Per(L_B) where L_B = ((0, B), (B^T, 0)), and Per(L_B + xI) is
// a monic degree-2n polynomial in x with non-negative integer coefficients.

#include "permhard/optics/permanent.hpp"

#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <thread>
#include <vector>

namespace permhard {

using IntMatrix = Matrix<Integer>;
using PermanentOracle = std::function<Integer(const IntMatrix&)>;

inline Integer exact_permanent(const IntMatrix& m) { return m.rows() == 0 ? Integer(1) : permanent(m); }

inline IntMatrix lambda_block(const IntMatrix& b) {
    if (!b.is_square()) throw DomainError("lambda_block: B is not square");
    for (const auto& v : b.data())
        if (v != 0 && v != 1) throw DomainError("lambda_block: B must have 0/1 entries");
    const std::size_t n = b.rows();
    IntMatrix out(2 * n, 2 * n, Integer(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            out(i, n + j) = b(i, j);
            out(n + j, i) = b(i, j);
        }
    return out;
}

inline IntMatrix shifted(const IntMatrix& m, const Integer& x) {
    IntMatrix out = m;
    for (std::size_t i = 0; i < m.rows(); ++i) out(i, i) += x;
    return out;
}

/// Sylvester's criterion: every leading principal minor is positive.
inline bool is_positive_definite(const IntMatrix& m) {
    if (!is_symmetric(m)) return false;
    const auto minors = leading_principal_minors(m);
    if (minors.size() != m.rows()) return false;
    for (const auto& d : minors)
        if (d <= 0) return false;
    return true;
}

struct PsdResult {
    Integer permanent;                 // Per(B)
    std::vector<Integer> coefficients; // of Per(L_B + xI), constant term first
    std::vector<Integer> nodes;        // x values queried
    std::size_t oracle_calls = 0;
};

namespace detail {

inline Integer root_of_constant(const Integer& c0) {
    const auto [r, exact] = isqrt_exact(c0);
    if (!exact) throw VerificationError("psd: Per(L_B) = " + c0.str() + " is not a perfect square");
    return r;
}

inline Integer query_certified(const IntMatrix& lb, const Integer& x, const PermanentOracle& oracle, PsdResult& res) {
    const IntMatrix a = shifted(lb, x);
    if (!is_positive_definite(a))
        throw VerificationError("psd: L_B + " + x.str() + " I failed Sylvester certification");
    res.nodes.push_back(x);
    ++res.oracle_calls;
    return oracle(a);
}

/// Coefficient bounds: non-negative integers, leading 1, the rest at most (2n)!.
inline void check_coefficients(const std::vector<Integer>& c, std::size_t n) {
    const Integer bound = factorial(static_cast<unsigned>(2 * n));
    if (c.back() != 1) throw VerificationError("psd: fitted polynomial is not monic");
    for (const auto& v : c)
        if (v < 0 || v > bound) throw VerificationError("psd: coefficient " + v.str() + " outside [0, (2n)!]");
}

}  // namespace detail

/// Newton interpolation through x = 2n+1 .. 4n of R(x) = Per(L_B + xI) - x^{2n}.
inline PsdResult psd_interpolate(const IntMatrix& b, const PermanentOracle& oracle = exact_permanent) {
    const std::size_t n = b.rows();
    if (n == 0) return {Integer(1), {Integer(1)}, {}, 0};
    if (n > 5) throw GuardError("psd_interpolate", "n = " + std::to_string(n) + " > 5");
    const IntMatrix lb = lambda_block(b);
    const std::size_t deg = 2 * n;
    PsdResult res;
    std::vector<Rational> xs, dd;
    for (std::size_t k = 0; k < deg; ++k) {
        const Integer x = Integer(deg + 1 + k);
        const Integer v = detail::query_certified(lb, x, oracle, res) - ipow(x, static_cast<unsigned>(deg));
        xs.emplace_back(x);
        dd.emplace_back(v);
    }
    // divided differences in place: dd[k] = R[x0..xk]
    for (std::size_t level = 1; level < deg; ++level)
        for (std::size_t k = deg - 1; k >= level; --k) dd[k] = (dd[k] - dd[k - 1]) / (xs[k] - xs[k - level]);
    // expand the Newton form into monomial coefficients
    std::vector<Rational> poly{dd[deg - 1]};
    for (std::size_t k = deg - 1; k-- > 0;) {
        std::vector<Rational> next(poly.size() + 1, Rational(0));
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] -= poly[i] * xs[k];
        }
        next[0] += dd[k];
        poly = std::move(next);
    }
    poly.resize(deg + 1, Rational(0));
    poly[deg] += 1;
    for (const auto& c : poly) {
        if (denominator_of(c) != 1) throw VerificationError("psd: interpolated coefficient " + to_string(c) + " is not an integer");
        res.coefficients.push_back(numerator_of(c));
    }
    detail::check_coefficients(res.coefficients, n);
    res.permanent = detail::root_of_constant(res.coefficients[0]);
    return res;
}

/// One query at x0 = (2n)! + 1, read off in base x0.
inline PsdResult psd_single_call(const IntMatrix& b, const PermanentOracle& oracle = exact_permanent) {
    const std::size_t n = b.rows();
    if (n == 0) return {Integer(1), {Integer(1)}, {}, 0};
    if (n > 4) throw GuardError("psd_single_call", "n = " + std::to_string(n) + " > 4");
    const IntMatrix lb = lambda_block(b);
    const Integer x0 = factorial(static_cast<unsigned>(2 * n)) + 1;
    PsdResult res;
    Integer v = detail::query_certified(lb, x0, oracle, res);
    for (std::size_t k = 0; k <= 2 * n; ++k) {
        res.coefficients.push_back(v % x0);
        v /= x0;
    }
    if (v != 0) throw VerificationError("psd_single_call: value has more than 2n+1 base-x0 digits");
    detail::check_coefficients(res.coefficients, n);
    res.permanent = detail::root_of_constant(res.coefficients[0]);
    return res;
}

// --- Gaussian estimator -----------------------------------------------------

using ComplexMatrix = std::vector<std::vector<std::complex<double>>>;

struct EstimateResult {
    double mean = 0;
    double standard_error = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    double min_statistic = 0;  // smallest per-sample value, always >= 0
};

inline constexpr std::uint64_t kEstimateChunk = 1u << 14;

namespace detail {

struct ChunkStats {
    double sum = 0, sum_sq = 0, min = 0;
    std::uint64_t count = 0;
};

/// Chunk k draws from its own generator seeded by (seed, k), so results do
/// not depend on how chunks are spread over threads.
inline ChunkStats estimate_chunk(const ComplexMatrix& c, std::uint64_t seed, std::uint64_t chunk, std::uint64_t count) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    const std::size_t n = c.size();
    std::vector<std::complex<double>> x(n);
    ChunkStats st;
    st.min = std::numeric_limits<double>::infinity();
    for (std::uint64_t s = 0; s < count; ++s) {
        for (auto& xi : x) {
            const double re = normal(rng);
            const double im = normal(rng);
            xi = {re, im};
        }
        double prod = 1.0;
        for (std::size_t i = 0; i < n; ++i) {
            std::complex<double> dot = 0;
            for (std::size_t j = 0; j < n; ++j) dot += c[i][j] * x[j];
            prod *= std::norm(dot);
        }
        st.sum += prod;
        st.sum_sq += prod * prod;
        st.min = std::min(st.min, prod);
        ++st.count;
    }
    return st;
}

}  // namespace detail

/// Monte-Carlo estimate of Per(C C^dagger) = E prod_i |(C x)_i|^2 over
/// standard complex Gaussian x (variance 1/2 per real component).
inline EstimateResult gaussian_estimate(const ComplexMatrix& c, std::uint64_t samples, std::uint64_t seed,
                                        unsigned workers = 1) {
    if (samples == 0) throw DomainError("gaussian_estimate: need at least one sample");
    for (const auto& row : c)
        if (row.size() != c.size()) throw DomainError("gaussian_estimate: C must be square");
    const std::uint64_t chunks = (samples + kEstimateChunk - 1) / kEstimateChunk;
    std::vector<detail::ChunkStats> stats(chunks);
    auto run = [&](std::uint64_t first, std::uint64_t step) {
        for (std::uint64_t k = first; k < chunks; k += step) {
            const std::uint64_t count = std::min(kEstimateChunk, samples - k * kEstimateChunk);
            stats[k] = detail::estimate_chunk(c, seed, k, count);
        }
    };
    workers = std::max(1u, workers);
    if (workers == 1) {
        run(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w, workers);
        for (auto& t : pool) t.join();
    }
    double sum = 0, sum_sq = 0, mn = std::numeric_limits<double>::infinity();
    for (const auto& s : stats) {
        sum += s.sum;
        sum_sq += s.sum_sq;
        mn = std::min(mn, s.min);
    }
    EstimateResult r;
    r.samples = samples;
    r.seed = seed;
    r.mean = sum / static_cast<double>(samples);
    const double var = samples > 1 ? (sum_sq - sum * r.mean) / static_cast<double>(samples - 1) : 0.0;
    r.standard_error = std::sqrt(std::max(var, 0.0) / static_cast<double>(samples));
    r.min_statistic = mn;
    return r;
}

/// A real factor C with C C^T = A for a symmetric positive-definite integer
/// matrix A (Cholesky in double).
inline ComplexMatrix cholesky_factor(const IntMatrix& a) {
    const std::size_t n = a.rows();
    std::vector<std::vector<double>> l(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            double s = a(i, j).convert_to<double>();
            for (std::size_t k = 0; k < j; ++k) s -= l[i][k] * l[j][k];
            if (i == j) {
                if (s <= 0) throw DomainError("cholesky_factor: matrix is not positive-definite");
                l[i][i] = std::sqrt(s);
            } else {
                l[i][j] = s / l[j][j];
            }
        }
    ComplexMatrix c(n, std::vector<std::complex<double>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) c[i][j] = l[i][j];
    return c;
}

}  // namespace permhard
