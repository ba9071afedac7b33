#pragma once

// Exact arithmetic in the degree-16 number field Q(alpha) = Q[x]/(f(x)),
// where alpha = sqrt(2 + sqrt 2) + sqrt(3 + sqrt 6) is the largest real root
// of the fixed modulus f below.

#include "permhard/algebra/linear_solve.hpp"
#include "permhard/algebra/rational.hpp"
#include "permhard/error.hpp"

#include <array>
#include <optional>
#include <span>
#include <sstream>
#include <string>

namespace permhard {

/// Integer coefficients of f, constant term first. f is monic and even.
inline constexpr std::array<long long, 17> kAlphaModulus = {
    1, 0, -1832, 0, 11324, 0, -17816, 0, 11782, 0, -3736, 0, 572, 0, -40, 0, 1};

/// An element c0 + c1 a + ... + c15 a^15 of Q(alpha).
///
/// Stored as an integer numerator vector over one positive common
/// denominator, kept in lowest terms. Equality is therefore structural.
class QAlpha {
public:
    static constexpr std::size_t kDegree = 16;
    using Numerators = std::array<Integer, kDegree>;

    QAlpha() : den_(1) {}
    QAlpha(long value) : den_(1) { num_[0] = value; }  // NOLINT: implicit by design of ring literals
    explicit QAlpha(const Rational& value) : den_(denominator_of(value)) {
        num_[0] = numerator_of(value);
    }

    static QAlpha alpha() {
        QAlpha out;
        out.num_[1] = 1;
        return out;
    }

    /// Builds an element from rational coefficients in the power basis. Inputs
    /// longer than 16 are reduced modulo f.
    static QAlpha from_coefficients(std::span<const Rational> coeffs) {
        Integer den = 1;
        for (const auto& c : coeffs) den = boost::multiprecision::lcm(den, denominator_of(c));
        std::vector<Integer> wide(std::max<std::size_t>(coeffs.size(), kDegree));
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            wide[i] = numerator_of(coeffs[i]) * (den / denominator_of(coeffs[i]));
        return from_wide(std::move(wide), std::move(den));
    }

    /// (1/den) * sum coeffs[i] x^i with integer coefficients, reduced mod f.
    static QAlpha from_integer_poly(std::span<const long long> coeffs, const Integer& den) {
        std::vector<Integer> wide(std::max<std::size_t>(coeffs.size(), kDegree));
        for (std::size_t i = 0; i < coeffs.size(); ++i) wide[i] = coeffs[i];
        return from_wide(std::move(wide), den);
    }

    const Numerators& numerators() const noexcept { return num_; }
    const Integer& denominator() const noexcept { return den_; }

    Rational coefficient(std::size_t i) const { return Rational(num_.at(i), den_); }
    std::array<Rational, kDegree> coefficients() const {
        std::array<Rational, kDegree> out;
        for (std::size_t i = 0; i < kDegree; ++i) out[i] = coefficient(i);
        return out;
    }

    bool is_zero() const {
        for (const auto& c : num_)
            if (c != 0) return false;
        return true;
    }

    std::optional<Rational> as_rational() const {
        for (std::size_t i = 1; i < kDegree; ++i)
            if (num_[i] != 0) return std::nullopt;
        return Rational(num_[0], den_);
    }

    QAlpha operator-() const {
        QAlpha out = *this;
        for (auto& c : out.num_) c = -c;
        return out;
    }

    friend QAlpha operator+(const QAlpha& lhs, const QAlpha& rhs) { return combine(lhs, rhs, false); }
    friend QAlpha operator-(const QAlpha& lhs, const QAlpha& rhs) { return combine(lhs, rhs, true); }

    friend QAlpha operator*(const QAlpha& lhs, const QAlpha& rhs) {
        if (lhs.is_zero() || rhs.is_zero()) return QAlpha();
        std::vector<Integer> wide(2 * kDegree - 1);
        for (std::size_t i = 0; i < kDegree; ++i) {
            if (lhs.num_[i] == 0) continue;
            for (std::size_t j = 0; j < kDegree; ++j) {
                if (rhs.num_[j] == 0) continue;
                wide[i + j] += lhs.num_[i] * rhs.num_[j];
            }
        }
        return from_wide(std::move(wide), lhs.den_ * rhs.den_);
    }

    friend QAlpha operator*(const QAlpha& lhs, const Rational& rhs) {
        if (rhs == 0) return QAlpha();
        QAlpha out = lhs;
        const Integer n = numerator_of(rhs);
        for (auto& c : out.num_) c *= n;
        out.den_ *= denominator_of(rhs);
        out.normalize();
        return out;
    }

    QAlpha& operator+=(const QAlpha& rhs) { return *this = *this + rhs; }
    QAlpha& operator-=(const QAlpha& rhs) { return *this = *this - rhs; }
    QAlpha& operator*=(const QAlpha& rhs) { return *this = *this * rhs; }

    friend bool operator==(const QAlpha& lhs, const QAlpha& rhs) {
        return lhs.den_ == rhs.den_ && lhs.num_ == rhs.num_;
    }

    QAlpha pow(unsigned exp) const {
        QAlpha out(1), base = *this;
        while (exp) {
            if (exp & 1u) out *= base;
            exp >>= 1u;
            if (exp) base *= base;
        }
        return out;
    }

    /// Multiplicative inverse, by solving (this * y = 1) as a 16x16 rational
    /// system. Only used by field-generic algorithms such as determinants.
    QAlpha inverse() const {
        if (is_zero()) throw DomainError("QAlpha::inverse of zero");
        if (auto r = as_rational()) return QAlpha(Rational(1) / *r);
        RationalRows system(kDegree, std::vector<Rational>(kDegree));
        QAlpha column = *this;
        const QAlpha a = alpha();
        for (std::size_t j = 0; j < kDegree; ++j) {
            for (std::size_t i = 0; i < kDegree; ++i) system[i][j] = column.coefficient(i);
            column *= a;
        }
        std::vector<Rational> rhs(kDegree);
        rhs[0] = 1;
        const auto sol = solve_rational(std::move(system), std::move(rhs));
        return from_coefficients(sol);
    }

    /// Sixteen space-separated `num/den` tokens, constant term first.
    std::string str() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < kDegree; ++i) {
            if (i) os << ' ';
            os << to_string(coefficient(i));
        }
        return os.str();
    }

    /// Human-readable polynomial, e.g. "(1/2)*a^2 - 3".
    std::string pretty() const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = kDegree; k-- > 0;) {
            const Rational c = coefficient(k);
            if (c == 0) continue;
            const Rational mag = c < 0 ? Rational(-c) : c;
            os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
            first = false;
            const bool unit = mag == 1 && k != 0;
            if (!unit) os << (denominator_of(mag) == 1 ? numerator_of(mag).str() : "(" + to_string(mag) + ")");
            if (k != 0) os << (unit ? "" : "*") << "a" << (k > 1 ? "^" + std::to_string(k) : "");
        }
        return first ? "0" : os.str();
    }

private:
    static QAlpha combine(const QAlpha& lhs, const QAlpha& rhs, bool subtract) {
        QAlpha out;
        if (lhs.den_ == rhs.den_) {
            out.den_ = lhs.den_;
            for (std::size_t i = 0; i < kDegree; ++i)
                out.num_[i] = subtract ? lhs.num_[i] - rhs.num_[i] : lhs.num_[i] + rhs.num_[i];
        } else {
            const Integer g = boost::multiprecision::gcd(lhs.den_, rhs.den_);
            const Integer lf = rhs.den_ / g, rf = lhs.den_ / g;
            out.den_ = lhs.den_ * lf;
            for (std::size_t i = 0; i < kDegree; ++i)
                out.num_[i] = subtract ? lhs.num_[i] * lf - rhs.num_[i] * rf : lhs.num_[i] * lf + rhs.num_[i] * rf;
        }
        out.normalize();
        return out;
    }

    static QAlpha from_wide(std::vector<Integer> wide, Integer den) {
        for (std::size_t k = wide.size(); k-- > kDegree;) {
            if (wide[k] == 0) continue;
            const Integer c = wide[k];
            for (std::size_t j = 0; j < kDegree; j += 2)
                if (kAlphaModulus[j] != 0) wide[k - kDegree + j] -= c * kAlphaModulus[j];
            wide[k] = 0;
        }
        QAlpha out;
        for (std::size_t i = 0; i < kDegree; ++i) out.num_[i] = std::move(wide[i]);
        out.den_ = std::move(den);
        out.normalize();
        return out;
    }

    void normalize() {
        if (den_ < 0) {
            den_ = -den_;
            for (auto& c : num_) c = -c;
        }
        if (is_zero()) {
            den_ = 1;
            return;
        }
        Integer g = den_;
        for (const auto& c : num_) {
            if (g == 1) break;
            if (c != 0) g = boost::multiprecision::gcd(g, c);
        }
        if (g != 1) {
            den_ /= g;
            for (auto& c : num_) c /= g;
        }
    }

    Numerators num_{};
    Integer den_;
};

inline QAlpha zero_of(const QAlpha&) { return QAlpha(); }
inline QAlpha one_of(const QAlpha&) { return QAlpha(1); }
inline QAlpha inverse_of(const QAlpha& x) { return x.inverse(); }
inline bool is_zero_value(const QAlpha& x) { return x.is_zero(); }

}  // namespace permhard
