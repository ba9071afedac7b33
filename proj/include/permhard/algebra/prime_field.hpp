#pragma once

#include "permhard/algebra/rational.hpp"
#include "permhard/error.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace permhard {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t out = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1u) out = mulmod(out, base, p);
        base = mulmod(base, base, p);
        exp >>= 1u;
    }
    return out;
}

/// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1u) == 0) {
        d >>= 1u;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s && composite; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) composite = false;
        }
        if (composite) return false;
    }
    return true;
}

/// Residue class modulo a prime p. The modulus travels with the value so
/// generic ring code can create zeros and ones of the right field.
class PrimeFieldElem {
public:
    PrimeFieldElem() = default;
    PrimeFieldElem(std::int64_t value, std::uint64_t p) : p_(p) {
        if (p < 2) throw DomainError("PrimeFieldElem: modulus must be prime");
        const std::int64_t r = value % static_cast<std::int64_t>(p);
        v_ = static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
    }
    static PrimeFieldElem from_residue(std::uint64_t v, std::uint64_t p) {
        PrimeFieldElem out;
        out.v_ = v % p;
        out.p_ = p;
        return out;
    }
    static PrimeFieldElem from_rational(const Rational& r, std::uint64_t p) {
        const std::uint64_t den = mod_u64(denominator_of(r), p);
        if (den == 0) throw DomainError("denominator " + denominator_of(r).str() + " not invertible mod " + std::to_string(p));
        return from_residue(mod_u64(numerator_of(r), p), p) * from_residue(den, p).inverse();
    }

    std::uint64_t residue() const noexcept { return v_; }
    std::uint64_t modulus() const noexcept { return p_; }
    bool is_zero() const noexcept { return v_ == 0; }

    friend PrimeFieldElem operator+(PrimeFieldElem a, const PrimeFieldElem& b) {
        a.v_ += b.v_;
        if (a.v_ >= a.p_) a.v_ -= a.p_;
        return a;
    }
    friend PrimeFieldElem operator-(PrimeFieldElem a, const PrimeFieldElem& b) {
        a.v_ = a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_;
        return a;
    }
    PrimeFieldElem operator-() const { return from_residue(v_ == 0 ? 0 : p_ - v_, p_); }
    friend PrimeFieldElem operator*(PrimeFieldElem a, const PrimeFieldElem& b) {
        a.v_ = mulmod(a.v_, b.v_, a.p_);
        return a;
    }
    PrimeFieldElem& operator+=(const PrimeFieldElem& b) { return *this = *this + b; }
    PrimeFieldElem& operator-=(const PrimeFieldElem& b) { return *this = *this - b; }
    PrimeFieldElem& operator*=(const PrimeFieldElem& b) { return *this = *this * b; }
    friend bool operator==(const PrimeFieldElem& a, const PrimeFieldElem& b) { return a.v_ == b.v_ && a.p_ == b.p_; }

    PrimeFieldElem pow(std::uint64_t e) const { return from_residue(powmod(v_, e, p_), p_); }
    PrimeFieldElem inverse() const {
        if (v_ == 0) throw DomainError("inverse of zero mod " + std::to_string(p_));
        return pow(p_ - 2);
    }

    friend std::ostream& operator<<(std::ostream& os, const PrimeFieldElem& x) { return os << x.v_; }

private:
    std::uint64_t v_ = 0;
    std::uint64_t p_ = 2;
};

inline PrimeFieldElem zero_of(const PrimeFieldElem& x) { return PrimeFieldElem::from_residue(0, x.modulus()); }
inline PrimeFieldElem one_of(const PrimeFieldElem& x) { return PrimeFieldElem::from_residue(1, x.modulus()); }
inline PrimeFieldElem inverse_of(const PrimeFieldElem& x) { return x.inverse(); }
inline bool is_zero_value(const PrimeFieldElem& x) { return x.is_zero(); }

/// Legendre symbol via Euler's criterion: 1, p-1 (non-residue) or 0.
inline std::uint64_t euler_criterion(const PrimeFieldElem& a) {
    return powmod(a.residue(), (a.modulus() - 1) / 2, a.modulus());
}

/// Square root mod an odd prime by Tonelli-Shanks; returns the root below
/// p/2, or nullopt for a non-residue.
inline std::optional<PrimeFieldElem> sqrt_mod_p(const PrimeFieldElem& a) {
    const std::uint64_t p = a.modulus();
    if (p == 2) return a;
    if (a.is_zero()) return a;
    if (euler_criterion(a) != 1) return std::nullopt;
    std::uint64_t q = p - 1, s = 0;
    while ((q & 1u) == 0) {
        q >>= 1u;
        ++s;
    }
    std::uint64_t z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
    std::uint64_t m = s, c = powmod(z, q, p), t = powmod(a.residue(), q, p), r = powmod(a.residue(), (q + 1) / 2, p);
    while (t != 1) {
        std::uint64_t i = 0, tt = t;
        while (tt != 1) {
            tt = mulmod(tt, tt, p);
            ++i;
        }
        std::uint64_t b = c;
        for (std::uint64_t k = 0; k + 1 < m - i; ++k) b = mulmod(b, b, p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    if (r > p / 2) r = p - r;
    return PrimeFieldElem::from_residue(r, p);
}

}  // namespace permhard
