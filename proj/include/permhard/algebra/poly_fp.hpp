#pragma once

// Univariate polynomials over F_p and the factorization of f mod p
// (square-free split, distinct-degree, Cantor-Zassenhaus equal-degree).

#include "permhard/algebra/prime_field.hpp"
#include "permhard/algebra/qalpha.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace permhard {

class PolyOverFp {
public:
    PolyOverFp() = default;
    PolyOverFp(std::vector<std::uint64_t> coeffs, std::uint64_t p) : c_(std::move(coeffs)), p_(p) {
        for (auto& v : c_) v %= p_;
        trim();
    }
    static PolyOverFp from_signed(const std::vector<long long>& coeffs, std::uint64_t p) {
        std::vector<std::uint64_t> c(coeffs.size());
        for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = PrimeFieldElem(coeffs[i], p).residue();
        return {std::move(c), p};
    }
    static PolyOverFp monomial(std::size_t degree, std::uint64_t coeff, std::uint64_t p) {
        std::vector<std::uint64_t> c(degree + 1, 0);
        c[degree] = coeff;
        return {std::move(c), p};
    }
    static PolyOverFp constant(std::uint64_t v, std::uint64_t p) { return {{v}, p}; }

    /// The fixed modulus f reduced mod p.
    static PolyOverFp alpha_modulus(std::uint64_t p) {
        return from_signed(std::vector<long long>(kAlphaModulus.begin(), kAlphaModulus.end()), p);
    }

    std::uint64_t modulus() const noexcept { return p_; }
    const std::vector<std::uint64_t>& coeffs() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    std::uint64_t lead() const { return c_.empty() ? 0 : c_.back(); }
    std::uint64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

    friend bool operator==(const PolyOverFp& a, const PolyOverFp& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

    friend PolyOverFp operator+(const PolyOverFp& a, const PolyOverFp& b) {
        std::vector<std::uint64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a.coeff(i) + b.coeff(i)) % a.p_;
        return {std::move(c), a.p_};
    }
    friend PolyOverFp operator-(const PolyOverFp& a, const PolyOverFp& b) {
        std::vector<std::uint64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a.coeff(i) + a.p_ - b.coeff(i)) % a.p_;
        return {std::move(c), a.p_};
    }
    friend PolyOverFp operator*(const PolyOverFp& a, const PolyOverFp& b) {
        if (a.is_zero() || b.is_zero()) return {{}, a.p_};
        std::vector<std::uint64_t> c(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = (c[i + j] + mulmod(a.c_[i], b.c_[j], a.p_)) % a.p_;
        }
        return {std::move(c), a.p_};
    }

    /// Quotient and remainder; the divisor must be nonzero.
    static std::pair<PolyOverFp, PolyOverFp> divmod(const PolyOverFp& a, const PolyOverFp& b) {
        if (b.is_zero()) throw DomainError("PolyOverFp: division by zero polynomial");
        const std::uint64_t p = a.p_;
        std::vector<std::uint64_t> r = a.c_;
        const long db = b.degree();
        if (a.degree() < db) return {PolyOverFp({}, p), a};
        std::vector<std::uint64_t> q(static_cast<std::size_t>(a.degree() - db + 1), 0);
        const std::uint64_t inv = powmod(b.lead(), p - 2, p);
        for (long k = a.degree(); k >= db; --k) {
            const std::uint64_t coef = mulmod(r[static_cast<std::size_t>(k)], inv, p);
            if (coef == 0) continue;
            q[static_cast<std::size_t>(k - db)] = coef;
            for (long j = 0; j <= db; ++j) {
                auto& slot = r[static_cast<std::size_t>(k - db + j)];
                slot = (slot + p - mulmod(coef, b.c_[static_cast<std::size_t>(j)], p)) % p;
            }
        }
        return {PolyOverFp(std::move(q), p), PolyOverFp(std::move(r), p)};
    }
    friend PolyOverFp operator%(const PolyOverFp& a, const PolyOverFp& b) { return divmod(a, b).second; }
    friend PolyOverFp operator/(const PolyOverFp& a, const PolyOverFp& b) { return divmod(a, b).first; }

    PolyOverFp monic() const {
        if (is_zero()) return *this;
        const std::uint64_t inv = powmod(lead(), p_ - 2, p_);
        std::vector<std::uint64_t> c(c_.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = mulmod(c_[i], inv, p_);
        return {std::move(c), p_};
    }

    PolyOverFp derivative() const {
        if (c_.size() <= 1) return {{}, p_};
        std::vector<std::uint64_t> c(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = mulmod(c_[i], i % p_, p_);
        return {std::move(c), p_};
    }

    std::string str() const {
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
        os << "]";
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<std::uint64_t> c_;
    std::uint64_t p_ = 2;
};

inline PolyOverFp poly_gcd(PolyOverFp a, PolyOverFp b) {
    while (!b.is_zero()) {
        PolyOverFp r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// base^e mod m, exponent given as an arbitrary-precision integer.
inline PolyOverFp poly_powmod(PolyOverFp base, const Integer& e, const PolyOverFp& m) {
    PolyOverFp out = PolyOverFp::constant(1, m.modulus()) % m;
    base = base % m;
    if (e == 0) return out;
    const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(e)) + 1;
    for (unsigned i = bits; i-- > 0;) {
        out = (out * out) % m;
        if (boost::multiprecision::bit_test(e, i)) out = (out * base) % m;
    }
    return out;
}

/// x^p mod m.
inline PolyOverFp frobenius_of_x(const PolyOverFp& m) {
    return poly_powmod(PolyOverFp::monomial(1, 1, m.modulus()), Integer(m.modulus()), m);
}

struct PolyFactor {
    PolyOverFp factor;
    unsigned multiplicity;
};

namespace detail {

// p-th root of a polynomial whose derivative vanishes (only powers x^{kp}).
inline PolyOverFp pth_root(const PolyOverFp& g) {
    const std::uint64_t p = g.modulus();
    std::vector<std::uint64_t> c(static_cast<std::size_t>(g.degree()) / p + 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = g.coeff(i * p);
    return {std::move(c), p};
}

inline void squarefree_parts(const PolyOverFp& f, unsigned scale, std::vector<PolyFactor>& out) {
    const std::uint64_t p = f.modulus();
    PolyOverFp c = poly_gcd(f, f.derivative());
    PolyOverFp w = f / c;
    unsigned i = 1;
    while (!w.is_one()) {
        PolyOverFp y = poly_gcd(w, c);
        PolyOverFp fac = w / y;
        if (!fac.is_one()) out.push_back({fac.monic(), i * scale});
        w = y;
        c = c / y;
        ++i;
    }
    if (!c.is_one()) squarefree_parts(pth_root(c).monic(), scale * static_cast<unsigned>(p), out);
}

// Splits a square-free product of irreducibles of degree d.
inline void equal_degree_split(const PolyOverFp& g, long d, std::mt19937_64& rng, std::vector<PolyOverFp>& out) {
    if (g.degree() == d) {
        out.push_back(g.monic());
        return;
    }
    const std::uint64_t p = g.modulus();
    std::uniform_int_distribution<std::uint64_t> coef(0, p - 1);
    while (true) {
        std::vector<std::uint64_t> c(static_cast<std::size_t>(g.degree()));
        for (auto& v : c) v = coef(rng);
        const PolyOverFp a(std::move(c), p);
        if (a.degree() < 1) continue;
        PolyOverFp b;
        if (p == 2) {
            // Absolute trace a + a^2 + ... + a^(2^(d-1)).
            PolyOverFp term = a % g;
            b = term;
            for (long k = 1; k < d; ++k) {
                term = (term * term) % g;
                b = b + term;
            }
        } else {
            const Integer e = (boost::multiprecision::pow(Integer(p), static_cast<unsigned>(d)) - 1) / 2;
            b = poly_powmod(a, e, g) - PolyOverFp::constant(1, p);
        }
        PolyOverFp h = poly_gcd(g, b);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            equal_degree_split(h, d, rng, out);
            equal_degree_split(g / h, d, rng, out);
            return;
        }
    }
}

}  // namespace detail

/// Factors a monic polynomial over F_p into irreducibles with multiplicities,
/// sorted by (degree, coefficients). Deterministic.
inline std::vector<PolyFactor> factor_poly(const PolyOverFp& f) {
    std::vector<PolyFactor> squarefree;
    detail::squarefree_parts(f.monic(), 1, squarefree);
    std::vector<PolyFactor> out;
    std::mt19937_64 rng(0x5eedULL);
    for (const auto& [part, mult] : squarefree) {
        PolyOverFp rest = part;
        const PolyOverFp x = PolyOverFp::monomial(1, 1, f.modulus());
        PolyOverFp h = x;
        for (long d = 1; rest.degree() >= 2 * d; ++d) {
            h = poly_powmod(h, Integer(f.modulus()), rest);
            PolyOverFp g = poly_gcd(rest, h - x);
            if (g.degree() > 0) {
                std::vector<PolyOverFp> pieces;
                detail::equal_degree_split(g, d, rng, pieces);
                for (auto& piece : pieces) out.push_back({std::move(piece), mult});
                rest = rest / g;
                h = h % rest;
            }
        }
        if (rest.degree() > 0) out.push_back({rest.monic(), mult});
    }
    std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) {
        if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
        return a.factor.coeffs() < b.factor.coeffs();
    });
    return out;
}

inline std::vector<PolyFactor> factor_f_mod_p(std::uint64_t p) {
    if (!is_prime(p)) throw DomainError("factor_f_mod_p: " + std::to_string(p) + " is not prime");
    return factor_poly(PolyOverFp::alpha_modulus(p));
}

/// f splits into 16 distinct linear factors iff x^p = x mod f.
inline bool splits_completely(std::uint64_t p) {
    const PolyOverFp f = PolyOverFp::alpha_modulus(p);
    return frobenius_of_x(f) == PolyOverFp::monomial(1, 1, p) % f;
}

}  // namespace permhard
