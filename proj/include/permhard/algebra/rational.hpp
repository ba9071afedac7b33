#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>

namespace permhard {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

inline Integer numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Integer ipow(Integer base, unsigned exp) {
    Integer out = 1;
    while (exp) {
        if (exp & 1u) out *= base;
        base *= base;
        exp >>= 1u;
    }
    return out;
}

/// 2^a 3^b for possibly negative exponents.
inline Rational pow23(long a, long b) {
    Integer num = 1, den = 1;
    (a >= 0 ? num : den) *= ipow(2, static_cast<unsigned>(a >= 0 ? a : -a));
    (b >= 0 ? num : den) *= ipow(3, static_cast<unsigned>(b >= 0 ? b : -b));
    return Rational(num, den);
}

inline Integer factorial(unsigned n) {
    Integer out = 1;
    for (unsigned k = 2; k <= n; ++k) out *= k;
    return out;
}

/// Floor of the square root; nullopt-free helper returning (root, exact).
inline std::pair<Integer, bool> isqrt_exact(const Integer& v) {
    if (v < 0) return {0, false};
    Integer r = boost::multiprecision::sqrt(v);
    return {r, r * r == v};
}

/// x mod p in [0, p) for a signed big integer and a machine-size modulus.
inline std::uint64_t mod_u64(const Integer& x, std::uint64_t p) {
    Integer r = x % p;
    if (r < 0) r += p;
    return r.convert_to<std::uint64_t>();
}

inline std::string to_string(const Rational& r) {
    return numerator_of(r).str() + "/" + denominator_of(r).str();
}

}  // namespace permhard
