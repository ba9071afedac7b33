#pragma once

// Certified real embedding of Q(alpha): alpha is isolated by exact dyadic
// bisection and elements are evaluated with rational interval arithmetic.

#include "permhard/algebra/qalpha.hpp"

#include <mutex>
#include <string>

namespace permhard {

/// Closed interval [lo, hi] with exact rational endpoints.
struct RealInterval {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
    bool contains_zero() const { return lo <= 0 && hi >= 0; }
};

namespace detail {

inline Rational eval_modulus(const Rational& x) {
    Rational acc = 0;
    for (std::size_t k = kAlphaModulus.size(); k-- > 0;) acc = acc * x + kAlphaModulus[k];
    return acc;
}

/// Bisection state shared by all callers; refined monotonically under a lock.
class AlphaIsolator {
public:
    static AlphaIsolator& instance() {
        static AlphaIsolator iso;
        return iso;
    }

    RealInterval enclosure(unsigned bits) {
        std::lock_guard<std::mutex> lock(mutex_);
        while (bits_ < bits) {
            const Rational mid = (lo_ + hi_) / 2;
            const Rational v = eval_modulus(mid);
            if (v == 0) {
                lo_ = hi_ = mid;
                bits_ = ~0u;
                break;
            }
            ((v < 0) == lo_negative_ ? lo_ : hi_) = mid;
            ++bits_;
        }
        return {lo_, hi_};
    }

private:
    AlphaIsolator() : lo_(4), hi_(Rational(17, 4)), bits_(2) {
        const Rational flo = eval_modulus(lo_), fhi = eval_modulus(hi_);
        if ((flo < 0) == (fhi < 0)) throw VerificationError("alpha isolation: no sign change on [4, 17/4]");
        lo_negative_ = flo < 0;
    }

    std::mutex mutex_;
    Rational lo_, hi_;
    unsigned bits_;  // width is 2^-bits
    bool lo_negative_ = true;
};

inline RealInterval enclose_with(const QAlpha& x, const RealInterval& a) {
    RealInterval out{Rational(0), Rational(0)};
    Rational plo = 1, phi = 1;
    for (std::size_t i = 0; i < QAlpha::kDegree; ++i) {
        const Rational c = x.coefficient(i);
        if (c > 0) {
            out.lo += c * plo;
            out.hi += c * phi;
        } else if (c < 0) {
            out.lo += c * phi;
            out.hi += c * plo;
        }
        plo *= a.lo;
        phi *= a.hi;
    }
    return out;
}

}  // namespace detail

/// Enclosure of alpha of width at most 2^-bits.
inline RealInterval alpha_enclosure(unsigned bits) {
    return detail::AlphaIsolator::instance().enclosure(bits);
}

/// Certified enclosure of the real embedding of x, of width < 2^-precision.
inline RealInterval qa_embed_interval(const QAlpha& x, unsigned precision = 64) {
    if (auto r = x.as_rational()) return {*r, *r};
    const Rational target = Rational(1) / ipow(2, precision);
    for (unsigned bits = precision + 64;; bits += 64) {
        RealInterval out = detail::enclose_with(x, alpha_enclosure(bits));
        if (out.width() < target) return out;
    }
}

/// Midpoint of a certified enclosure; |result - exact| < 2^-precision.
inline Rational qa_embed_real(const QAlpha& x, unsigned precision = 64) {
    return qa_embed_interval(x, precision).midpoint();
}

inline double to_double(const QAlpha& x) { return qa_embed_real(x, 80).convert_to<double>(); }

/// Exact sign of the real embedding (-1, 0, 1).
inline int qa_sign(const QAlpha& x) {
    if (x.is_zero()) return 0;
    for (unsigned bits = 64;; bits *= 2) {
        const RealInterval iv = qa_embed_interval(x, bits);
        if (iv.lo > 0) return 1;
        if (iv.hi < 0) return -1;
    }
}

/// Fixed-point decimal with `digits` fractional digits, rounded half away
/// from zero.
inline std::string to_decimal(const Rational& value, unsigned digits = 40) {
    const bool neg = value < 0;
    const Rational mag = neg ? Rational(-value) : value;
    const Integer scale = ipow(10, digits);
    const Rational scaled = mag * scale + Rational(1, 2);
    const Integer q = numerator_of(scaled) / denominator_of(scaled);
    std::string frac = (q % scale).str();
    frac.insert(0, digits - frac.size(), '0');
    std::string out = (q / scale).str();
    if (digits) out += "." + frac;
    if (neg && q != 0) out.insert(0, "-");
    return out;
}

inline std::string qa_to_decimal(const QAlpha& x, unsigned digits = 40) {
    return to_decimal(qa_embed_real(x, digits * 4 + 16), digits);
}

}  // namespace permhard
