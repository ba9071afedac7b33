#pragma once

// Recovering Delta_C exactly from a sign oracle (binary search over shifted
// circuits) or from a multiplicative approximation oracle (interval
// bracketing, boosted by circuit powers when the factor exceeds 2).

#include "permhard/circuits/combinators.hpp"

#include <functional>
#include <string>
#include <vector>

namespace permhard {

/// Returns sign(Delta) in {-1, 0, 1} for the queried circuit.
using SignOracle = std::function<int(const BooleanCircuit&)>;
/// Returns v >= 0 with |Delta| / kappa <= v <= kappa |Delta|.
using ApproxOracle = std::function<Rational(const BooleanCircuit&)>;

inline SignOracle bruteforce_sign_oracle() {
    return [](const BooleanCircuit& q) { return sign_of(delta_bruteforce(q)); };
}

/// Answers factor * |Delta|; factor = 1 is honest, factor = kappa or
/// 1 / kappa is an adversary sitting on the edge of the promised band.
inline ApproxOracle scaled_approx_oracle(const Rational& factor) {
    return [factor](const BooleanCircuit& q) { return Rational(abs(delta_bruteforce(q))) * factor; };
}

namespace detail {

inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Integer ceil_div(const Integer& a, const Integer& b) { return -floor_div(-a, b); }

inline Integer round_up_even(const Integer& x) { return 2 * ceil_div(x, 2); }
inline Integer round_down_even(const Integer& x) { return 2 * floor_div(x, 2); }

}  // namespace detail

struct SignQuery {
    Integer k;
    int answer = 0;
};

struct SearchResult {
    Integer delta;
    std::size_t calls = 0;
    std::vector<SignQuery> trace;
};

/// Binary search over the admissible values of Delta_C in [-2^n, 2^n]; all
/// of them are even once n >= 1. The last candidate is confirmed by a final
/// zero answer, so contradictory oracles are caught.
inline SearchResult search_delta(const BooleanCircuit& c, const SignOracle& oracle) {
    SearchResult res;
    const std::size_t n = c.input_count();
    if (n == 0) {
        const int s = oracle(c);
        res.calls = 1;
        res.trace.push_back({Integer(0), s});
        if (s == 0) throw VerificationError("search_delta: zero sign for a 0-input circuit");
        res.delta = s;
        return res;
    }
    Integer lo = -(Integer(1) << n), hi = Integer(1) << n;
    auto ask = [&](const Integer& k) {
        const int s = oracle(shift(c, k).circuit);
        ++res.calls;
        res.trace.push_back({k, s});
        return s;
    };
    while (true) {
        if (lo > hi) throw VerificationError("search_delta: oracle answers are inconsistent (empty bracket)");
        const Integer mid = lo == hi ? lo : 2 * detail::floor_div(lo / 2 + hi / 2, 2);
        const int s = ask(mid);
        if (s == 0) {
            res.delta = mid;
            return res;
        }
        if (lo == hi) throw VerificationError("search_delta: oracle answers are inconsistent (last candidate rejected)");
        if (s > 0) lo = mid + 2;
        else hi = mid - 2;
    }
}

struct ApproxStep {
    Integer a;          // left end queried: Delta - a >= 0
    unsigned scale = 0; // shift scale exponent s
    unsigned power = 1; // boosting exponent m
    BooleanCircuit query;
    Rational answer;
    Integer lo, hi;      // bracket after this step
    Rational ratio;      // new length / old length
};

struct ApproxSearchResult {
    Integer delta;
    unsigned power = 1;
    std::vector<ApproxStep> steps;
};

/// Smallest m with kappa <= 2^m, so kappa^(1/m) <= 2.
inline unsigned boosting_exponent(const Rational& kappa) {
    if (kappa < 1) throw DomainError("boosting_exponent: kappa must be >= 1");
    unsigned m = 1;
    while (kappa > Rational(Integer(1) << m)) ++m;
    return m;
}

/// m-fold product circuit; its gap is Delta^m.
inline BooleanCircuit circuit_power(const BooleanCircuit& c, unsigned m) {
    if (m == 0) throw DomainError("circuit_power: m must be >= 1");
    BooleanCircuit out = c;
    for (unsigned k = 1; k < m; ++k) out = multiply(out, c);
    return out;
}

inline ApproxSearchResult search_delta_approx(const BooleanCircuit& c, const ApproxOracle& oracle, const Rational& kappa) {
    if (kappa < 1) throw DomainError("search_delta_approx: kappa must be >= 1");
    // 0-input circuits are padded by one input, which doubles the gap.
    const bool padded = c.input_count() == 0;
    const BooleanCircuit base = padded ? pad(c, 1) : c;
    const std::size_t n = base.input_count();
    ApproxSearchResult res;
    res.power = boosting_exponent(kappa);
    const unsigned m = res.power;
    Integer lo = -(Integer(1) << n), hi = Integer(1) << n;
    while (lo < hi) {
        ApproxStep st;
        st.a = lo;
        st.power = m;
        const ScaledCircuit sc = shift(base, lo);
        st.scale = sc.scale_log2;
        st.query = circuit_power(sc.circuit, m);
        st.answer = oracle(st.query);
        if (st.answer < 0) throw VerificationError("search_delta_approx: negative oracle answer");
        // (2^s D)^m must lie in [v / kappa, kappa v]
        const Rational low_band = st.answer / kappa, high_band = st.answer * kappa;
        const Integer unit = Integer(1) << st.scale;
        auto value = [&](const Integer& d) { return Rational(ipow(unit * d, m)); };
        const Integer span = hi - lo;
        Integer l = 0, r = span + 1;  // smallest d with value >= low_band
        while (l < r) {
            const Integer mid = (l + r) / 2;
            if (value(mid) >= low_band) r = mid;
            else l = mid + 1;
        }
        const Integer d_min = l;
        l = -1;
        r = span;  // largest d with value <= high_band
        while (l < r) {
            const Integer mid = detail::ceil_div(l + r, 2);
            if (value(mid) <= high_band) l = mid;
            else r = mid - 1;
        }
        const Integer d_max = l;
        const Integer new_lo = detail::round_up_even(lo + d_min);
        const Integer new_hi = detail::round_down_even(lo + d_max);
        if (new_lo > new_hi)
            throw VerificationError("search_delta_approx: oracle answer " + to_string(st.answer) +
                                    " contradicts the bracket [" + lo.str() + ", " + hi.str() + "]");
        st.ratio = Rational(new_hi - new_lo) / Rational(span);
        st.lo = new_lo;
        st.hi = new_hi;
        if (st.ratio > Rational(3, 4))
            throw VerificationError("search_delta_approx: bracket shrank by " + to_string(st.ratio) + " > 3/4");
        lo = new_lo;
        hi = new_hi;
        res.steps.push_back(std::move(st));
    }
    res.delta = padded ? lo / 2 : lo;
    return res;
}

}  // namespace permhard
