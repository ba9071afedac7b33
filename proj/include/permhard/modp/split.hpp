#pragma once

// How f factors modulo p: split-prime classification and scans.

#include "permhard/algebra/ext_field.hpp"
#include "permhard/algebra/poly_fp.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace permhard {

enum class PrimeClass { SplitComplete, Quadratic, Quartic, Ramified, Excluded, Mixed };

inline std::string prime_class_name(PrimeClass c) {
    switch (c) {
        case PrimeClass::SplitComplete: return "split-complete";
        case PrimeClass::Quadratic: return "quadratic";
        case PrimeClass::Quartic: return "quartic";
        case PrimeClass::Ramified: return "ramified";
        case PrimeClass::Excluded: return "excluded";
        case PrimeClass::Mixed: return "mixed";
    }
    return "?";
}

/// Primes dividing some representation denominator of the field elements.
inline bool is_excluded_prime(std::uint64_t p) { return p == 2 || p == 3 || p == 23; }

/// The index [O_K : Z[alpha]] = 2^75 * 23^2, kept as a cross-check: any
/// ramified prime outside {2, 3, 23} would contradict it.
inline constexpr unsigned kIndexPowerOfTwo = 75;
inline constexpr unsigned kIndexPowerOf23 = 2;

struct SplitReport {
    std::uint64_t p = 0;
    std::vector<long> factor_degrees;  // with multiplicity, ascending
    bool distinct = true;
    PrimeClass classification = PrimeClass::Mixed;
    std::vector<PolyFactor> factors;

    std::string str() const {
        std::string out = "p=" + std::to_string(p) + " class=" + prime_class_name(classification) + " degrees=";
        for (std::size_t i = 0; i < factor_degrees.size(); ++i) out += (i ? "," : "") + std::to_string(factor_degrees[i]);
        return out;
    }
};

inline SplitReport classify_prime(std::uint64_t p) {
    if (!is_prime(p)) throw DomainError("classify_prime: " + std::to_string(p) + " is not prime");
    SplitReport rep;
    rep.p = p;
    rep.factors = factor_f_mod_p(p);
    for (const auto& f : rep.factors) {
        if (f.multiplicity > 1) rep.distinct = false;
        for (unsigned k = 0; k < f.multiplicity; ++k) rep.factor_degrees.push_back(f.factor.degree());
    }
    std::sort(rep.factor_degrees.begin(), rep.factor_degrees.end());
    if (is_excluded_prime(p)) {
        rep.classification = PrimeClass::Excluded;
    } else if (!rep.distinct) {
        rep.classification = PrimeClass::Ramified;
    } else if (rep.factor_degrees.front() != rep.factor_degrees.back()) {
        rep.classification = PrimeClass::Mixed;
    } else {
        switch (rep.factor_degrees.front()) {
            case 1: rep.classification = PrimeClass::SplitComplete; break;
            case 2: rep.classification = PrimeClass::Quadratic; break;
            case 4: rep.classification = PrimeClass::Quartic; break;
            default: rep.classification = PrimeClass::Mixed;
        }
    }
    return rep;
}

inline constexpr std::uint64_t kSplitScanGuard = 1000000;

/// Split-complete primes below n, ascending. Uses x^p = x mod f, which holds
/// exactly when f has 16 distinct roots in F_p.
inline std::vector<std::uint64_t> split_primes_below(std::uint64_t n) {
    if (n > kSplitScanGuard)
        throw GuardError("split-scan", "N = " + std::to_string(n) + " > " + std::to_string(kSplitScanGuard));
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 5; p < n; p += 2)
        if (is_prime(p) && !is_excluded_prime(p) && splits_completely(p)) out.push_back(p);
    return out;
}

inline std::size_t prime_count_below(std::uint64_t n) {
    std::size_t c = 0;
    for (std::uint64_t k = 2; k < n; ++k) c += is_prime(k);
    return c;
}

struct DensityCheck {
    std::size_t split = 0;
    std::size_t primes = 0;
    double expected = 0;
    double sigma = 0;
    double z() const { return sigma > 0 ? (static_cast<double>(split) - expected) / sigma : 0.0; }
    bool within(double k = 3.0) const { return std::abs(z()) <= k; }
};

/// Split-prime count below n against the binomial model with rate 1/16.
inline DensityCheck split_density(std::uint64_t n) {
    DensityCheck d;
    d.split = split_primes_below(n).size();
    d.primes = prime_count_below(n);
    const double q = 1.0 / 16.0;
    d.expected = q * static_cast<double>(d.primes);
    d.sigma = std::sqrt(static_cast<double>(d.primes) * q * (1 - q));
    return d;
}

struct SqrtWitness {
    std::uint64_t p = 0;
    std::uint64_t nonresidue = 0;  // F_{p^2} = F_p[x]/(x^2 - nonresidue)
    bool sqrt2 = false;
    bool sqrt6 = false;
    std::string root2, root6;
};

/// sqrt(2) and sqrt(6) inside F_{p^2}, each checked by squaring.
inline SqrtWitness sqrt_witness_p2(std::uint64_t p) {
    if (p < 5 || !is_prime(p)) throw DomainError("sqrt_witness_p2: need a prime p >= 5");
    SqrtWitness w;
    w.p = p;
    std::uint64_t nr = 2;
    while (euler_criterion(PrimeFieldElem(static_cast<std::int64_t>(nr), p)) == 1) ++nr;
    w.nonresidue = nr;
    const auto field = make_ext_field(PolyOverFp({p - nr, 0, 1}, p));
    for (std::uint64_t v : {2u, 6u}) {
        const auto x = ExtFieldElem::constant(field, v);
        const auto r = field_sqrt(x);
        const bool ok = r && (*r * *r) == x;
        (v == 2 ? w.sqrt2 : w.sqrt6) = ok;
        (v == 2 ? w.root2 : w.root6) = r ? r->str() : "none";
    }
    return w;
}

}  // namespace permhard
