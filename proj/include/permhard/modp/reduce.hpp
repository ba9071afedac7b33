#pragma once

// The homomorphism sigma: Q(alpha) -> F_p[x]/(g) for an irreducible factor
// g of f mod p, applied to certificates, and the mod-p pipeline.

#include "permhard/modp/split.hpp"
#include "permhard/optics/compile.hpp"

#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace permhard {

inline void check_reduction_prime(std::uint64_t p) {
    if (!is_prime(p)) throw DomainError("reduction: " + std::to_string(p) + " is not prime");
    if (p == 23)
        throw DomainError(
            "reduction: p = 23 divides representation denominators; it needs the alternative beta-based "
            "representation, which is not implemented");
    if (is_excluded_prime(p)) throw DomainError("reduction: p = " + std::to_string(p) + " divides representation denominators");
}

/// Image of x in F_p[x]/(g): coefficients reduced mod p, then the polynomial
/// reduced mod g.
inline ExtFieldElem sigma(const QAlpha& x, const std::shared_ptr<const ExtFieldSpec>& field) {
    const std::uint64_t p = field->p;
    const Integer den = x.denominator();
    if (mod_u64(den, p) == 0) throw DomainError("sigma: denominator " + den.str() + " is divisible by p = " + std::to_string(p));
    const PrimeFieldElem inv = PrimeFieldElem::from_residue(mod_u64(den, p), p).inverse();
    std::vector<std::uint64_t> c(QAlpha::kDegree);
    for (std::size_t i = 0; i < QAlpha::kDegree; ++i)
        c[i] = mulmod(mod_u64(x.numerators()[i], p), inv.residue(), p);
    return ExtFieldElem(field, PolyOverFp(std::move(c), p));
}

inline Matrix<ExtFieldElem> reduce_matrix(const QMatrix& m, const std::shared_ptr<const ExtFieldSpec>& field) {
    return m.map([&](const QAlpha& x) { return sigma(x, field); });
}

/// Field for an irreducible factor g of f mod p.
inline std::shared_ptr<const ExtFieldSpec> factor_field(std::uint64_t p, const PolyOverFp& g) {
    check_reduction_prime(p);
    if (g.modulus() != p) throw DomainError("factor_field: g is not over F_p");
    if (!(PolyOverFp::alpha_modulus(p) % g).is_zero()) throw DomainError("factor_field: g does not divide f mod p");
    return make_ext_field(g.monic());
}

inline ReductionCertificate<ExtFieldElem> reduce_certificate(const Certificate& cert, std::uint64_t p, const PolyOverFp& g) {
    const auto field = factor_field(p, g);
    ReductionCertificate<ExtFieldElem> out;
    out.network.matrix = reduce_matrix(cert.network.matrix, field);
    out.network.provenance = cert.network.provenance;
    out.n = cert.n;
    out.p = cert.p;
    out.gamma = cert.gamma;
    out.a = cert.a;
    out.b = cert.b;
    return out;
}

/// Permanent over F_p[x]/(g); a linear g goes through the word-size kernel.
inline ExtFieldElem permanent_ext(const Matrix<ExtFieldElem>& m) {
    if (m.rows() == 0) throw DomainError("permanent_ext: empty matrix");
    const auto field = m(0, 0).field();
    if (field->degree() == 1) {
        const auto base = m.map([](const ExtFieldElem& x) { return PrimeFieldElem::from_residue(*x.as_prime_field(), x.field()->p); });
        return ExtFieldElem::constant(field, permanent(base).residue());
    }
    return permanent(m);
}

struct ModPFactorRecord {
    std::uint64_t p = 0;
    PolyOverFp g;
    ExtFieldElem per;
    std::uint64_t delta_mod_p = 0;
    std::uint64_t expected = 0;
    bool orthogonal = false;
    bool ok = false;

    std::string line() const {
        std::ostringstream os;
        os << "p=" << p << " g=" << g.str() << " deg=" << g.degree() << " per=" << per.str()
           << " delta_mod_p=" << delta_mod_p << " ok=" << (ok ? "true" : "false");
        return os.str();
    }
};

struct ModPRecord {
    std::uint64_t p = 0;
    Integer delta;
    std::vector<ModPFactorRecord> factors;
    bool all_ok() const {
        if (factors.empty()) return false;
        for (const auto& f : factors)
            if (!f.ok) return false;
        return true;
    }
};

/// Reduces the certificate of c through every irreducible factor of f mod p
/// and compares Per(O) / 2^a 3^b with Delta_C mod p.
inline ModPRecord pipeline_mod_p(const BooleanCircuit& c, std::uint64_t p, const Certificate* precomputed = nullptr) {
    check_reduction_prime(p);
    ModPRecord rec;
    rec.p = p;
    rec.delta = delta_bruteforce(c);
    const Certificate cert = precomputed ? *precomputed : certify(c);
    Integer expected = rec.delta % p;
    if (expected < 0) expected += p;
    for (const auto& f : factor_f_mod_p(p)) {
        const auto red = reduce_certificate(cert, p, f.factor);
        ModPFactorRecord fr;
        fr.p = p;
        fr.g = f.factor;
        fr.orthogonal = is_orthogonal(red.network.matrix);
        fr.per = permanent_ext(red.network.matrix);
        fr.delta_mod_p = extract_delta(red, fr.per);
        fr.expected = expected.convert_to<std::uint64_t>();
        fr.ok = fr.orthogonal && fr.delta_mod_p == fr.expected;
        rec.factors.push_back(std::move(fr));
    }
    return rec;
}

}  // namespace permhard
