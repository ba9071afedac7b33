#pragma once

// The finite field F_p[x]/(g) for an irreducible g, plus a generic
// Tonelli-Shanks square root that works in any finite field of odd order.

#include "permhard/algebra/poly_fp.hpp"

#include <memory>
#include <optional>
#include <sstream>

namespace permhard {

/// Shared description of F_p[x]/(g).
struct ExtFieldSpec {
    std::uint64_t p;
    PolyOverFp g;  // monic irreducible

    std::size_t degree() const { return static_cast<std::size_t>(g.degree()); }
    Integer order() const { return boost::multiprecision::pow(Integer(p), static_cast<unsigned>(degree())); }
};

class ExtFieldElem {
public:
    ExtFieldElem() = default;
    ExtFieldElem(std::shared_ptr<const ExtFieldSpec> field, const PolyOverFp& value)
        : field_(std::move(field)), v_(value % field_->g) {}

    static ExtFieldElem constant(std::shared_ptr<const ExtFieldSpec> field, std::uint64_t c) {
        const std::uint64_t p = field->p;
        return {std::move(field), PolyOverFp::constant(c % p, p)};
    }

    const std::shared_ptr<const ExtFieldSpec>& field() const noexcept { return field_; }
    const PolyOverFp& poly() const noexcept { return v_; }
    bool is_zero() const noexcept { return v_.is_zero(); }

    /// Value as an element of F_p when it lies in the prime subfield.
    std::optional<std::uint64_t> as_prime_field() const {
        if (v_.degree() > 0) return std::nullopt;
        return v_.coeff(0);
    }

    friend ExtFieldElem operator+(const ExtFieldElem& a, const ExtFieldElem& b) { return a.with(a.v_ + b.v_); }
    friend ExtFieldElem operator-(const ExtFieldElem& a, const ExtFieldElem& b) { return a.with(a.v_ - b.v_); }
    ExtFieldElem operator-() const { return with(PolyOverFp({}, field_->p) - v_); }
    friend ExtFieldElem operator*(const ExtFieldElem& a, const ExtFieldElem& b) {
        return a.with((a.v_ * b.v_) % a.field_->g);
    }
    ExtFieldElem& operator+=(const ExtFieldElem& b) { return *this = *this + b; }
    ExtFieldElem& operator-=(const ExtFieldElem& b) { return *this = *this - b; }
    ExtFieldElem& operator*=(const ExtFieldElem& b) { return *this = *this * b; }
    friend bool operator==(const ExtFieldElem& a, const ExtFieldElem& b) { return a.v_ == b.v_; }

    ExtFieldElem pow(const Integer& e) const { return with(poly_powmod(v_, e, field_->g)); }
    ExtFieldElem inverse() const {
        if (is_zero()) throw DomainError("ExtFieldElem: inverse of zero");
        return pow(field_->order() - 2);
    }

    /// Coefficient list, constant term first, padded to the field degree.
    std::string str() const {
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < field_->degree(); ++i) os << (i ? "," : "") << v_.coeff(i);
        os << "]";
        return os.str();
    }

private:
    ExtFieldElem with(PolyOverFp v) const {
        ExtFieldElem out;
        out.field_ = field_;
        out.v_ = std::move(v);
        return out;
    }

    std::shared_ptr<const ExtFieldSpec> field_;
    PolyOverFp v_;
};

inline ExtFieldElem zero_of(const ExtFieldElem& x) { return ExtFieldElem::constant(x.field(), 0); }
inline ExtFieldElem one_of(const ExtFieldElem& x) { return ExtFieldElem::constant(x.field(), 1); }
inline ExtFieldElem inverse_of(const ExtFieldElem& x) { return x.inverse(); }
inline bool is_zero_value(const ExtFieldElem& x) { return x.is_zero(); }

inline std::shared_ptr<const ExtFieldSpec> make_ext_field(const PolyOverFp& g) {
    if (g.degree() < 1) throw DomainError("make_ext_field: modulus must have positive degree");
    return std::make_shared<const ExtFieldSpec>(ExtFieldSpec{g.modulus(), g.monic()});
}

/// Tonelli-Shanks in F_q for odd q. Returns nullopt for non-squares.
inline std::optional<ExtFieldElem> field_sqrt(const ExtFieldElem& a) {
    if (a.is_zero()) return a;
    const Integer q = a.field()->order();
    if (q % 2 == 0) throw DomainError("field_sqrt: characteristic 2");
    const ExtFieldElem one = one_of(a);
    if (!(a.pow((q - 1) / 2) == one)) return std::nullopt;
    Integer odd = q - 1;
    unsigned s = 0;
    while (odd % 2 == 0) {
        odd /= 2;
        ++s;
    }
    // Deterministic search for a non-square, enumerating polynomials in base p.
    ExtFieldElem z = one;
    const std::uint64_t p = a.field()->p;
    for (std::uint64_t k = 2;; ++k) {
        std::vector<std::uint64_t> c;
        for (std::uint64_t r = k; r; r /= p) c.push_back(r % p);
        z = ExtFieldElem(a.field(), PolyOverFp(c, p));
        if (z.is_zero()) continue;
        if (!(z.pow((q - 1) / 2) == one)) break;
    }
    unsigned m = s;
    ExtFieldElem c = z.pow(odd), t = a.pow(odd), r = a.pow((odd + 1) / 2);
    while (!(t == one)) {
        unsigned i = 0;
        ExtFieldElem tt = t;
        while (!(tt == one)) {
            tt = tt * tt;
            ++i;
        }
        ExtFieldElem b = c;
        for (unsigned k = 0; k + 1 < m - i; ++k) b = b * b;
        m = i;
        c = b * b;
        t = t * c;
        r = r * b;
    }
    return r;
}

}  // namespace permhard
