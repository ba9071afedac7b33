#pragma once

// The three-mode nonlinear sign gate NS1 (postselected on |1,1> in its two
// ancilla modes), the CSIGN assembly H . (NS1 x NS1) . H on two rail modes,
// and their images over F_p.

#include "permhard/algebra/prime_field.hpp"
#include "permhard/optics/fock.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace permhard {

/// gamma = (sqrt33 + 3) / 18, a root of 27 g^2 - 9 g - 2.
inline double ns1_gamma() { return (std::sqrt(33.0) + 3.0) / 18.0; }

/// The printed closed form, built from its seven radicals. Works for any
/// ring given the radical values.
template <class R>
struct Ns1Radicals {
    R gamma, sqrt6, r;  // r = sqrt(6 - 3 gamma)
    R minus, plus;      // sqrt(9 gamma -/+ r - 2)
    R s24;              // sqrt(24 - 45 gamma)
    R s2;               // sqrt(2 - 4 gamma)
};

template <class R>
Matrix<R> ns1_from_radicals(const Ns1Radicals<R>& x, const R& one) {
    auto c = [&](long v) {
        R out = zero_of(one);
        for (long i = 0; i < std::labs(v); ++i) out += one;
        return v < 0 ? -out : out;
    };
    const R a = -(x.sqrt6 * x.minus);
    const R b = -(x.sqrt6 * x.plus);
    const R d = -(c(3) * x.s2);
    Matrix<R> m = Matrix<R>::from_rows({
        {c(6) - c(18) * x.gamma, a, b},
        {a, c(9) * x.gamma + x.s24, d},
        {b, d, c(9) * x.gamma - x.s24},
    });
    const R sixth = inverse_of(c(6));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m(i, j) = m(i, j) * sixth;
    return m;
}

inline Matrix<double> ns1_float() {
    const double g = ns1_gamma();
    const double r = std::sqrt(6 - 3 * g);
    const Ns1Radicals<double> x{g,
                                std::sqrt(6.0),
                                r,
                                std::sqrt(9 * g - r - 2),
                                std::sqrt(9 * g + r - 2),
                                std::sqrt(24 - 45 * g),
                                std::sqrt(2 - 4 * g)};
    return ns1_from_radicals(x, 1.0);
}

/// The three postselected amplitudes <k,1,1| NS1 |k,1,1> for k = 0, 1, 2.
template <class R>
std::array<R, 3> ns1_amplitudes(const Matrix<R>& ns1) {
    return {phi_amplitude(ns1, FockState{0, 1, 1}, FockState{0, 1, 1}),
            phi_amplitude(ns1, FockState{1, 1, 1}, FockState{1, 1, 1}),
            phi_amplitude(ns1, FockState{2, 1, 1}, FockState{2, 1, 1})};
}

/// Eight-mode CSIGN assembly. Modes: (rail1_a, rail0_a, rail1_b, rail0_b,
/// anc_a1, anc_a2, anc_b1, anc_b2). H mixes the two rail-1 modes, an NS1
/// acts on each rail-1 mode with its own ancilla pair, and H mixes again.
template <class R>
Matrix<R> csign_network(const Matrix<R>& ns1, const R& inv_sqrt2) {
    const R one = one_of(inv_sqrt2);
    Matrix<R> h = Matrix<R>::identity(8, one);
    h(0, 0) = inv_sqrt2, h(0, 2) = inv_sqrt2, h(2, 0) = inv_sqrt2, h(2, 2) = -inv_sqrt2;
    Matrix<R> ns = Matrix<R>::identity(8, one);
    ns.embed(ns1, {0, 4, 5});
    ns.embed(ns1, {2, 6, 7});
    return h * ns * h;
}

/// Dual-rail basis state for logical (x, y) with both ancilla pairs at |1,1>.
inline FockState csign_state(unsigned x, unsigned y) { return {x, 1 - x, y, 1 - y, 1, 1, 1, 1}; }

/// Checks <x',y'| U |x,y> = gamma^2 (-1)^{xy} delta on all 16 pairs; returns
/// the largest deviation for doubles and 0/1 for exact rings.
template <class R>
double csign_deviation(const Matrix<R>& u, const R& gamma) {
    double worst = 0.0;
    for (unsigned in = 0; in < 4; ++in)
        for (unsigned out = 0; out < 4; ++out) {
            const R amp = phi_amplitude(u, csign_state(in >> 1, in & 1), csign_state(out >> 1, out & 1));
            R expected = zero_of(gamma);
            if (in == out) expected = (in == 3) ? -(gamma * gamma) : gamma * gamma;
            if constexpr (std::is_floating_point_v<R>)
                worst = std::max(worst, std::abs(amp - expected));
            else if (!(amp == expected))
                worst = 1.0;
        }
    return worst;
}

struct Ns1FloatReport {
    double gamma = 0;
    double orthogonality_deviation = 0;
    std::array<double, 3> amplitudes{};
    double amplitude_deviation = 0;
    double csign_deviation = 0;
    bool pass(double tol = 1e-12) const {
        return orthogonality_deviation < tol && amplitude_deviation < tol && csign_deviation < tol;
    }
};

inline Ns1FloatReport verify_ns1_float() {
    Ns1FloatReport rep;
    rep.gamma = ns1_gamma();
    const auto m = ns1_float();
    rep.orthogonality_deviation = max_abs_deviation_from_identity(m * m.transpose());
    rep.amplitudes = ns1_amplitudes(m);
    const std::array<double, 3> want{rep.gamma, rep.gamma, -rep.gamma};
    for (std::size_t i = 0; i < 3; ++i) rep.amplitude_deviation = std::max(rep.amplitude_deviation, std::abs(rep.amplitudes[i] - want[i]));
    rep.csign_deviation = csign_deviation(csign_network(m, 1.0 / std::sqrt(2.0)), rep.gamma);
    return rep;
}

// --- F_p ------------------------------------------------------------------

struct RadicalStep {
    std::string name;  // radicand description
    std::uint64_t radicand = 0;
    std::optional<std::uint64_t> root;
};

struct Ns1ModPAttempt {
    std::uint64_t sqrt33 = 0;
    std::uint64_t gamma = 0;
    std::vector<RadicalStep> radicals;
    bool all_exist = false;
    std::size_t valid_sign_choices = 0;  // of the 2^6 sign assignments
};

struct Ns1ModPGate {
    Matrix<PrimeFieldElem> matrix;
    PrimeFieldElem gamma;
    bool orthogonal = false;
    bool amplitudes_exact = false;
    bool csign_exact = false;
    bool pass() const { return orthogonal && amplitudes_exact && csign_exact; }
};

struct Ns1ModPReport {
    std::uint64_t p = 0;
    std::vector<Ns1ModPAttempt> attempts;        // one per root of 33
    std::optional<Ns1ModPGate> printed;          // printed form, first valid sign choice
    std::size_t search_solutions = 0;            // exhaustive search count
    std::vector<std::uint64_t> search_gammas;    // distinct gamma values found
    std::optional<Ns1ModPGate> searched;         // first solution found by search
    bool sqrt2_exists = false;

    const Ns1ModPGate* best() const {
        if (printed) return &*printed;
        if (searched) return &*searched;
        return nullptr;
    }
    bool pass() const {
        const auto* g = best();
        return g && g->pass();
    }
};

namespace detail {

inline bool ns1_identities_hold(const Matrix<PrimeFieldElem>& m, const PrimeFieldElem& gamma) {
    if (gamma.is_zero()) return false;
    const auto a = ns1_amplitudes(m);
    return a[0] == gamma && a[1] == gamma && a[2] == -gamma;
}

inline Ns1ModPGate finish_gate(Matrix<PrimeFieldElem> m, PrimeFieldElem gamma, const std::optional<PrimeFieldElem>& inv_sqrt2) {
    Ns1ModPGate g{std::move(m), gamma};
    g.orthogonal = is_orthogonal(g.matrix);
    g.amplitudes_exact = ns1_identities_hold(g.matrix, gamma);
    if (inv_sqrt2) g.csign_exact = csign_deviation(csign_network(g.matrix, *inv_sqrt2), gamma) == 0.0;
    return g;
}

}  // namespace detail

inline constexpr std::uint64_t kNs1SearchGuard = 400;

/// Every orthogonal 3x3 M over F_p with gamma = M11 M22 + M12 M21 nonzero and
/// the three NS1 identities, found by exhaustive search over orthonormal
/// first rows; the third row is +-(r0 x r1). Calls `visit(M, gamma)`.
template <class F>
void search_ns1_mod_p(std::uint64_t p, F&& visit) {
    if (p > kNs1SearchGuard) throw GuardError("ns1-search", "p = " + std::to_string(p) + " > " + std::to_string(kNs1SearchGuard));
    using V = std::array<std::int64_t, 3>;
    const auto P = static_cast<std::int64_t>(p);
    auto md = [P](std::int64_t v) { v %= P; return v < 0 ? v + P : v; };
    std::vector<std::vector<std::int64_t>> roots(p);
    for (std::int64_t c = 0; c < P; ++c) roots[static_cast<std::size_t>(c * c % P)].push_back(c);
    std::vector<V> unit;
    for (std::int64_t a = 0; a < P; ++a)
        for (std::int64_t b = 0; b < P; ++b)
            for (std::int64_t c : roots[static_cast<std::size_t>(md(1 - a * a - b * b))]) unit.push_back({a, b, c});
    auto dot = [&](const V& x, const V& y) { return md(x[0] * y[0] + x[1] * y[1] + x[2] * y[2]); };
    for (const V& r0 : unit)
        for (const V& r1 : unit) {
            if (dot(r0, r1)) continue;
            const V cross{md(r0[1] * r1[2] - r0[2] * r1[1]), md(r0[2] * r1[0] - r0[0] * r1[2]),
                          md(r0[0] * r1[1] - r0[1] * r1[0])};
            for (int sign : {1, -1}) {
                const V r2{md(sign * cross[0]), md(sign * cross[1]), md(sign * cross[2])};
                const std::int64_t g = md(r1[1] * r2[2] + r1[2] * r2[1]);
                if (!g) continue;
                Matrix<PrimeFieldElem> m(3, 3, PrimeFieldElem(0, p));
                const std::array<V, 3> rows{r0, r1, r2};
                for (std::size_t i = 0; i < 3; ++i)
                    for (std::size_t j = 0; j < 3; ++j) m(i, j) = PrimeFieldElem(rows[i][j], p);
                const PrimeFieldElem gamma(g, p);
                if (detail::ns1_identities_hold(m, gamma)) visit(m, gamma);
            }
        }
}

/// Mod-p NS1: first the printed closed form through nested square roots
/// (gamma from either root of 33, then every sign assignment of the six
/// further radicals); then, when p is small, an exhaustive search.
inline Ns1ModPReport verify_ns1_mod_p(std::uint64_t p, bool allow_search = true) {
    if (p % 2 == 0 || !is_prime(p)) throw DomainError("verify_ns1: p must be an odd prime");
    if (p == 3) throw DomainError("verify_ns1: 6 is not invertible mod 3");
    Ns1ModPReport rep;
    rep.p = p;
    auto F = [p](std::int64_t v) { return PrimeFieldElem(v, p); };
    const auto s2 = sqrt_mod_p(F(2));
    rep.sqrt2_exists = s2.has_value();
    const std::optional<PrimeFieldElem> inv_s2 = s2 ? std::optional(s2->inverse()) : std::nullopt;
    const auto s33 = sqrt_mod_p(F(33));
    if (s33) {
        std::vector<PrimeFieldElem> roots33{*s33};
        if (!(*s33 == -*s33)) roots33.push_back(-*s33);
        for (const auto& root : roots33) {
            Ns1ModPAttempt at;
            at.sqrt33 = root.residue();
            const PrimeFieldElem gamma = (root + F(3)) * F(18).inverse();
            at.gamma = gamma.residue();
            auto step = [&](const std::string& name, const PrimeFieldElem& v) {
                const auto r = sqrt_mod_p(v);
                at.radicals.push_back({name, v.residue(), r ? std::optional(r->residue()) : std::nullopt});
                return r;
            };
            const auto sq6 = step("6", F(6));
            const auto r = step("6-3g", F(6) - F(3) * gamma);
            std::optional<PrimeFieldElem> mi, pl;
            if (r) {
                mi = step("9g-sqrt(6-3g)-2", F(9) * gamma - *r - F(2));
                pl = step("9g+sqrt(6-3g)-2", F(9) * gamma + *r - F(2));
            }
            const auto s24 = step("24-45g", F(24) - F(45) * gamma);
            const auto sq2 = step("2-4g", F(2) - F(4) * gamma);
            at.all_exist = sq6 && r && mi && pl && s24 && sq2;
            if (at.all_exist) {
                for (unsigned mask = 0; mask < 64; ++mask) {
                    auto sg = [&](const PrimeFieldElem& v, unsigned bit) { return (mask >> bit) & 1u ? -v : v; };
                    const PrimeFieldElem rr = sg(*r, 0);
                    const auto m2 = sqrt_mod_p(F(9) * gamma - rr - F(2));
                    const auto p2 = sqrt_mod_p(F(9) * gamma + rr - F(2));
                    if (!m2 || !p2) continue;
                    const Ns1Radicals<PrimeFieldElem> x{gamma, sg(*sq6, 1), rr, sg(*m2, 2), sg(*p2, 3), sg(*s24, 4), sg(*sq2, 5)};
                    auto g = detail::finish_gate(ns1_from_radicals(x, F(1)), gamma, inv_s2);
                    if (g.orthogonal && g.amplitudes_exact) {
                        ++at.valid_sign_choices;
                        if (!rep.printed) rep.printed = std::move(g);
                    }
                }
            }
            rep.attempts.push_back(std::move(at));
        }
    }
    if (!rep.printed && allow_search && p <= kNs1SearchGuard) {
        search_ns1_mod_p(p, [&](const Matrix<PrimeFieldElem>& m, const PrimeFieldElem& gamma) {
            ++rep.search_solutions;
            if (std::find(rep.search_gammas.begin(), rep.search_gammas.end(), gamma.residue()) == rep.search_gammas.end())
                rep.search_gammas.push_back(gamma.residue());
            if (!rep.searched) rep.searched = detail::finish_gate(m, gamma, inv_s2);
        });
        std::sort(rep.search_gammas.begin(), rep.search_gammas.end());
    }
    return rep;
}

}  // namespace permhard
