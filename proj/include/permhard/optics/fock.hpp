#pragma once

// Fock states and the phi-transition formula
//   <T| phi(U) |S> = Per(U_{T,S}) / sqrt(prod s_i! t_i!),
// where U_{T,S} repeats row i of U t_i times and column j s_j times.

#include "permhard/algebra/qalpha.hpp"
#include "permhard/algebra/representations.hpp"
#include "permhard/optics/permanent.hpp"

#include <cmath>
#include <optional>
#include <utility>
#include <sstream>
#include <string>
#include <vector>

namespace permhard {

struct FockState {
    std::vector<unsigned> occupations;

    FockState() = default;
    FockState(std::initializer_list<unsigned> occ) : occupations(occ) {}
    explicit FockState(std::vector<unsigned> occ) : occupations(std::move(occ)) {}

    std::size_t modes() const noexcept { return occupations.size(); }
    unsigned photons() const {
        unsigned t = 0;
        for (unsigned s : occupations) t += s;
        return t;
    }
    unsigned max_occupation() const {
        unsigned m = 0;
        for (unsigned s : occupations) m = std::max(m, s);
        return m;
    }
    /// Mode index of every photon, in mode order.
    std::vector<std::size_t> photon_modes() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < occupations.size(); ++i) out.insert(out.end(), occupations[i], i);
        return out;
    }
    std::string str() const {
        std::ostringstream os;
        os << '|';
        for (std::size_t i = 0; i < occupations.size(); ++i) os << (i ? "," : "") << occupations[i];
        os << '>';
        return os.str();
    }
    friend bool operator==(const FockState&, const FockState&) = default;
    friend auto operator<=>(const FockState&, const FockState&) = default;
};

/// All states of `photons` photons in `modes` modes, in lexicographic order
/// with mode 0 most significant and larger occupations first.
inline std::vector<FockState> fock_basis(std::size_t modes, unsigned photons) {
    std::vector<FockState> out;
    std::vector<unsigned> cur(modes, 0);
    auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
        if (i + 1 == modes) {
            cur[i] = left;
            out.emplace_back(cur);
            return;
        }
        for (unsigned k = left + 1; k-- > 0;) {
            cur[i] = k;
            self(self, i + 1, left - k);
        }
    };
    if (modes == 0) {
        if (photons == 0) out.emplace_back();
        return out;
    }
    rec(rec, 0, photons);
    return out;
}

namespace detail {

/// Exponents (x, y) with prod s_i! t_i! = 2^x 3^y; nullopt if another prime
/// divides the product.
inline std::optional<std::pair<unsigned, unsigned>> factorial_exponents(const FockState& s, const FockState& t) {
    unsigned x = 0, y = 0;
    for (const auto* st : {&s, &t})
        for (unsigned k : st->occupations)
            for (unsigned i = 2; i <= k; ++i) {
                unsigned v = i;
                while (v % 2 == 0) v /= 2, ++x;
                while (v % 3 == 0) v /= 3, ++y;
                if (v != 1) return std::nullopt;
            }
    return std::make_pair(x, y);
}

/// Division by sqrt(2^x 3^y). Even exponents are handled by ring inverses
/// for every ring; odd ones need a ring with 1/sqrt2 and 1/sqrt3.
template <class R>
R normalize_amplitude(const R& per, unsigned x, unsigned y) {
    R out = per;
    R half_power = one_of(per);
    for (unsigned i = 0; i < x / 2; ++i) half_power = half_power * (one_of(per) + one_of(per));
    for (unsigned i = 0; i < y / 2; ++i) half_power = half_power * (one_of(per) + one_of(per) + one_of(per));
    if (!(half_power == one_of(per))) out = out * inverse_of(half_power);
    if (x % 2 == 0 && y % 2 == 0) return out;
    if constexpr (std::is_same_v<R, QAlpha>) {
        if (x % 2) out = out * Radicals::inv_sqrt2();
        if (y % 2) out = out * Radicals::inv_sqrt3();
        return out;
    } else if constexpr (std::is_floating_point_v<R>) {
        if (x % 2) out /= std::sqrt(2.0);
        if (y % 2) out /= std::sqrt(3.0);
        return out;
    } else {
        throw DomainError("phi_amplitude: normalization sqrt(2^" + std::to_string(x) + " 3^" + std::to_string(y) +
                          ") is not available in this ring");
    }
}

}  // namespace detail

inline constexpr unsigned kExactOccupationGuard = 3;

/// <T| phi(U) |S>. Exact rings accept occupations up to 3, whose
/// normalizations are products of 1/sqrt2 and 1/sqrt3; double accepts any.
template <class R>
R phi_amplitude(const Matrix<R>& u, const FockState& s, const FockState& t) {
    if (!u.is_square()) throw DomainError("phi_amplitude: network matrix is not square");
    if (s.modes() != u.rows() || t.modes() != u.rows())
        throw DomainError("phi_amplitude: state has " + std::to_string(s.modes()) + "/" + std::to_string(t.modes()) +
                          " modes, network has " + std::to_string(u.rows()));
    const R zero = zero_of(u(0, 0));
    if (s.photons() != t.photons()) return zero;
    if (s.photons() == 0) return one_of(zero);
    if constexpr (!std::is_floating_point_v<R>) {
        const unsigned occ = std::max(s.max_occupation(), t.max_occupation());
        if (occ > kExactOccupationGuard)
            throw GuardError("occupation", "mode occupation " + std::to_string(occ) + " > " +
                                               std::to_string(kExactOccupationGuard) + " in an exact ring");
    }
    const Matrix<R> sub = u.select(t.photon_modes(), s.photon_modes());
    const R per = permanent(sub);
    const auto ex = detail::factorial_exponents(s, t);
    if (!ex) {
        if constexpr (std::is_floating_point_v<R>) {
            double norm = 1.0;
            for (const auto* st : {&s, &t})
                for (unsigned k : st->occupations) norm *= std::tgamma(k + 1.0);
            return per / std::sqrt(norm);
        } else {
            throw DomainError("phi_amplitude: normalization not representable");
        }
    }
    return detail::normalize_amplitude(per, ex->first, ex->second);
}

/// Matrix of phi(U) on the fixed-photon-number sector, rows and columns in
/// fock_basis order: entry (T, S) = <T| phi(U) |S>.
template <class R>
Matrix<R> phi_matrix(const Matrix<R>& u, unsigned photons) {
    const auto basis = fock_basis(u.rows(), photons);
    Matrix<R> out(basis.size(), basis.size(), zero_of(u(0, 0)));
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) out(i, j) = phi_amplitude(u, basis[j], basis[i]);
    return out;
}

}  // namespace permhard
