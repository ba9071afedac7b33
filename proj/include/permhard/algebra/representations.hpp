#pragma once

// Power-basis representations of the radicals that generate every gadget
// entry, derived independently through the tower Q(s, t) with
// s = sqrt(2 + sqrt 2) and t = sqrt(3 + sqrt 6), so that alpha = s + t.

#include "permhard/algebra/linear_solve.hpp"
#include "permhard/algebra/qalpha.hpp"
#include "permhard/algebra/real_embedding.hpp"

#include <array>
#include <cmath>
#include <string>
#include <vector>

namespace permhard {

enum class Radical { InvSqrt2, InvSqrt3, SqrtTwoPlusSqrt2, SqrtTwoMinusSqrt2, SqrtThreePlusSqrt6, SqrtThreeMinusSqrt6 };

inline constexpr std::array<Radical, 6> kAllRadicals = {
    Radical::InvSqrt2,          Radical::InvSqrt3,           Radical::SqrtTwoPlusSqrt2,
    Radical::SqrtTwoMinusSqrt2, Radical::SqrtThreePlusSqrt6, Radical::SqrtThreeMinusSqrt6};

inline std::string radical_name(Radical r) {
    switch (r) {
        case Radical::InvSqrt2: return "1/sqrt(2)";
        case Radical::InvSqrt3: return "1/sqrt(3)";
        case Radical::SqrtTwoPlusSqrt2: return "sqrt(2+sqrt(2))";
        case Radical::SqrtTwoMinusSqrt2: return "sqrt(2-sqrt(2))";
        case Radical::SqrtThreePlusSqrt6: return "sqrt(3+sqrt(6))";
        case Radical::SqrtThreeMinusSqrt6: return "sqrt(3-sqrt(6))";
    }
    return "?";
}

/// Independent floating-point value of each radical, for numeric cross-checks.
inline double radical_value(Radical r) {
    switch (r) {
        case Radical::InvSqrt2: return 1.0 / std::sqrt(2.0);
        case Radical::InvSqrt3: return 1.0 / std::sqrt(3.0);
        case Radical::SqrtTwoPlusSqrt2: return std::sqrt(2.0 + std::sqrt(2.0));
        case Radical::SqrtTwoMinusSqrt2: return std::sqrt(2.0 - std::sqrt(2.0));
        case Radical::SqrtThreePlusSqrt6: return std::sqrt(3.0 + std::sqrt(6.0));
        case Radical::SqrtThreeMinusSqrt6: return std::sqrt(3.0 - std::sqrt(6.0));
    }
    return 0.0;
}

/// Exact defining relation: q^2 = 1/2, q^2 = 1/3, or (q^2 - k)^2 = 2k - 2 for
/// the nested radicals sqrt(k +- sqrt(2k - 2)).
inline bool satisfies_relation(Radical r, const QAlpha& q) {
    const QAlpha sq = q * q;
    switch (r) {
        case Radical::InvSqrt2: return sq == QAlpha(Rational(1, 2));
        case Radical::InvSqrt3: return sq == QAlpha(Rational(1, 3));
        case Radical::SqrtTwoPlusSqrt2:
        case Radical::SqrtTwoMinusSqrt2: {
            const QAlpha u = sq - QAlpha(2);
            return u * u == QAlpha(2);
        }
        case Radical::SqrtThreePlusSqrt6:
        case Radical::SqrtThreeMinusSqrt6: {
            const QAlpha u = sq - QAlpha(3);
            return u * u == QAlpha(6);
        }
    }
    return false;
}

/// Relation holds exactly and the real embedding matches the intended branch.
inline bool is_valid_representation(Radical r, const QAlpha& q) {
    return satisfies_relation(r, q) && std::abs(to_double(q) - radical_value(r)) < 1e-9;
}

namespace detail {

// Element of Q(s, t) as coefficients of s^i t^j, i, j < 4.
using Tower = std::array<std::array<Rational, 4>, 4>;

inline Tower tower_mul(const Tower& x, const Tower& y) {
    std::array<std::array<Rational, 7>, 7> w{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (x[i][j] == 0) continue;
            for (int k = 0; k < 4; ++k)
                for (int l = 0; l < 4; ++l)
                    if (y[k][l] != 0) w[i + k][j + l] += x[i][j] * y[k][l];
        }
    // s^4 = 4 s^2 - 2 and t^4 = 6 t^2 - 3
    for (int i = 6; i >= 4; --i)
        for (int j = 0; j < 7; ++j) {
            if (w[i][j] == 0) continue;
            w[i - 2][j] += 4 * w[i][j];
            w[i - 4][j] -= 2 * w[i][j];
            w[i][j] = 0;
        }
    for (int j = 6; j >= 4; --j)
        for (int i = 0; i < 4; ++i) {
            if (w[i][j] == 0) continue;
            w[i][j - 2] += 6 * w[i][j];
            w[i][j - 4] -= 3 * w[i][j];
            w[i][j] = 0;
        }
    Tower out{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out[i][j] = w[i][j];
    return out;
}

inline Tower tower_term(int i, int j, const Rational& c) {
    Tower out{};
    out[i][j] = c;
    return out;
}

inline Tower tower_add(Tower x, const Tower& y) {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) x[i][j] += y[i][j];
    return x;
}

inline Tower tower_target(Radical r) {
    const Tower sqrt2 = tower_add(tower_term(2, 0, 1), tower_term(0, 0, -2));          // s^2 - 2
    const Tower sqrt6 = tower_add(tower_term(0, 2, 1), tower_term(0, 0, -3));          // t^2 - 3
    const Tower inv_s = tower_add(tower_term(1, 0, 2), tower_term(3, 0, Rational(-1, 2)));  // (4s - s^3)/2
    const Tower inv_t = tower_add(tower_term(0, 1, 2), tower_term(0, 3, Rational(-1, 3)));  // (6t - t^3)/3
    const Tower half = tower_term(0, 0, Rational(1, 2));
    const Tower sqrt3 = tower_mul(half, tower_mul(sqrt6, sqrt2));
    switch (r) {
        case Radical::InvSqrt2: return tower_mul(half, sqrt2);
        case Radical::InvSqrt3: return tower_mul(tower_term(0, 0, Rational(1, 3)), sqrt3);
        case Radical::SqrtTwoPlusSqrt2: return tower_term(1, 0, 1);
        case Radical::SqrtTwoMinusSqrt2: return tower_mul(sqrt2, inv_s);
        case Radical::SqrtThreePlusSqrt6: return tower_term(0, 1, 1);
        case Radical::SqrtThreeMinusSqrt6: return tower_mul(sqrt3, inv_t);
    }
    return {};
}

}  // namespace detail

/// Solves for the power-basis coordinates of the radical and verifies the
/// result exactly. Throws VerificationError if the candidate is wrong.
inline QAlpha derive_representation(Radical r) {
    using detail::Tower;
    const Tower alpha = detail::tower_add(detail::tower_term(1, 0, 1), detail::tower_term(0, 1, 1));
    RationalRows system(16, std::vector<Rational>(16));
    Tower power = detail::tower_term(0, 0, 1);
    for (std::size_t k = 0; k < 16; ++k) {
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) system[4 * i + j][k] = power[i][j];
        power = detail::tower_mul(power, alpha);
    }
    const Tower target = detail::tower_target(r);
    std::vector<Rational> rhs(16);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) rhs[4 * i + j] = target[i][j];
    const QAlpha q = QAlpha::from_coefficients(solve_rational(std::move(system), std::move(rhs)));
    if (!is_valid_representation(r, q))
        throw VerificationError("derive_representation: candidate for " + radical_name(r) + " failed verification");
    return q;
}

/// Cached derived representations; the library's source of truth.
inline const QAlpha& representation(Radical r) {
    static const std::array<QAlpha, 6> table = [] {
        std::array<QAlpha, 6> out;
        for (std::size_t i = 0; i < kAllRadicals.size(); ++i) out[i] = derive_representation(kAllRadicals[i]);
        return out;
    }();
    return table[static_cast<std::size_t>(r)];
}

/// Frequently used constants built from the representations.
struct Radicals {
    static const QAlpha& inv_sqrt2() { return representation(Radical::InvSqrt2); }
    static const QAlpha& inv_sqrt3() { return representation(Radical::InvSqrt3); }
    static QAlpha sqrt2() { return inv_sqrt2() * Rational(2); }
    static QAlpha sqrt3() { return inv_sqrt3() * Rational(3); }
    static QAlpha inv_sqrt6() { return inv_sqrt2() * inv_sqrt3(); }
};

/// A polynomial printed as (1/den) * sum coeffs[i] alpha^i.
struct PrintedPolynomial {
    std::string label;
    long long denominator;
    std::vector<long long> coeffs;  // constant term first

    QAlpha value() const { return QAlpha::from_integer_poly(coeffs, Integer(denominator)); }
};

/// Printed entry representations, as fixtures to be checked (not trusted).
inline std::vector<std::pair<Radical, PrintedPolynomial>> printed_representations() {
    const std::vector<long long> inv_sqrt = {-8379, 0, 95207, 0, -115791, 0, 51555, 0, -10561, 0, 1077, 0, -53, 0, 1};
    return {
        {Radical::InvSqrt2, {"1/sqrt(2)", 11776, inv_sqrt}},
        {Radical::InvSqrt3, {"1/sqrt(3)", 11776, inv_sqrt}},
        {Radical::SqrtTwoPlusSqrt2,
         {"sqrt(2+sqrt(2))", 5888,
          {0, 193302, 0, -1357287, 0, 2209176, 0, -1470141, 0, 464494, 0, -70785, 0, 4932, 0, -123}}},
        {Radical::SqrtTwoMinusSqrt2,
         {"sqrt(2-sqrt(2))", 5888,
          {0, -466411, 0, 2799098, 0, -4270353, 0, 2733428, 0, -841629, 0, 126234, 0, -8711, 0, 216}}},
        {Radical::SqrtThreePlusSqrt6,
         {"sqrt(3+sqrt(6))", 5888,
          {0, -187414, 0, 1357287, 0, -2209176, 0, 1470141, 0, -464494, 0, 70785, 0, -4932, 0, 123}}},
        {Radical::SqrtThreeMinusSqrt6,
         {"sqrt(3-sqrt(6))", 256,
          {0, -25624, 0, 161671, 0, -256518, 0, 171665, 0, -55084, 0, 8505, 0, -598, 0, 15}}},
    };
}

struct RepresentationCheck {
    std::string label;
    bool relation_holds = false;   // exact defining relation
    bool value_matches = false;    // embeds to the intended real branch
    bool equals_derived = false;   // identical to the derived representation
    bool flagged() const { return !(relation_holds && value_matches); }
};

inline std::vector<RepresentationCheck> check_printed_representations() {
    std::vector<RepresentationCheck> out;
    for (const auto& [r, poly] : printed_representations()) {
        const QAlpha q = poly.value();
        RepresentationCheck c;
        c.label = poly.label;
        c.relation_holds = satisfies_relation(r, q);
        c.value_matches = std::abs(to_double(q) - radical_value(r)) < 1e-9;
        c.equals_derived = q == representation(r);
        out.push_back(c);
    }
    return out;
}

inline constexpr long long kDenominatorBound = 35328;  // 2^9 * 3 * 23

inline bool denominator_divides_bound(const QAlpha& q) { return Integer(kDenominatorBound) % q.denominator() == 0; }

/// True when every prime divisor of the denominator lies in {2, 3, 23}.
inline bool denominator_is_smooth(const QAlpha& q) {
    Integer d = q.denominator();
    for (int p : {2, 3, 23})
        while (d % p == 0) d /= p;
    return d == 1;
}

/// f evaluated at an element of Q(alpha).
inline QAlpha eval_modulus_at(const QAlpha& x) {
    QAlpha acc;
    for (std::size_t k = kAlphaModulus.size(); k-- > 0;) acc = acc * x + QAlpha(static_cast<long>(kAlphaModulus[k]));
    return acc;
}

struct RootRow {
    double listed = 0.0;
    PrintedPolynomial poly;
    bool is_root = false;
    double value = 0.0;
    bool value_matches = false;
    bool passed() const { return is_root && value_matches; }
};

inline std::vector<PrintedPolynomial> printed_root_table() {
    return {
        {"0.0234", 5888, {0, 122941, 0, -919335, 0, 1629561, 0, -1214867, 0, 425303, 0, -69381, 0, 5043, 0, -129}},
        {"0.4866", 2944, {0, -190358, 0, 1357287, 0, -2209176, 0, 1470141, 0, -464494, 0, 70785, 0, -4932, 0, 123}},
        {"1.1057", 2944, {0, 391327, 0, -2537860, 0, 4054545, 0, -2709218, 0, 865713, 0, -133200, 0, 9343, 0, -234}},
        {"1.5073", 5888,
         {0, -1055763, 0, 6517531, 0, -10170267, 0, 6681723, 0, -2108561, 0, 321849, 0, -22465, 0, 561}},
        {"1.5690", 5888, {0, 278997, 0, -1441811, 0, 2061177, 0, -1263287, 0, 377135, 0, -55449, 0, 3779, 0, -93}},
        {"2.5897", 2944, {0, -198025, 0, 1180573, 0, -1845369, 0, 1239077, 0, -401219, 0, 62415, 0, -4411, 0, 111}},
        {"3.0997", 5888,
         {0, -653825, 0, 4156385, 0, -6479529, 0, 4203569, 0, -1306123, 0, 197019, 0, -13643, 0, 339}},
        {"4.1821", 1, {0, 1}},
    };
}

/// Checks each positive-root polynomial: f(r(alpha)) = 0 exactly and the
/// embedding agrees with the listed value to three decimals.
inline std::vector<RootRow> verify_root_table() {
    std::vector<RootRow> rows;
    for (auto& poly : printed_root_table()) {
        RootRow row;
        row.listed = std::stod(poly.label);
        const QAlpha r = poly.value();
        row.is_root = eval_modulus_at(r).is_zero();
        row.value = to_double(r);
        row.value_matches = std::abs(row.value - row.listed) < 5e-4;
        row.poly = std::move(poly);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace permhard
