#pragma once

// Gadget catalog over Q(alpha): the postselected CSIGN gadget V, the
// encoder E, the decoder D and the rotation R, plus the amplitude identities
// they are required to satisfy.

#include "permhard/optics/fock.hpp"
#include "permhard/qsim/gates.hpp"

#include <string>
#include <vector>

namespace permhard {

inline QAlpha qa_sqrt2() { return Radicals::sqrt2(); }
inline QAlpha qa_sqrt3() { return Radicals::sqrt3(); }

/// (1/3) sqrt(2/3), the per-CSIGN postselection amplitude.
inline QAlpha v_success_amplitude() { return qa_sqrt2() * Radicals::inv_sqrt3() * Rational(1, 3); }

inline QMatrix gadget_v() {
    const QAlpha k = Radicals::inv_sqrt2() * Rational(1, 3);
    const QAlpha r2 = qa_sqrt2();
    const QAlpha p = representation(Radical::SqrtThreePlusSqrt6);
    const QAlpha m = representation(Radical::SqrtThreeMinusSqrt6);
    const QAlpha two(2);
    const std::vector<std::vector<QAlpha>> rows = {
        {-r2, -two, two, two * r2},
        {two, -r2, -two * r2, two},
        {-(r2 * p), r2 * m, -p, m},
        {-(r2 * m), -(r2 * p), -m, -p},
    };
    QMatrix v = qmatrix(rows);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) v(i, j) = k * v(i, j);
    return v;
}

/// The encoder exactly as printed.
inline QMatrix gadget_e_printed() {
    const QAlpha k = Radicals::inv_sqrt6();
    const QAlpha r2 = qa_sqrt2(), r3 = qa_sqrt3();
    QMatrix e = qmatrix({{r2, -r2, r2}, {QAlpha(0), r3, r3}, {QAlpha(-2), QAlpha(-1), QAlpha(1)}});
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) e(i, j) = k * e(i, j);
    return e;
}

/// Encoder used by the compiler: the printed matrix negated. With rows of
/// U_{T,S} taken from the output state the printed sign gives
/// <0,2,1|E|1,1,1> = -1/sqrt3; negating all nine entries flips the sign of
/// every 3-photon amplitude and nothing else.
inline QMatrix gadget_e() {
    return gadget_e_printed().map([](const QAlpha& x) { return -x; });
}

inline QMatrix gadget_d() { return single_qubit_matrix(GateKind::H); }

inline QMatrix gadget_r() { return r_matrix(); }

struct AmplitudeIdentity {
    std::string gadget;
    FockState in;
    FockState out;
    QAlpha expected;
};

/// The listed amplitudes, as (gadget, |S>, <T|, value).
inline std::vector<AmplitudeIdentity> gadget_identities() {
    const QAlpha c = v_success_amplitude();
    const QAlpha zero(0);
    return {
        {"V", {0, 0, 1, 1}, {0, 0, 1, 1}, c},
        {"V", {0, 1, 1, 1}, {0, 1, 1, 1}, c},
        {"V", {1, 0, 1, 1}, {1, 0, 1, 1}, c},
        {"V", {1, 1, 1, 1}, {1, 1, 1, 1}, -c},
        {"V", {1, 0, 1, 1}, {0, 1, 1, 1}, zero},
        {"V", {0, 1, 1, 1}, {1, 0, 1, 1}, zero},
        {"V", {1, 1, 1, 1}, {2, 0, 1, 1}, zero},
        {"V", {1, 1, 1, 1}, {0, 2, 1, 1}, zero},
        {"E", {1, 1, 1}, {1, 1, 1}, zero},
        {"E", {1, 1, 1}, {2, 0, 1}, zero},
        {"E", {1, 1, 1}, {0, 2, 1}, Radicals::inv_sqrt3()},
        {"D", {0, 2}, {1, 1}, -Radicals::inv_sqrt2()},
    };
}

struct AmplitudeCheck {
    AmplitudeIdentity identity;
    QAlpha computed;
    bool pass = false;

    std::string label() const {
        const std::string t = identity.out.str();
        return "<" + t.substr(1, t.size() - 2) + "| " + identity.gadget + " " + identity.in.str();
    }
};

struct GadgetReport {
    std::vector<AmplitudeCheck> amplitudes;
    std::vector<std::pair<std::string, bool>> orthogonality;

    bool all_pass() const {
        for (const auto& a : amplitudes)
            if (!a.pass) return false;
        for (const auto& o : orthogonality)
            if (!o.second) return false;
        return true;
    }
    std::size_t failures() const {
        std::size_t f = 0;
        for (const auto& a : amplitudes) f += !a.pass;
        for (const auto& o : orthogonality) f += !o.second;
        return f;
    }
};

inline const QMatrix& gadget_by_name(const std::string& name) {
    static const QMatrix v = gadget_v(), e = gadget_e(), d = gadget_d();
    if (name == "V") return v;
    if (name == "E") return e;
    if (name == "D") return d;
    throw DomainError("unknown gadget '" + name + "'");
}

/// Recomputes every listed amplitude exactly and checks V, E, D, R are
/// orthogonal.
inline GadgetReport verify_gadgets() {
    GadgetReport report;
    for (const auto& id : gadget_identities()) {
        AmplitudeCheck chk{id, phi_amplitude(gadget_by_name(id.gadget), id.in, id.out), false};
        chk.pass = chk.computed == id.expected;
        report.amplitudes.push_back(std::move(chk));
    }
    report.orthogonality = {
        {"V", is_orthogonal(gadget_by_name("V"))},
        {"E", is_orthogonal(gadget_by_name("E"))},
        {"D", is_orthogonal(gadget_by_name("D"))},
        {"R", is_orthogonal(gadget_r())},
    };
    return report;
}

}  // namespace permhard
