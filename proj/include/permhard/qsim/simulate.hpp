#pragma once

// Exact statevector simulation over Q(alpha). Qubit 0 is the most
// significant bit of a basis index; basis strings read q0 q1 ... .

#include "permhard/qsim/gates.hpp"

#include <string>
#include <vector>

namespace permhard {

inline constexpr std::size_t kStatevectorGuard = 14;
inline constexpr std::size_t kUnitaryGuard = 6;

using StateVector = std::vector<QAlpha>;

inline std::size_t parse_basis(const std::string& bits, std::size_t qubits) {
    if (bits.size() != qubits)
        throw DomainError("basis string '" + bits + "' has length " + std::to_string(bits.size()) + ", expected " +
                          std::to_string(qubits));
    std::size_t index = 0;
    for (char ch : bits) {
        if (ch != '0' && ch != '1') throw DomainError("basis string must contain only 0 and 1");
        index = (index << 1u) | static_cast<std::size_t>(ch - '0');
    }
    return index;
}

inline std::string basis_string(std::size_t index, std::size_t qubits) {
    std::string out(qubits, '0');
    for (std::size_t k = 0; k < qubits; ++k)
        if ((index >> (qubits - 1 - k)) & 1u) out[k] = '1';
    return out;
}

inline void apply_gate(StateVector& psi, std::size_t qubits, const QubitGate& g) {
    auto mask = [&](std::size_t q) { return std::size_t{1} << (qubits - 1 - q); };
    const std::size_t dim = psi.size();
    switch (g.kind) {
        case GateKind::X: {
            const std::size_t m = mask(g.q[0]);
            for (std::size_t i = 0; i < dim; ++i)
                if (!(i & m)) std::swap(psi[i], psi[i | m]);
            return;
        }
        case GateKind::Z: {
            const std::size_t m = mask(g.q[0]);
            for (std::size_t i = 0; i < dim; ++i)
                if ((i & m) && !psi[i].is_zero()) psi[i] = -psi[i];
            return;
        }
        case GateKind::CNOT: {
            const std::size_t c = mask(g.q[0]), t = mask(g.q[1]);
            for (std::size_t i = 0; i < dim; ++i)
                if ((i & c) && !(i & t)) std::swap(psi[i], psi[i | t]);
            return;
        }
        case GateKind::TOFFOLI: {
            const std::size_t c1 = mask(g.q[0]), c2 = mask(g.q[1]), t = mask(g.q[2]);
            for (std::size_t i = 0; i < dim; ++i)
                if ((i & c1) && (i & c2) && !(i & t)) std::swap(psi[i], psi[i | t]);
            return;
        }
        case GateKind::CSIGN: {
            const std::size_t a = mask(g.q[0]), b = mask(g.q[1]);
            for (std::size_t i = 0; i < dim; ++i)
                if ((i & a) && (i & b) && !psi[i].is_zero()) psi[i] = -psi[i];
            return;
        }
        default: {
            const QMatrix u = single_qubit_matrix(g.kind);
            const std::size_t m = mask(g.q[0]);
            for (std::size_t i = 0; i < dim; ++i) {
                if (i & m) continue;
                const QAlpha a0 = psi[i], a1 = psi[i | m];
                if (a0.is_zero() && a1.is_zero()) continue;
                psi[i] = u(0, 0) * a0 + u(0, 1) * a1;
                psi[i | m] = u(1, 0) * a0 + u(1, 1) * a1;
            }
            return;
        }
    }
}

inline StateVector simulate_state(const QubitCircuit& qc, std::size_t in_index) {
    const std::size_t q = qc.qubit_count();
    if (q > kStatevectorGuard)
        throw GuardError("statevector", std::to_string(q) + " qubits > " + std::to_string(kStatevectorGuard));
    StateVector psi(std::size_t{1} << q);
    psi.at(in_index) = QAlpha(1);
    for (const auto& g : qc.gates()) apply_gate(psi, q, g);
    return psi;
}

/// Exact <out| U(qc) |in>.
inline QAlpha simulate_amplitude(const QubitCircuit& qc, const std::string& in_state, const std::string& out_state) {
    const std::size_t in = parse_basis(in_state, qc.qubit_count());
    const std::size_t out = parse_basis(out_state, qc.qubit_count());
    return simulate_state(qc, in)[out];
}

/// <0...0| U(qc) |0...0>.
inline QAlpha vacuum_amplitude(const QubitCircuit& qc) { return simulate_state(qc, 0)[0]; }

/// Full 2^q x 2^q unitary, column j = U |j>.
inline QMatrix circuit_unitary(const QubitCircuit& qc) {
    const std::size_t q = qc.qubit_count();
    if (q > kUnitaryGuard) throw GuardError("unitary", std::to_string(q) + " qubits > " + std::to_string(kUnitaryGuard));
    const std::size_t dim = std::size_t{1} << q;
    QMatrix u(dim, dim, QAlpha(0));
    for (std::size_t j = 0; j < dim; ++j) {
        const StateVector col = simulate_state(qc, j);
        for (std::size_t i = 0; i < dim; ++i) u(i, j) = col[i];
    }
    return u;
}

}  // namespace permhard
