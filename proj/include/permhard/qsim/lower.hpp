#pragma once

// Exact lowering to {H, Z, X, RQ, RQinv, CSIGN}: CNOT is an H-conjugated
// CSIGN, and TOFFOLI goes through the doubly controlled R block, the
// non-affine classical gate built from it, and one fresh ancilla.

#include "permhard/qsim/gates.hpp"
#include "permhard/qsim/qubit_circuit.hpp"

#include <map>

namespace permhard {

namespace detail {

inline void emit_cnot(std::vector<QubitGate>& out, std::size_t c, std::size_t t) {
    out.push_back(gate1(GateKind::H, t));
    out.push_back(gate2(GateKind::CSIGN, c, t));
    out.push_back(gate1(GateKind::H, t));
}

/// Applies R to t when c1 = c2 = 1.
inline void emit_ccr(std::vector<QubitGate>& out, std::size_t c1, std::size_t c2, std::size_t t) {
    out.push_back(gate1(GateKind::RQ, t));
    emit_cnot(out, c2, t);
    out.push_back(gate1(GateKind::RQinv, t));
    emit_cnot(out, c1, t);
    out.push_back(gate1(GateKind::RQ, t));
    emit_cnot(out, c2, t);
    out.push_back(gate1(GateKind::RQinv, t));
    emit_cnot(out, c1, t);
}

/// Non-affine permutation on (a, b, c): Toffoli(b, c -> a) then
/// Toffoli(a, b -> c), realized with two CC-R blocks and two CSIGNs.
inline void emit_nonaffine(std::vector<QubitGate>& out, std::size_t a, std::size_t b, std::size_t c) {
    emit_ccr(out, b, c, a);
    emit_ccr(out, a, b, c);
    out.push_back(gate2(GateKind::CSIGN, b, c));
    out.push_back(gate2(GateKind::CSIGN, a, b));
}

}  // namespace detail

/// Lowered Toffoli(c1, c2 -> t) using ancilla `anc`, which must start in |0>.
inline std::vector<QubitGate> lowered_toffoli(std::size_t c1, std::size_t c2, std::size_t t, std::size_t anc) {
    std::vector<QubitGate> out;
    detail::emit_nonaffine(out, anc, c2, t);
    detail::emit_nonaffine(out, t, c2, c1);
    detail::emit_nonaffine(out, t, c2, anc);
    detail::emit_nonaffine(out, c1, c2, anc);
    return out;
}

/// Lowers every CNOT and TOFFOLI. Each TOFFOLI gets a fresh ancilla appended
/// after the logical qubits, in order of occurrence.
inline QubitCircuit lower(const QubitCircuit& qc) {
    std::size_t toffolis = qc.count(GateKind::TOFFOLI);
    QubitCircuit out(qc.qubit_count() + toffolis);
    std::size_t next_anc = qc.qubit_count();
    std::vector<QubitGate> buf;
    for (const auto& g : qc.gates()) {
        buf.clear();
        switch (g.kind) {
            case GateKind::CNOT: detail::emit_cnot(buf, g.q[0], g.q[1]); break;
            case GateKind::TOFFOLI: buf = lowered_toffoli(g.q[0], g.q[1], g.q[2], next_anc++); break;
            default: buf.push_back(g);
        }
        for (const auto& h : buf) out.push(h);
    }
    return out;
}

/// Removes qubits acted on only by single-qubit gates whose product U has
/// U(0,0) = 1 exactly; such a qubit returns to |0> with amplitude 1, so
/// <0|Q|0> is unchanged.
inline QubitCircuit prune_idle(const QubitCircuit& qc) {
    const std::size_t q = qc.qubit_count();
    std::vector<bool> entangled(q, false);
    std::vector<QMatrix> product(q, QMatrix::identity(2, QAlpha(0)));
    for (const auto& g : qc.gates()) {
        if (g.arity() > 1) {
            for (std::size_t i = 0; i < g.arity(); ++i) entangled[g.q[i]] = true;
        } else {
            product[g.q[0]] = single_qubit_matrix(g.kind) * product[g.q[0]];
        }
    }
    std::vector<std::size_t> remap(q, q);
    std::size_t kept = 0;
    for (std::size_t i = 0; i < q; ++i) {
        const bool idle = !entangled[i] && product[i](0, 0) == QAlpha(1);
        if (!idle) remap[i] = kept++;
    }
    QubitCircuit out(kept);
    for (const auto& g : qc.gates()) {
        if (remap[g.q[0]] == q) continue;
        QubitGate h = g;
        for (std::size_t i = 0; i < g.arity(); ++i) h.q[i] = remap[g.q[i]];
        out.push(h);
    }
    return out;
}

}  // namespace permhard
