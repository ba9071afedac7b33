#pragma once

// The reversible oracle O_C |x, b> = |x, b xor C(x)> and the circuit Q with
// <0|Q|0> = Delta_C / 2^n.

#include "permhard/circuits/boolean_circuit.hpp"
#include "permhard/qsim/qubit_circuit.hpp"

namespace permhard {

/// Layout: inputs 0..n-1, answer qubit n, ancilla of gate k at n + 1 + k.
/// Each NAND gate sets its ancilla to 1 and then flips it on the AND of its
/// operands; a gate whose operands coincide uses CNOT. The output is copied
/// to the answer with CNOT and the gates are undone in reverse order.
inline QubitCircuit build_oracle_circuit(const BooleanCircuit& c) {
    const std::size_t n = c.input_count();
    QubitCircuit qc(n + 1 + c.gate_count());
    auto qubit_of = [n](std::size_t wire) { return wire < n ? wire : wire + 1; };
    std::vector<QubitGate> compute;
    for (std::size_t k = 0; k < c.gate_count(); ++k) {
        const auto& g = c.gates()[k];
        const std::size_t anc = n + 1 + k;
        compute.push_back(gate1(GateKind::X, anc));
        if (g.a == g.b)
            compute.push_back(gate2(GateKind::CNOT, qubit_of(g.a), anc));
        else
            compute.push_back(toffoli(qubit_of(g.a), qubit_of(g.b), anc));
    }
    for (const auto& g : compute) qc.push(g);
    qc.push(gate2(GateKind::CNOT, qubit_of(c.output()), n));
    for (auto it = compute.rbegin(); it != compute.rend(); ++it) qc.push(*it);
    return qc;
}

/// Truth-table shape used for compact synthesis.
struct LiteralForm {
    enum class Kind { Constant, Literal, General } kind = Kind::General;
    bool value = false;       // constant value, or negation flag for a literal
    std::size_t variable = 0;  // literal variable
};

inline LiteralForm classify_function(const BooleanCircuit& c) {
    const std::size_t n = c.input_count();
    if (n > kDeltaEnumerationGuard) return {};
    std::vector<bool> table(std::size_t{1} << n);
    std::vector<bool> x(n);
    for (std::size_t idx = 0; idx < table.size(); ++idx) {
        for (std::size_t i = 0; i < n; ++i) x[i] = (idx >> i) & 1u;
        table[idx] = c.eval(x);
    }
    bool constant = true;
    for (std::size_t idx = 1; idx < table.size(); ++idx) constant = constant && table[idx] == table[0];
    if (constant) return {LiteralForm::Kind::Constant, table[0], 0};
    for (std::size_t i = 0; i < n; ++i) {
        bool pos = true, neg = true;
        for (std::size_t idx = 0; idx < table.size(); ++idx) {
            const bool xi = (idx >> i) & 1u;
            pos = pos && table[idx] == xi;
            neg = neg && table[idx] == !xi;
        }
        if (pos || neg) return {LiteralForm::Kind::Literal, neg, i};
    }
    return {};
}

/// Oracle with the same action on |x, b>, synthesized directly when C is a
/// constant or a literal (no ancillas); otherwise identical to the generic
/// construction.
inline QubitCircuit build_oracle_circuit_compact(const BooleanCircuit& c) {
    const LiteralForm form = classify_function(c);
    const std::size_t n = c.input_count();
    if (form.kind == LiteralForm::Kind::General) return build_oracle_circuit(c);
    QubitCircuit qc(n + 1);
    if (form.kind == LiteralForm::Kind::Constant) {
        if (form.value) qc.push(gate1(GateKind::X, n));
        return qc;
    }
    qc.push(gate2(GateKind::CNOT, form.variable, n));
    if (form.value) qc.push(gate1(GateKind::X, n));
    return qc;
}

/// Wraps an oracle on n + 1 + a qubits into Q: Hadamards on the inputs, the
/// answer prepared in |-> by H then Z, the oracle, and the mirror image.
inline QubitCircuit wrap_delta_circuit(std::size_t n, const QubitCircuit& oracle) {
    QubitCircuit qc(oracle.qubit_count());
    for (std::size_t i = 0; i < n; ++i) qc.push(gate1(GateKind::H, i));
    qc.push(gate1(GateKind::H, n));
    qc.push(gate1(GateKind::Z, n));
    for (const auto& g : oracle.gates()) qc.push(g);
    for (std::size_t i = 0; i < n; ++i) qc.push(gate1(GateKind::H, i));
    qc.push(gate1(GateKind::Z, n));
    qc.push(gate1(GateKind::H, n));
    return qc;
}

inline QubitCircuit build_delta_circuit(const BooleanCircuit& c) {
    return wrap_delta_circuit(c.input_count(), build_oracle_circuit(c));
}

inline QubitCircuit build_delta_circuit_compact(const BooleanCircuit& c) {
    return wrap_delta_circuit(c.input_count(), build_oracle_circuit_compact(c));
}

}  // namespace permhard
