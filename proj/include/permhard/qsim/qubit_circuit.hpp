#pragma once

#include "permhard/error.hpp"

#include <array>
#include <sstream>
#include <string>
#include <vector>

namespace permhard {

enum class GateKind { H, Z, X, RQ, RQinv, CNOT, CSIGN, TOFFOLI };

inline std::size_t gate_arity(GateKind k) {
    switch (k) {
        case GateKind::CNOT:
        case GateKind::CSIGN: return 2;
        case GateKind::TOFFOLI: return 3;
        default: return 1;
    }
}

inline std::string gate_name(GateKind k) {
    switch (k) {
        case GateKind::H: return "H";
        case GateKind::Z: return "Z";
        case GateKind::X: return "X";
        case GateKind::RQ: return "RQ";
        case GateKind::RQinv: return "RQINV";
        case GateKind::CNOT: return "CNOT";
        case GateKind::CSIGN: return "CSIGN";
        case GateKind::TOFFOLI: return "TOFFOLI";
    }
    return "?";
}

/// Targets are listed controls first; the last qubit is the target for
/// CNOT and TOFFOLI. CSIGN is symmetric.
struct QubitGate {
    GateKind kind = GateKind::H;
    std::array<std::size_t, 3> q{};

    std::size_t arity() const { return gate_arity(kind); }
    friend bool operator==(const QubitGate&, const QubitGate&) = default;
};

inline QubitGate gate1(GateKind k, std::size_t a) { return {k, {a, 0, 0}}; }
inline QubitGate gate2(GateKind k, std::size_t a, std::size_t b) { return {k, {a, b, 0}}; }
inline QubitGate toffoli(std::size_t c1, std::size_t c2, std::size_t t) { return {GateKind::TOFFOLI, {c1, c2, t}}; }

class QubitCircuit {
public:
    QubitCircuit() = default;
    explicit QubitCircuit(std::size_t qubits) : qubits_(qubits) {}

    std::size_t qubit_count() const noexcept { return qubits_; }
    const std::vector<QubitGate>& gates() const noexcept { return gates_; }

    /// Adds fresh qubits at the end; returns the index of the first one.
    std::size_t add_qubits(std::size_t count) {
        qubits_ += count;
        return qubits_ - count;
    }

    void push(const QubitGate& g) {
        for (std::size_t i = 0; i < g.arity(); ++i) {
            if (g.q[i] >= qubits_) throw DomainError("QubitCircuit: qubit index out of range in " + gate_name(g.kind));
            for (std::size_t j = 0; j < i; ++j)
                if (g.q[i] == g.q[j]) throw DomainError("QubitCircuit: repeated qubit in " + gate_name(g.kind));
        }
        gates_.push_back(g);
    }
    void push_front(const QubitGate& g) {
        push(g);
        gates_.pop_back();
        gates_.insert(gates_.begin(), g);
    }

    /// Gate set restricted to H, Z, X, RQ, RQinv and CSIGN.
    bool is_lowered() const {
        for (const auto& g : gates_)
            if (g.kind == GateKind::CNOT || g.kind == GateKind::TOFFOLI) return false;
        return true;
    }

    std::size_t count(GateKind k) const {
        std::size_t c = 0;
        for (const auto& g : gates_) c += g.kind == k;
        return c;
    }

    /// Debug listing: one `GATE q1 [q2 [q3]]` per line.
    std::string dump() const {
        std::ostringstream os;
        os << "# qubits " << qubits_ << "\n";
        for (const auto& g : gates_) {
            os << gate_name(g.kind);
            for (std::size_t i = 0; i < g.arity(); ++i) os << ' ' << g.q[i];
            os << '\n';
        }
        return os.str();
    }

private:
    std::size_t qubits_ = 0;
    std::vector<QubitGate> gates_;
};

}  // namespace permhard
