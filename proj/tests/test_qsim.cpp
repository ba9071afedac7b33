#include "permhard/algebra/representations.hpp"
#include "permhard/circuits/combinators.hpp"
#include "permhard/qsim/gates.hpp"
#include "permhard/qsim/lower.hpp"
#include "permhard/qsim/oracle.hpp"
#include "permhard/qsim/simulate.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace permhard;

namespace {

QMatrix ideal_toffoli() {
    QMatrix t = QMatrix::identity(8, QAlpha(0));
    t(6, 6) = 0;
    t(7, 7) = 0;
    t(6, 7) = 1;
    t(7, 6) = 1;
    return t;
}

QubitCircuit from_gates(std::size_t q, const std::vector<QubitGate>& gates) {
    QubitCircuit qc(q);
    for (const auto& g : gates) qc.push(g);
    return qc;
}

}  // namespace

TEST(Simulate, SpecExamples) {
    EXPECT_EQ(simulate_amplitude(QubitCircuit(1), "0", "0"), QAlpha(1));
    QubitCircuit h(1);
    h.push(gate1(GateKind::H, 0));
    EXPECT_EQ(simulate_amplitude(h, "0", "1"), Radicals::inv_sqrt2());
    EXPECT_THROW(simulate_amplitude(h, "01", "0"), DomainError);
}

TEST(Simulate, UnitaryExamples) {
    QubitCircuit z(1);
    z.push(gate1(GateKind::Z, 0));
    EXPECT_EQ(circuit_unitary(z), qmatrix({{QAlpha(1), QAlpha(0)}, {QAlpha(0), QAlpha(-1)}}));
    QubitCircuit rr(1);
    rr.push(gate1(GateKind::RQ, 0));
    rr.push(gate1(GateKind::RQinv, 0));
    EXPECT_TRUE(is_identity(circuit_unitary(rr)));
    EXPECT_TRUE(is_orthogonal(rq_matrix()));
    const QMatrix r2 = rq_matrix() * rq_matrix();
    EXPECT_EQ(r2 * r2, r_matrix());
}

TEST(Oracle, NotCircuitActsAsXor) {
    const auto qc = build_oracle_circuit(permhard::testing::load("not"));
    ASSERT_EQ(qc.qubit_count(), 3u);
    for (int x = 0; x < 2; ++x)
        for (int b = 0; b < 2; ++b) {
            const std::string in = std::to_string(x) + std::to_string(b) + "0";
            const std::string out = std::to_string(x) + std::to_string(b ^ (1 - x)) + "0";
            EXPECT_EQ(simulate_amplitude(qc, in, out), QAlpha(1)) << in;
        }
}

TEST(Oracle, NandFlipsAnswerOnlyWhenOutputIsOne) {
    const auto qc = build_oracle_circuit(permhard::testing::load("nand"));
    EXPECT_EQ(simulate_amplitude(qc, "1100", "1100"), QAlpha(1));
    EXPECT_EQ(simulate_amplitude(qc, "0000", "0010"), QAlpha(1));
}

TEST(Oracle, AncillasRestoredOnCorpus) {
    for (const auto& [name, delta] : permhard::testing::corpus()) {
        const auto c = permhard::testing::load(name);
        const auto qc = build_oracle_circuit(c);
        const std::size_t n = c.input_count(), q = qc.qubit_count();
        for (std::size_t x = 0; x < (std::size_t{1} << (n + 1)); ++x) {
            const auto psi = simulate_state(qc, x << (q - n - 1));
            std::size_t support = 0;
            for (std::size_t i = 0; i < psi.size(); ++i)
                if (!psi[i].is_zero()) {
                    ++support;
                    EXPECT_EQ(i & ((std::size_t{1} << (q - n - 1)) - 1), 0u) << name;
                    EXPECT_EQ(psi[i], QAlpha(1));
                }
            EXPECT_EQ(support, 1u);
        }
    }
}

TEST(DeltaCircuit, SpecAmplitudes) {
    EXPECT_EQ(vacuum_amplitude(build_delta_circuit(constant_circuit(1, false))), QAlpha(1));
    EXPECT_EQ(vacuum_amplitude(build_delta_circuit(permhard::testing::load("ident"))), QAlpha(0));
    EXPECT_EQ(vacuum_amplitude(build_delta_circuit(permhard::testing::load("nand"))), QAlpha(Rational(-1, 2)));
}

TEST(DeltaCircuit, CorpusGenericAndCompact) {
    for (const auto& [name, delta] : permhard::testing::corpus()) {
        const auto c = permhard::testing::load(name);
        const QAlpha want(Rational(delta, 1L << c.input_count()));
        EXPECT_EQ(vacuum_amplitude(build_delta_circuit(c)), want) << name;
        const auto compact = prune_idle(lower(build_delta_circuit_compact(c)));
        EXPECT_TRUE(compact.is_lowered());
        if (compact.qubit_count() > kStatevectorGuard) {
            EXPECT_THROW(vacuum_amplitude(compact), GuardError);
            continue;
        }
        EXPECT_EQ(vacuum_amplitude(compact), want) << name;
    }
}

TEST(Lower, CnotIsConjugatedCsign) {
    QubitCircuit qc(2);
    qc.push(gate2(GateKind::CNOT, 0, 1));
    const auto low = lower(qc);
    EXPECT_EQ(low.count(GateKind::CSIGN), 1u);
    EXPECT_EQ(circuit_unitary(low), circuit_unitary(qc));
    QMatrix cnot = QMatrix::identity(4, QAlpha(0));
    cnot(2, 2) = cnot(3, 3) = 0;
    cnot(2, 3) = cnot(3, 2) = 1;
    EXPECT_EQ(circuit_unitary(qc), cnot);
}

TEST(Lower, CcrAppliesRWhenBothControlsSet) {
    std::vector<QubitGate> g;
    detail::emit_ccr(g, 0, 1, 2);
    const auto u = circuit_unitary(lower(from_gates(3, g)));
    const QMatrix r = r_matrix();
    for (std::size_t c = 0; c < 4; ++c)
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                const QAlpha want = c == 3 ? r(i, j) : QAlpha(i == j ? 1 : 0);
                EXPECT_EQ(u(2 * c + i, 2 * c + j), want);
            }
}

TEST(Lower, NonAffineGateIsPermutation) {
    std::vector<QubitGate> g;
    detail::emit_nonaffine(g, 0, 1, 2);
    const auto u = circuit_unitary(lower(from_gates(3, g)));
    for (std::size_t j = 0; j < 8; ++j) {
        int ones = 0;
        for (std::size_t i = 0; i < 8; ++i) {
            EXPECT_TRUE(u(i, j) == QAlpha(0) || u(i, j) == QAlpha(1)) << i << "," << j;
            ones += u(i, j) == QAlpha(1);
        }
        EXPECT_EQ(ones, 1);
    }
}

TEST(Lower, ToffoliExactOnAncillaZeroBlock) {
    QubitCircuit qc(3);
    qc.push(toffoli(0, 1, 2));
    const auto low = lower(qc);
    ASSERT_EQ(low.qubit_count(), 4u);
    EXPECT_TRUE(low.is_lowered());
    EXPECT_EQ(low.count(GateKind::CSIGN), 40u);
    const auto u = circuit_unitary(low);
    const auto t = ideal_toffoli();
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) EXPECT_EQ(u(2 * i, 2 * j), t(i, j)) << i << "," << j;
}

TEST(Guards, StatevectorAndUnitary) {
    EXPECT_THROW(circuit_unitary(QubitCircuit(kUnitaryGuard + 1)), GuardError);
    EXPECT_THROW(simulate_state(QubitCircuit(kStatevectorGuard + 1), 0), GuardError);
}

TEST(QubitCircuitDump, DebugFormat) {
    QubitCircuit qc(2);
    qc.push(gate1(GateKind::H, 0));
    qc.push(gate2(GateKind::CSIGN, 0, 1));
    EXPECT_EQ(qc.dump(), "# qubits 2\nH 0\nCSIGN 0 1\n");
    EXPECT_THROW(qc.push(gate2(GateKind::CSIGN, 1, 1)), DomainError);
}
