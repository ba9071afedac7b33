#include "permhard/circuits/boolean_circuit.hpp"
#include "permhard/circuits/combinators.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace permhard;
using permhard::testing::random_circuit;

TEST(Netlist, ParsesNotAndNand) {
    const auto c = parse_netlist("input x\noutput g\ngate g = NAND(x, x)");
    EXPECT_EQ(c.input_count(), 1u);
    EXPECT_FALSE(c.eval({true}));
    EXPECT_TRUE(c.eval({false}));
    const auto nand = parse_netlist("input a\ninput b\noutput g\ngate g = NAND(a, b)");
    EXPECT_FALSE(nand.eval({true, true}));
    EXPECT_TRUE(nand.eval({true, false}));
}

TEST(Netlist, RejectsForwardReferenceWithLine) {
    try {
        parse_netlist("input a\ngate g = NAND(h, a)\ngate h = NAND(a, a)\noutput g\n");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_NE(std::string(e.what()).find("forward reference"), std::string::npos);
    }
}

TEST(Netlist, OtherErrors) {
    EXPECT_THROW(parse_netlist("input a\ngate g = NAND(a, zz)\noutput g\n"), ParseError);
    EXPECT_THROW(parse_netlist("input a\ngate g = NAND(a, a)\n"), ParseError);
    EXPECT_THROW(parse_netlist("input a\ngate g = AND(a, a)\noutput g\n"), ParseError);
    EXPECT_THROW(parse_netlist("input a\ninput a\noutput a\n"), ParseError);
}

TEST(Netlist, CommentsAndBlankLines) {
    const auto c = parse_netlist("# header\n\ninput x  # the input\n\noutput x\n");
    EXPECT_EQ(c.gate_count(), 0u);
    EXPECT_EQ(delta_bruteforce(c), 0);
}

TEST(Netlist, PrintParseRoundTrip) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; ++t) {
        const auto c = random_circuit(rng, 1 + t % 4, 1 + t % 8);
        EXPECT_EQ(parse_netlist(print_netlist(c)), c);
    }
}

TEST(Eval, AndCircuitAndLengthCheck) {
    const auto c = permhard::testing::load("and");
    EXPECT_TRUE(c.eval({true, true}));
    EXPECT_FALSE(c.eval({true, false}));
    EXPECT_THROW(c.eval({true}), DomainError);
}

TEST(Delta, CorpusValues) {
    for (const auto& [name, delta] : permhard::testing::corpus()) EXPECT_EQ(delta_bruteforce(permhard::testing::load(name)), delta) << name;
}

TEST(Delta, ConstantZeroIsTwoToTheN) {
    for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(delta_bruteforce(constant_circuit(n, false)), Integer(1) << n);
    EXPECT_EQ(delta_bruteforce(constant_circuit(3, true)), -8);
}

TEST(Delta, Guard) {
    EXPECT_THROW(delta_bruteforce(constant_circuit(25, false)), GuardError);
}

TEST(Combinators, SpecExamples) {
    const auto nand = permhard::testing::load("nand");
    const auto notc = permhard::testing::load("not");
    EXPECT_EQ(delta_bruteforce(negate(notc)), 0);
    EXPECT_EQ(delta_bruteforce(multiply(nand, nand)), 4);
    const auto c0 = constant_circuit(2, false);
    EXPECT_EQ(delta_bruteforce(add(c0, negate(c0))), 0);
    EXPECT_THROW(add(c0, constant_circuit(3, false)), DomainError);
    EXPECT_EQ(delta_bruteforce(combine(CombineKind::Multiply, nand, nand)), 4);
    EXPECT_THROW(combine(CombineKind::Add, nand), DomainError);
}

TEST(Combinators, RandomizedArithmetic) {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 1 + t % 4;
        const auto c1 = random_circuit(rng, n, 1 + rng() % 8);
        const auto c2 = random_circuit(rng, n, 1 + rng() % 8);
        const Integer d1 = delta_bruteforce(c1), d2 = delta_bruteforce(c2);
        EXPECT_EQ(delta_bruteforce(negate(c1)), -d1);
        EXPECT_EQ(delta_bruteforce(add(c1, c2)), d1 + d2);
        EXPECT_EQ(delta_bruteforce(multiply(c1, c2)), d1 * d2);
        EXPECT_EQ(delta_bruteforce(pad(c1, n + 2)), d1 * 4);
        const Integer ext = delta_bruteforce(or_extend(c1));
        EXPECT_EQ(ext, d1 + (Integer(1) << n));
        EXPECT_GE(ext, 0);
    }
}

TEST(Shift, ExamplesAndScale) {
    const auto nand = permhard::testing::load("nand");
    EXPECT_EQ(delta_bruteforce(shift(nand, 0).circuit), -2);
    const auto s = shift(nand, -2);
    EXPECT_EQ(s.scale_log2, 0u);
    EXPECT_EQ(delta_bruteforce(s.circuit), 0);
    // odd k costs one input and a factor 2: const0 on 3 inputs has gap 8
    const auto odd = shift(constant_circuit(3, false), 5);
    EXPECT_EQ(odd.scale_log2, 1u);
    EXPECT_EQ(delta_bruteforce(odd.circuit), 2 * (8 - 5));
    // |k| must not exceed 2^n
    EXPECT_THROW(shift(constant_circuit(1, false), 5), DomainError);
}

TEST(Shift, AllAdmissibleK) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 1 + t % 3;
        const auto c = random_circuit(rng, n, 1 + rng() % 5);
        const Integer d = delta_bruteforce(c);
        const long lim = 1L << n;
        for (long k = -lim; k <= lim; ++k) {
            const auto s = shift(c, k);
            EXPECT_EQ(delta_bruteforce(s.circuit), (Integer(1) << s.scale_log2) * (d - k)) << "k=" << k;
        }
    }
}

TEST(OrExtend, SpecExamples) {
    EXPECT_EQ(delta_bruteforce(or_extend(constant_circuit(1, true))), 0);
    EXPECT_EQ(delta_bruteforce(or_extend(constant_circuit(1, false))), 4);
    EXPECT_EQ(delta_bruteforce(or_extend(permhard::testing::load("nand"))), 2);
}

TEST(Comparator, GapFormula) {
    for (std::size_t m = 1; m <= 4; ++m)
        for (long t = 0; t <= (1L << m); ++t)
            EXPECT_EQ(delta_bruteforce(comparator_ge(m, t)), 2 * t - (1L << m));
}
