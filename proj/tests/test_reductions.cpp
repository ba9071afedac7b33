#include "permhard/circuits/combinators.hpp"
#include "permhard/reductions/involution.hpp"
#include "permhard/reductions/psd.hpp"
#include "permhard/reductions/search.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace permhard;

namespace {

IntMatrix int_rows(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<Integer>> r;
    for (const auto& row : rows) {
        std::vector<Integer> v;
        for (long x : row) v.emplace_back(x);
        r.push_back(std::move(v));
    }
    return IntMatrix::from_rows(r);
}

IntMatrix random_01(std::mt19937_64& rng, std::size_t n) {
    IntMatrix b(n, n, Integer(0));
    for (std::size_t i = 0; i < n * n; ++i) b(i / n, i % n) = static_cast<long>(rng() & 1u);
    return b;
}

Integer naive_int_permanent(const IntMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    Integer total = 0;
    do {
        Integer prod = 1;
        for (std::size_t i = 0; i < n; ++i) prod *= m(i, perm[i]);
        total += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

}  // namespace

TEST(LambdaBlock, Examples) {
    EXPECT_EQ(exact_permanent(lambda_block(IntMatrix::identity(2, Integer(0)))), 1);
    EXPECT_EQ(exact_permanent(lambda_block(IntMatrix(3, 3, Integer(1)))), 36);
    EXPECT_EQ(exact_permanent(lambda_block(IntMatrix(3, 3, Integer(0)))), 0);
    EXPECT_TRUE(is_symmetric(lambda_block(IntMatrix(3, 3, Integer(1)))));
    EXPECT_THROW(lambda_block(int_rows({{1, 2}, {0, 1}})), DomainError);
}

TEST(LambdaBlock, PermanentIsSquare) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 30; ++t) {
        const auto b = random_01(rng, 1 + t % 4);
        const Integer p = naive_int_permanent(b);
        EXPECT_EQ(exact_permanent(lambda_block(b)), p * p);
    }
}

TEST(Psd, InterpolateExamples) {
    EXPECT_EQ(psd_interpolate(IntMatrix::identity(2, Integer(0))).permanent, 1);
    EXPECT_EQ(psd_interpolate(int_rows({{1, 1}, {1, 0}})).permanent, 1);
    EXPECT_EQ(psd_interpolate(IntMatrix(3, 3, Integer(1))).permanent, 6);
}

TEST(Psd, SingleCallExamples) {
    EXPECT_EQ(psd_single_call(IntMatrix::identity(1, Integer(0))).permanent, 1);
    EXPECT_EQ(psd_single_call(IntMatrix(2, 2, Integer(1))).permanent, 2);
    const auto a = psd_single_call(IntMatrix::identity(2, Integer(0)));
    const auto b = psd_interpolate(IntMatrix::identity(2, Integer(0)));
    EXPECT_EQ(a.permanent, 1);
    EXPECT_EQ(a.coefficients, b.coefficients);
    // Per(L_I2 + xI) = (x^2 + 1)^2
    EXPECT_EQ(a.coefficients, (std::vector<Integer>{1, 0, 2, 0, 1}));
    EXPECT_EQ(a.oracle_calls, 1u);
}

TEST(Psd, RandomMatricesAgreeWithBruteForce) {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 1 + t % 4;
        const auto b = random_01(rng, n);
        const Integer truth = naive_int_permanent(b);
        const auto interp = psd_interpolate(b);
        const auto single = psd_single_call(b);
        EXPECT_EQ(interp.permanent, truth);
        EXPECT_EQ(single.permanent, truth);
        EXPECT_EQ(interp.coefficients, single.coefficients);
        EXPECT_EQ(interp.oracle_calls, 2 * n);
        ASSERT_EQ(interp.coefficients.size(), 2 * n + 1);
        EXPECT_EQ(interp.coefficients.back(), 1);
        for (const auto& c : interp.coefficients) {
            EXPECT_GE(c, 0);
            EXPECT_LE(c, factorial(static_cast<unsigned>(2 * n)));
        }
        for (const auto& x : interp.nodes) EXPECT_TRUE(is_positive_definite(shifted(lambda_block(b), x)));
    }
}

TEST(Psd, NodesAreTheStatedRange) {
    const auto r = psd_interpolate(IntMatrix(3, 3, Integer(1)));
    EXPECT_EQ(r.nodes, (std::vector<Integer>{7, 8, 9, 10, 11, 12}));
    EXPECT_EQ(psd_single_call(IntMatrix(3, 3, Integer(1))).nodes, (std::vector<Integer>{721}));
}

TEST(Psd, SylvesterRejectsUnshiftedLambda) {
    EXPECT_FALSE(is_positive_definite(lambda_block(IntMatrix::identity(2, Integer(0)))));
    EXPECT_TRUE(is_positive_definite(shifted(lambda_block(IntMatrix(2, 2, Integer(1))), Integer(5))));
}

TEST(Psd, CorruptOracleIsCaught) {
    const PermanentOracle bad = [](const IntMatrix& m) { return exact_permanent(m) + 1; };
    EXPECT_THROW(psd_interpolate(IntMatrix::identity(2, Integer(0)), bad), VerificationError);
    const PermanentOracle huge = [](const IntMatrix& m) { return exact_permanent(m) * 1000000; };
    EXPECT_THROW(psd_single_call(IntMatrix::identity(2, Integer(0)), huge), VerificationError);
}

TEST(Psd, Guards) {
    EXPECT_THROW(psd_interpolate(IntMatrix(6, 6, Integer(0))), GuardError);
    EXPECT_THROW(psd_single_call(IntMatrix(5, 5, Integer(0))), GuardError);
}

TEST(Gaussian, IdentityIsNearOne) {
    const ComplexMatrix c = cholesky_factor(IntMatrix::identity(2, Integer(0)));
    const auto r = gaussian_estimate(c, 1000000, 7, 4);
    EXPECT_NEAR(r.mean, 1.0, 5 * r.standard_error);
    EXPECT_GE(r.min_statistic, 0.0);
}

TEST(Gaussian, DeterministicAcrossWorkerCounts) {
    const ComplexMatrix c = cholesky_factor(shifted(lambda_block(IntMatrix(2, 2, Integer(1))), Integer(5)));
    const auto a = gaussian_estimate(c, 50000, 99, 1);
    const auto b = gaussian_estimate(c, 50000, 99, 3);
    EXPECT_EQ(a.mean, b.mean);
    EXPECT_EQ(a.standard_error, b.standard_error);
}

TEST(Gaussian, ShiftedLambdaWithinTenPercent) {
    const IntMatrix a = shifted(lambda_block(IntMatrix(2, 2, Integer(1))), Integer(5));
    const double exact = exact_permanent(a).convert_to<double>();
    const auto r = gaussian_estimate(cholesky_factor(a), 1000000, 3, 4);
    EXPECT_NEAR(r.mean, exact, 0.1 * exact);
    EXPECT_GE(r.min_statistic, 0.0);
}

TEST(Symplectic, MinusOne) {
    const IntMatrix b = int_rows({{-1}});
    const auto m = make_symplectic(b);
    EXPECT_EQ(m, int_rows({{-1, 0}, {0, -1}}));
    EXPECT_TRUE(check_membership(m, MatrixGroup::SL));
    EXPECT_TRUE(check_membership(m, MatrixGroup::Sp));
    EXPECT_TRUE(check_membership(m, MatrixGroup::Involution));
}

TEST(Symplectic, SwapPassesEverything) {
    const auto m = make_symplectic(int_rows({{0, 1}, {1, 0}}));
    for (auto g : {MatrixGroup::SO, MatrixGroup::Sp, MatrixGroup::Involution, MatrixGroup::SL, MatrixGroup::O})
        EXPECT_TRUE(check_membership(m, g)) << group_name(g);
    EXPECT_TRUE(is_symmetric(m));
}

TEST(Symplectic, PermanentProductLaw) {
    const IntMatrix j2(2, 2, Integer(1));
    const Integer pj = exact_permanent(j2);
    EXPECT_EQ(exact_permanent(make_symplectic(j2)), pj * pj);
}

TEST(Membership, Examples) {
    const IntMatrix i4 = IntMatrix::identity(4, Integer(0));
    for (auto g : {MatrixGroup::GL, MatrixGroup::SL, MatrixGroup::O, MatrixGroup::SO, MatrixGroup::UAsRealOrthogonal,
                   MatrixGroup::Sp, MatrixGroup::Involution})
        EXPECT_TRUE(check_membership(i4, g)) << group_name(g);
    const IntMatrix d = int_rows({{2, 0}, {0, 1}});
    EXPECT_TRUE(check_membership(d, MatrixGroup::GL));
    EXPECT_FALSE(check_membership(d, MatrixGroup::SL));
    EXPECT_FALSE(check_membership(d, MatrixGroup::O));
    EXPECT_THROW(check_membership(IntMatrix::identity(3, Integer(0)), MatrixGroup::Sp), DomainError);
    EXPECT_EQ(determinant(int_rows({{1, 2}, {3, 4}})), -2);
}

TEST(Membership, CertificateNetworkIsOrthogonal) {
    const auto cert = certify(constant_circuit(1, false));
    EXPECT_EQ(cert.network.dimension(), 12u);
    EXPECT_TRUE(check_membership(cert.network.matrix, MatrixGroup::O));
    EXPECT_TRUE(check_membership(cert.network.matrix, MatrixGroup::GL));
}

TEST(Involution, ConstantZero) {
    const auto inv = make_involution(constant_circuit(1, false));
    const QMatrix& m = inv.matrix;
    ASSERT_EQ(m.rows(), 24u);
    EXPECT_TRUE(is_symmetric(m));
    EXPECT_TRUE(check_membership(m, MatrixGroup::Involution));
    EXPECT_TRUE(check_membership(m, MatrixGroup::O));
    // Per(M) = Per(B)^2 with Per(B) = 2^a 3^b (Delta + 2^n) = 2^a 3^b * 4
    const QAlpha per_b = permanent(inv.base.network.matrix);
    EXPECT_EQ(per_b, QAlpha(pow23(inv.base.a, inv.base.b) * 4));
}

TEST(Involution, SymplecticDoublingOfInvolution) {
    const auto inv = make_involution(constant_circuit(1, true));
    const auto s = make_symplectic(inv.matrix);
    ASSERT_EQ(s.rows(), 48u);
    EXPECT_TRUE(check_membership(s, MatrixGroup::Involution));
    EXPECT_TRUE(check_membership(s, MatrixGroup::O));
    EXPECT_TRUE(check_membership(s, MatrixGroup::Sp));
}

TEST(Search, SpecExamples) {
    const auto r0 = search_delta(constant_circuit(2, false), bruteforce_sign_oracle());
    EXPECT_EQ(r0.delta, 4);
    EXPECT_LE(r0.calls, 5u);
    EXPECT_EQ(search_delta(permhard::testing::load("nand"), bruteforce_sign_oracle()).delta, -2);
    const auto rz = search_delta(permhard::testing::load("xor"), bruteforce_sign_oracle());
    EXPECT_EQ(rz.delta, 0);
    EXPECT_EQ(rz.trace.back().answer, 0);
}

TEST(Search, CorpusAndRandomWithinCallBound) {
    for (const auto& [name, delta] : permhard::testing::corpus()) {
        const auto c = permhard::testing::load(name);
        const auto r = search_delta(c, bruteforce_sign_oracle());
        EXPECT_EQ(r.delta, delta) << name;
        EXPECT_LE(r.calls, c.input_count() + 3) << name;
    }
    std::mt19937_64 rng(5);
    for (int t = 0; t < 40; ++t) {
        const auto c = permhard::testing::random_circuit(rng, 1 + t % 4, 1 + t % 6);
        const auto r = search_delta(c, bruteforce_sign_oracle());
        EXPECT_EQ(r.delta, delta_bruteforce(c));
        EXPECT_LE(r.calls, c.input_count() + 3);
    }
}

TEST(Search, InconsistentOracleIsDetected) {
    const SignOracle liar = [](const BooleanCircuit&) { return 1; };
    EXPECT_THROW(search_delta(constant_circuit(2, false), liar), VerificationError);
}

TEST(SearchApprox, HonestAndAdversarial) {
    const auto c = constant_circuit(2, false);
    for (const Rational& factor : {Rational(1), Rational(2), Rational(1, 2)}) {
        const auto r = search_delta_approx(c, scaled_approx_oracle(factor), Rational(2));
        EXPECT_EQ(r.delta, 4);
        EXPECT_EQ(r.power, 1u);
        Rational length = Rational(Integer(1) << 3);
        for (const auto& st : r.steps) {
            EXPECT_LE(st.ratio, Rational(3, 4));
            const Rational now(st.hi - st.lo);
            EXPECT_LE(now, length * Rational(3, 4));
            length = now;
        }
    }
}

TEST(SearchApprox, CorpusUnderAdversaries) {
    for (const auto& [name, delta] : permhard::testing::corpus()) {
        const auto c = permhard::testing::load(name);
        for (const Rational& factor : {Rational(2), Rational(1, 2)})
            EXPECT_EQ(search_delta_approx(c, scaled_approx_oracle(factor), Rational(2)).delta, delta) << name;
    }
}

TEST(SearchApprox, OutOfBandAnswerIsDetected) {
    EXPECT_THROW(search_delta_approx(constant_circuit(2, false), scaled_approx_oracle(Rational(5)), Rational(2)),
                 VerificationError);
}

TEST(SearchApprox, BoostingSquaresTheGap) {
    EXPECT_EQ(boosting_exponent(Rational(2)), 1u);
    EXPECT_EQ(boosting_exponent(Rational(4)), 2u);
    EXPECT_EQ(boosting_exponent(Rational(5)), 3u);
    const auto c = permhard::testing::load("nand");
    const auto r = search_delta_approx(c, scaled_approx_oracle(Rational(4)), Rational(4));
    EXPECT_EQ(r.delta, -2);
    EXPECT_EQ(r.power, 2u);
    for (const auto& st : r.steps) {
        const Integer d = delta_bruteforce(c) - st.a;
        const Integer scaled = (Integer(1) << st.scale) * d;
        EXPECT_EQ(delta_bruteforce(st.query), scaled * scaled);
    }
}
