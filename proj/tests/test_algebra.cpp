#include "permhard/algebra/ext_field.hpp"
#include "permhard/algebra/linear_solve.hpp"
#include "permhard/algebra/matrix.hpp"
#include "permhard/algebra/poly_fp.hpp"
#include "permhard/algebra/prime_field.hpp"
#include "permhard/algebra/qalpha.hpp"
#include "permhard/algebra/real_embedding.hpp"
#include "permhard/algebra/representations.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace permhard;

TEST(QAlpha, AlphaTimesAlpha15ReducesModF) {
    const QAlpha a = QAlpha::alpha();
    const QAlpha lhs = a * a.pow(15);
    const std::vector<long long> want = {-1, 0, 1832, 0, -11324, 0, 17816, 0, -11782, 0, 3736, 0, -572, 0, 40, 0};
    EXPECT_EQ(lhs, QAlpha::from_integer_poly(want, Integer(1)));
}

TEST(QAlpha, AdditiveIdentityAndInverse) {
    const QAlpha x = QAlpha::alpha().pow(5) * Rational(3, 7) + QAlpha(2);
    EXPECT_EQ(QAlpha(0) + x, x);
    EXPECT_TRUE((x - x).is_zero());
    EXPECT_EQ(x * x.inverse(), QAlpha(1));
    EXPECT_THROW(QAlpha(0).inverse(), DomainError);
}

TEST(QAlpha, AlphaIsSumOfItsRadicals) {
    const QAlpha s = representation(Radical::SqrtTwoPlusSqrt2) + representation(Radical::SqrtThreePlusSqrt6);
    EXPECT_EQ(s, QAlpha::alpha());
}

TEST(QAlpha, AsRationalOnlyForConstants) {
    EXPECT_EQ(QAlpha(Rational(5, 3)).as_rational(), Rational(5, 3));
    EXPECT_FALSE(QAlpha::alpha().as_rational().has_value());
}

TEST(RealEmbedding, KnownValues) {
    EXPECT_DOUBLE_EQ(to_double(QAlpha(1)), 1.0);
    EXPECT_NEAR(to_double(QAlpha::alpha()), 4.182173283, 1e-9);
    EXPECT_NEAR(to_double(Radicals::inv_sqrt2()), 1 / std::sqrt(2.0), 1e-15);
    EXPECT_EQ(qa_to_decimal(QAlpha::alpha()).substr(0, 22), "4.18217328336155075157");
    EXPECT_EQ(qa_sign(-Radicals::inv_sqrt3()), -1);
}

TEST(Representations, DerivedSatisfyRelations) {
    for (Radical r : kAllRadicals) {
        const QAlpha& q = representation(r);
        EXPECT_TRUE(satisfies_relation(r, q)) << radical_name(r);
        EXPECT_NEAR(to_double(q), radical_value(r), 1e-12) << radical_name(r);
        EXPECT_TRUE(denominator_divides_bound(q)) << radical_name(r);
    }
    EXPECT_EQ(Radicals::inv_sqrt2() * Radicals::inv_sqrt2(), QAlpha(Rational(1, 2)));
    EXPECT_EQ(Radicals::inv_sqrt3() * Radicals::inv_sqrt3(), QAlpha(Rational(1, 3)));
}

TEST(Representations, PrintedSqrtTwoPlusSqrt2Squares) {
    const QAlpha q = representation(Radical::SqrtTwoPlusSqrt2);
    const QAlpha t = q * q - QAlpha(2);
    EXPECT_EQ(t * t, QAlpha(2));
}

TEST(Representations, ExactlyOnePrintedEntryFlagged) {
    std::size_t flagged = 0;
    for (const auto& c : check_printed_representations()) {
        if (c.flagged()) {
            ++flagged;
            EXPECT_EQ(c.label, "1/sqrt(3)");
        } else {
            EXPECT_TRUE(c.equals_derived) << c.label;
        }
    }
    EXPECT_EQ(flagged, 1u);
}

TEST(Representations, RootTableRows) {
    const auto rows = verify_root_table();
    ASSERT_EQ(rows.size(), 8u);
    for (const auto& r : rows) EXPECT_TRUE(r.passed()) << r.poly.label;
    EXPECT_NEAR(rows[1].value, 0.4866, 5e-4);
}

TEST(PrimeField, SquareRoots) {
    EXPECT_EQ(sqrt_mod_p(PrimeFieldElem(0, 97))->residue(), 0u);
    const auto r = sqrt_mod_p(PrimeFieldElem(2, 97));
    ASSERT_TRUE(r.has_value());
    EXPECT_TRUE(r->residue() == 14 || r->residue() == 83);
    EXPECT_EQ((*r * *r).residue(), 2u);
    EXPECT_FALSE(sqrt_mod_p(PrimeFieldElem(2, 5)).has_value());
    EXPECT_EQ(PrimeFieldElem::from_rational(Rational(1, 2), 7).residue(), 4u);
    EXPECT_THROW(PrimeFieldElem::from_rational(Rational(1, 7), 7), DomainError);
}

TEST(PolyFp, FactorShapes) {
    auto degrees = [](std::uint64_t p) {
        std::vector<long> d;
        for (const auto& f : factor_f_mod_p(p)) {
            EXPECT_EQ(f.multiplicity, 1u);
            d.push_back(f.factor.degree());
        }
        return d;
    };
    const auto d191 = degrees(191);
    EXPECT_EQ(d191.size(), 16u);
    for (long d : d191) EXPECT_EQ(d, 1);
    const auto d5 = degrees(5);
    for (long d : d5) EXPECT_EQ(d, d5.front());
    EXPECT_TRUE(d5.front() == 1 || d5.front() == 2 || d5.front() == 4);
    const auto d193 = degrees(193);
    for (long d : d193) {
        EXPECT_EQ(d, d193.front());
        EXPECT_GT(d, 1);
    }
}

TEST(PolyFp, FactorsMultiplyBackToF) {
    for (std::uint64_t p : {5u, 7u, 191u, 193u}) {
        PolyOverFp prod = PolyOverFp::constant(1, p);
        for (const auto& f : factor_f_mod_p(p))
            for (unsigned k = 0; k < f.multiplicity; ++k) prod = prod * f.factor;
        EXPECT_EQ(prod, PolyOverFp::alpha_modulus(p)) << p;
    }
}

TEST(ExtField, ArithmeticAndSqrt) {
    const auto field = make_ext_field(PolyOverFp({5 - 2, 0, 1}, 5));  // x^2 + 3 = x^2 - 2 over F_5
    const auto two = ExtFieldElem::constant(field, 2);
    const auto r = field_sqrt(two);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(*r * *r, two);
    const ExtFieldElem x(field, PolyOverFp({1, 2}, 5));
    EXPECT_EQ(x * x.inverse(), ExtFieldElem::constant(field, 1));
}

TEST(MatrixOps, DeterminantsAndMinors) {
    const auto m = Matrix<Integer>::from_rows({{2, 1, 0}, {1, 2, 1}, {0, 1, 2}});
    EXPECT_EQ(determinant_integer(m), 4);
    const auto minors = leading_principal_minors(m);
    EXPECT_EQ(minors, (std::vector<Integer>{2, 3, 4}));
    const auto q = Matrix<Rational>::from_rows({{Rational(1, 2), 1}, {3, 4}});
    EXPECT_EQ(determinant_field(q), Rational(-1));
    EXPECT_TRUE(is_symmetric(m));
}

TEST(LinearSolve, SolvesSmallSystem) {
    const auto x = solve_rational({{2, 1}, {1, 3}}, {3, 5});
    EXPECT_EQ(x, (std::vector<Rational>{Rational(4, 5), Rational(7, 5)}));
}
