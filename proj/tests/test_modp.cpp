#include "permhard/circuits/combinators.hpp"
#include "permhard/modp/reduce.hpp"
#include "permhard/modp/split.hpp"
#include "permhard/optics/permanent.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace permhard;

namespace {

const std::vector<std::uint64_t> kListedSplitPrimes = {191, 239, 241, 337, 383, 433, 673, 863,
                                                       911, 1103, 1151, 1249, 1583, 1871, 1873, 2017};

std::shared_ptr<const ExtFieldSpec> first_field(std::uint64_t p) { return factor_field(p, factor_f_mod_p(p).front().factor); }

}  // namespace

TEST(Split, Classification) {
    EXPECT_EQ(classify_prime(191).classification, PrimeClass::SplitComplete);
    EXPECT_EQ(classify_prime(23).classification, PrimeClass::Excluded);
    const auto r5 = classify_prime(5);
    EXPECT_TRUE(r5.classification == PrimeClass::Quadratic || r5.classification == PrimeClass::Quartic) << r5.str();
    EXPECT_THROW(classify_prime(91), DomainError);
}

TEST(Split, ShortScans) {
    EXPECT_TRUE(split_primes_below(191).empty());
    EXPECT_EQ(split_primes_below(250), (std::vector<std::uint64_t>{191, 239, 241}));
    EXPECT_THROW(split_primes_below(kSplitScanGuard + 1), GuardError);
}

TEST(Split, ListedSequenceIsExactPrefix) {
    EXPECT_EQ(split_primes_below(2018), kListedSplitPrimes);
}

TEST(Split, Prime2063AlsoSplits) {
    // the scan to 2100 finds one prime beyond the listed ones
    const auto r = classify_prime(2063);
    EXPECT_EQ(r.classification, PrimeClass::SplitComplete);
    auto all = kListedSplitPrimes;
    all.push_back(2063);
    EXPECT_EQ(split_primes_below(2100), all);
}

TEST(Split, EqualDegreeBelow500) {
    for (std::uint64_t p = 5; p < 500; ++p) {
        if (!is_prime(p) || is_excluded_prime(p)) continue;
        const auto r = classify_prime(p);
        EXPECT_TRUE(r.distinct) << p;
        EXPECT_NE(r.classification, PrimeClass::Mixed) << r.str();
        EXPECT_NE(r.classification, PrimeClass::Ramified) << r.str();
    }
}

TEST(Split, DensityNearOneSixteenth) {
    const auto d = split_density(20000);
    EXPECT_TRUE(d.within(3.0)) << "z = " << d.z();
}

TEST(Split, SquareRootWitnessInQuadraticExtension) {
    for (std::uint64_t p : {5u, 7u, 11u, 13u}) {
        const auto w = sqrt_witness_p2(p);
        EXPECT_TRUE(w.sqrt2) << p;
        EXPECT_TRUE(w.sqrt6) << p;
    }
}

TEST(Reduce, ExcludedPrimes) {
    EXPECT_THROW(check_reduction_prime(2), DomainError);
    EXPECT_THROW(check_reduction_prime(3), DomainError);
    try {
        check_reduction_prime(23);
        FAIL();
    } catch (const DomainError& e) {
        EXPECT_NE(std::string(e.what()).find("beta"), std::string::npos);
    }
    EXPECT_THROW(check_reduction_prime(100), DomainError);
}

TEST(Reduce, SigmaIsRingHomomorphism) {
    for (std::uint64_t p : {191u, 7u, 5u}) {
        const auto field = first_field(p);
        const QAlpha x = Radicals::inv_sqrt3() + QAlpha::alpha() * Rational(2, 11);
        const QAlpha y = representation(Radical::SqrtThreeMinusSqrt6) - QAlpha(7);
        EXPECT_EQ(sigma(x * y, field), sigma(x, field) * sigma(y, field)) << p;
        EXPECT_EQ(sigma(x + y, field), sigma(x, field) + sigma(y, field)) << p;
        EXPECT_EQ(sigma(Radicals::inv_sqrt2() * Radicals::inv_sqrt2(), field), ExtFieldElem::constant(field, (p + 1) / 2));
    }
}

TEST(Reduce, CertificateStaysOrthogonalAndPermanentCommutes) {
    const auto cert = certify(constant_circuit(1, false));
    const QAlpha per = permanent(cert.network.matrix);
    for (std::uint64_t p : {191u, 7u}) {
        const auto f = factor_f_mod_p(p).front().factor;
        const auto red = reduce_certificate(cert, p, f);
        EXPECT_TRUE(is_orthogonal(red.network.matrix)) << p;
        EXPECT_EQ(permanent_ext(red.network.matrix), sigma(per, factor_field(p, f))) << p;
    }
}

TEST(Pipeline, ConstantZeroAt191AndAt7) {
    for (std::uint64_t p : {191u, 7u}) {
        const auto rec = pipeline_mod_p(constant_circuit(1, false), p);
        EXPECT_TRUE(rec.all_ok()) << p;
        for (const auto& f : rec.factors) {
            EXPECT_EQ(f.delta_mod_p, 2u);
            EXPECT_TRUE(f.per.as_prime_field().has_value()) << "permanent lies in the prime subfield";
        }
    }
    const auto rec7 = pipeline_mod_p(constant_circuit(1, false), 7);
    EXPECT_GT(rec7.factors.front().g.degree(), 1);
}

TEST(Pipeline, SmallCircuitsAt191) {
    for (const auto& name : {"const0", "const1", "ident"}) {
        const auto c = permhard::testing::load(name);
        const auto rec = pipeline_mod_p(c, 191);
        ASSERT_EQ(rec.factors.size(), 16u);
        EXPECT_TRUE(rec.all_ok()) << name;
        if (rec.delta == 0) {
            for (const auto& f : rec.factors) EXPECT_TRUE(f.per.is_zero());
        }
    }
}

TEST(Pipeline, ReportLineFormat) {
    const auto rec = pipeline_mod_p(constant_circuit(1, true), 191);
    const std::string line = rec.factors.front().line();
    EXPECT_EQ(line.rfind("p=191 g=", 0), 0u);
    EXPECT_NE(line.find(" deg=1 per="), std::string::npos);
    EXPECT_NE(line.find(" delta_mod_p=189 ok=true"), std::string::npos);
}
