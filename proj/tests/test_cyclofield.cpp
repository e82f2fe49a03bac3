#include <gtest/gtest.h>

#include <numbers>
#include <random>
#include <thread>

#include "hirzebruch/cyclofield.hpp"
#include "oracles.hpp"

using namespace hirzebruch;

namespace {

CycloElement z(int m, long k = 1) { return CycloElement::zeta(m, k); }
CycloElement q(int m, long p, long d = 1) { return CycloElement::from_rational(m, Rational(p, d)); }

}  // namespace

TEST(Cyclotomic, PolynomialsMatchKnownForms)
{
    auto as_long = [](int m) {
        std::vector<long> out;
        for (const auto& c : CyclotomicField::cyclotomic_polynomial(m)) out.push_back(c.get_si());
        return out;
    };
    EXPECT_EQ(as_long(1), (std::vector<long>{-1, 1}));
    EXPECT_EQ(as_long(3), (std::vector<long>{1, 1, 1}));
    EXPECT_EQ(as_long(4), (std::vector<long>{1, 0, 1}));
    EXPECT_EQ(as_long(6), (std::vector<long>{1, -1, 1}));
    EXPECT_EQ(as_long(12), (std::vector<long>{1, 0, -1, 0, 1}));
    // Phi_105 is the first with a coefficient outside {-1, 0, 1}
    const auto p105 = as_long(105);
    EXPECT_EQ(p105.size(), 49u);
    EXPECT_TRUE(std::find(p105.begin(), p105.end(), -2) != p105.end());
}

TEST(Cyclotomic, DegreeIsEulerPhi)
{
    for (int m = 1; m <= 60; ++m) {
        std::size_t coprime = 0;
        for (int k = 1; k <= m; ++k)
            if (std::gcd(k, m) == 1) ++coprime;
        EXPECT_EQ(euler_phi(m), coprime) << m;
    }
}

TEST(Cyclotomic, AdditionExamples)
{
    EXPECT_TRUE((z(3) + (-z(3))).is_zero());
    EXPECT_TRUE((q(3, 1) + z(3) + z(3, 2)).is_zero());
    EXPECT_EQ(q(4, 1, 2) + q(4, 1, 3), q(4, 5, 6));
}

TEST(Cyclotomic, MultiplicationExamples)
{
    EXPECT_EQ(z(4) * z(4), q(4, -1));
    EXPECT_TRUE((z(5) * z(5, 4)).is_one());
    EXPECT_TRUE(((q(3, 1) + z(3)) * (q(3, 1) + z(3, 2))).is_one());
    EXPECT_THROW(z(3) * z(4), OrderMismatch);
    EXPECT_THROW(z(3) + z(4), OrderMismatch);
}

TEST(Cyclotomic, InverseExamples)
{
    EXPECT_EQ(q(7, 2).inverse(), q(7, 1, 2));
    EXPECT_EQ(z(4).inverse(), -z(4));
    const auto a = q(5, 1) + z(5);
    EXPECT_TRUE((a * inv(a)).is_one());
    EXPECT_THROW(CycloElement(5).inverse(), DivisionByZero);
    EXPECT_THROW(q(5, 1) / CycloElement(5), DivisionByZero);
}

TEST(Cyclotomic, ConjugationExamples)
{
    EXPECT_EQ(conj(z(4)), -z(4));
    EXPECT_EQ(conj(q(9, 3, 7)), q(9, 3, 7));
    EXPECT_EQ(conj(z(5, 2)), z(5, 3));
}

TEST(Cyclotomic, EmbedExamples)
{
    const auto e6 = embed(z(6));
    EXPECT_NEAR(e6.re, 0.5, 1e-15);
    EXPECT_NEAR(e6.im, std::sqrt(3.0) / 2, 1e-15);
    const auto one = embed(q(11, 1));
    EXPECT_EQ(one.re, 1.0);
    EXPECT_EQ(one.im, 0.0);
    EXPECT_EQ(one.err, 0.0);
    const auto tr = embed(z(3) + z(3, 2));
    EXPECT_NEAR(tr.re, -1.0, 1e-15);
    EXPECT_NEAR(tr.im, 0.0, 1e-15);
}

TEST(Cyclotomic, ZetaPowersReduceCorrectly)
{
    for (int m : {1, 2, 3, 5, 8, 12, 15}) {
        EXPECT_TRUE(z(m, m).is_one()) << m;
        EXPECT_EQ(z(m, -1), conj(z(m))) << m;
        CycloElement acc = q(m, 1);
        for (int k = 1; k <= 2 * m; ++k) {
            acc = acc * z(m);
            EXPECT_EQ(acc, z(m, k)) << m << " " << k;
        }
    }
}

class FieldAxioms : public ::testing::TestWithParam<int> {};

TEST_P(FieldAxioms, HoldExactlyOnRandomElements)
{
    const int m = GetParam();
    std::mt19937_64 rng(0xC0FFEE + static_cast<unsigned>(m));
    for (int trial = 0; trial < 60; ++trial) {
        const auto a = oracle::random_element(m, rng), b = oracle::random_element(m, rng),
                   c = oracle::random_element(m, rng);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_TRUE((a - a).is_zero());
        if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
        EXPECT_EQ(conj(conj(a)), a);
        EXPECT_EQ(conj(a * b), conj(a) * conj(b));
        EXPECT_EQ(conj(a + b), conj(a) + conj(b));

        // product against schoolbook multiplication followed by division by Phi_m
        const auto expect = oracle::poly_mul_mod(m, a.coeffs(), b.coeffs());
        const auto ab = a * b;
        const auto got = ab.coeffs();
        ASSERT_EQ(expect.size(), got.size());
        for (std::size_t i = 0; i < got.size(); ++i) EXPECT_EQ(expect[i], got[i]);
    }
}

TEST_P(FieldAxioms, EmbedErrorBoundCoversHighPrecisionValue)
{
    const int m = GetParam();
    std::mt19937_64 rng(42 + static_cast<unsigned>(m));
    for (int trial = 0; trial < 40; ++trial) {
        auto a = oracle::random_element(m, rng, 1000);
        if (trial % 2) a = a * oracle::random_element(m, rng, 30);
        const auto approx = embed(a);
        double diff = 0;
        oracle::eval_high_precision(a, &diff, &approx);
        EXPECT_LE(diff, approx.err) << "m=" << m << " trial=" << trial;
        EXPECT_TRUE(std::isfinite(approx.err));
    }
}

TEST_P(FieldAxioms, EmbedIsAHomomorphismNumerically)
{
    const int m = GetParam();
    std::mt19937_64 rng(7 + static_cast<unsigned>(m));
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = oracle::random_element(m, rng), b = oracle::random_element(m, rng);
        const auto ab = embed(a * b).value();
        const auto prod = embed(a).value() * embed(b).value();
        EXPECT_NEAR(std::abs(ab - prod), 0.0, 1e-9);
        EXPECT_NEAR(std::abs(embed(conj(a)).value() - std::conj(embed(a).value())), 0.0, 1e-12);
    }
}

INSTANTIATE_TEST_SUITE_P(Orders, FieldAxioms, ::testing::Values(3, 4, 5, 7, 12, 15));

TEST(Cyclotomic, TextRoundTrip)
{
    std::mt19937_64 rng(3);
    for (int m : {1, 5, 7, 15}) {
        const auto a = oracle::random_element(m, rng);
        EXPECT_EQ(from_strings(m, to_strings(a)), a);
    }
    EXPECT_THROW(from_strings(4, {"1"}), ParseError);
    EXPECT_THROW(from_strings(4, {"1", "x"}), ParseError);
    EXPECT_EQ(from_strings(4, {"2/4", "0"}), q(4, 1, 2));
}

TEST(Cyclotomic, FieldCacheIsSharedAcrossThreads)
{
    std::vector<std::thread> workers;
    std::vector<const CyclotomicField*> seen(8, nullptr);
    for (int t = 0; t < 8; ++t)
        workers.emplace_back([&, t] { seen[static_cast<std::size_t>(t)] = &CyclotomicField::get(77); });
    for (auto& w : workers) w.join();
    for (auto* f : seen) EXPECT_EQ(f, seen[0]);
    EXPECT_EQ(seen[0]->degree(), 60u);
}

TEST(Rationals, ParsingAndRendering)
{
    EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
    EXPECT_EQ(parse_rational("-0.01"), Rational(-1, 100));
    EXPECT_EQ(parse_rational(" 7 "), Rational(7));
    EXPECT_THROW(parse_rational("1/0"), ParseError);
    EXPECT_THROW(parse_rational("abc"), ParseError);
    EXPECT_EQ(to_string(Rational(-4, 6)), "-2/3");
    EXPECT_EQ(to_string(Rational(0)), "0");
    EXPECT_EQ(to_pi_string(Rational(3, 7)), "3/7 pi");
    EXPECT_EQ(to_pi_string(Rational(1)), "pi");
    EXPECT_EQ(parse_pi_multiple("3/7 pi"), Rational(3, 7));
    EXPECT_EQ(parse_pi_multiple("pi"), Rational(1));
    EXPECT_EQ(parse_pi_multiple("0"), Rational(0));
}
