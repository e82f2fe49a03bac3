#include <gtest/gtest.h>

#include <random>

#include "hirzebruch/catalog.hpp"
#include "hirzebruch/metric.hpp"
#include "oracles.hpp"

using namespace hirzebruch;

namespace {

WeightVector uniform(std::size_t n, Rational v) { return WeightVector(n, v); }

Rational frac(long p, long q)
{
    Rational r(p, q);
    r.canonicalize();
    return r;
}

// b-matrix recomputed from the brute-force point list.
std::vector<std::vector<long>> brute_b(const Arrangement& arr)
{
    const auto inc = oracle::brute_incidence(arr);
    const std::size_t n = arr.size();
    std::vector<std::vector<long>> b(n, std::vector<long>(n, 0));
    for (std::size_t j = 0; j < n; ++j) b[j][j] = -1;
    for (const auto& p : inc.point_lines) {
        if (p.size() == 2) {
            b[p[0]][p[1]] = b[p[1]][p[0]] = 1;
        } else {
            for (std::size_t l : p) ++b[l][l];
        }
    }
    return b;
}

void expect_b_matches_oracle(const Arrangement& arr)
{
    const auto b = build_b_matrix(incidence(arr));
    const auto ref = brute_b(arr);
    for (std::size_t i = 0; i < arr.size(); ++i)
        for (std::size_t j = 0; j < arr.size(); ++j) {
            EXPECT_EQ(b(i, j), ref[i][j]) << arr.name() << " " << i << "," << j;
            EXPECT_EQ(b(i, j), b(j, i));
        }
}

}  // namespace

TEST(BMatrix, Triangle)
{
    const auto b = build_b_matrix(incidence(catalog::triangle()));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(b(i, j), i == j ? -1 : 1);
}

TEST(BMatrix, CevaThree)
{
    const auto b = build_b_matrix(incidence(catalog::ceva(3)));
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = 0; j < 9; ++j) EXPECT_EQ(b(i, j), i == j ? 3 : 0);
}

TEST(BMatrix, HesseDiagonalAndOracle)
{
    const auto arr = catalog::exceptional("hesse");
    const auto b = build_b_matrix(incidence(arr));
    for (std::size_t j = 0; j < 12; ++j) EXPECT_EQ(b(j, j), 2);
    expect_b_matches_oracle(arr);
}

TEST(BMatrix, DiagonalCountsHeavyPointsOnCatalog)
{
    for (const auto& e : catalog::entries()) {
        const auto arr = e.build();
        if (arr.size() > 21) continue;
        expect_b_matches_oracle(arr);
    }
}

TEST(Alphas, Examples)
{
    const auto ceva3 = incidence(catalog::ceva(3));
    for (const auto& a : alphas(ceva3, uniform(9, Rational(1, 3)))) {
        EXPECT_EQ(a.alpha, Rational(1, 2));
        EXPECT_EQ(a.fiber_length, 1);
    }
    for (const auto& a : alphas(ceva3, uniform(9, Rational(0)))) EXPECT_EQ(a.alpha, 1);
    EXPECT_THROW(alphas(ceva3, uniform(8, Rational(0))), LengthMismatch);
}

TEST(Alphas, MatchDirectSummation)
{
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> num(-5, 9);
    for (const char* name : {"ceva3", "ceva5", "extended_ceva3", "icosahedral", "g26"}) {
        const auto arr = catalog::by_name(name);
        WeightVector z;
        for (std::size_t i = 0; i < arr.size(); ++i) z.push_back(frac(num(rng), 7));
        std::vector<Rational> got;
        for (const auto& a : alphas(incidence(arr), z)) got.push_back(a.alpha);
        std::sort(got.begin(), got.end());
        EXPECT_EQ(got, oracle::brute_alphas(oracle::brute_incidence(arr), z)) << name;
    }
}

TEST(CheckWeights, CevaUniformPasses)
{
    for (int m = 3; m <= 8; ++m) {
        const auto r = check_weights(catalog::ceva(m), uniform(3 * static_cast<std::size_t>(m), Rational(1, m)));
        EXPECT_TRUE(r.passed()) << m;
        for (const auto& e : r.entries) EXPECT_TRUE(e.passed) << m << " " << e.id();
    }
}

TEST(CheckWeights, TriangleWeightOneFailsOnlyTheRange)
{
    const auto r = check_weights(catalog::triangle(), uniform(3, Rational(1)));
    EXPECT_TRUE(r.equations_hold);
    EXPECT_FALSE(r.weights_in_range);
    EXPECT_TRUE(r.alphas_positive);
    EXPECT_FALSE(r.passed());
}

TEST(CheckWeights, CevaThreeHalfFailsLineEquations)
{
    const auto r = check_weights(catalog::ceva(3), uniform(9, Rational(1, 2)));
    EXPECT_FALSE(r.equations_hold);
    for (const auto& e : r.entries)
        if (e.kind == ConditionKind::LineEquation) { EXPECT_EQ(e.value, Rational(1, 2)); }
    EXPECT_THROW(check_weights(catalog::ceva(3), uniform(2, Rational(0))), LengthMismatch);
}

TEST(Rows, SolverAndCheckerShareLineEquations)
{
    for (const auto& e : catalog::entries()) {
        const auto arr = e.build();
        if (arr.size() > 21) continue;
        const auto inc = incidence(arr);
        const auto b = build_b_matrix(inc);
        for (const auto& row : weight_constraints(inc))
            if (row.kind == ConditionKind::LineEquation) {
                EXPECT_EQ(row.coeffs, b.row(row.index)) << e.name;
                EXPECT_EQ(row.constant, -1);
            }
    }
}

TEST(Solve, CevaFamilyFeasibleWithValidCertificates)
{
    for (int m = 3; m <= 8; ++m) {
        const auto arr = catalog::ceva(m);
        const auto res = solve_weights(arr);
        ASSERT_TRUE(is_feasible(res)) << m;
        const auto& cert = std::get<MetricCertificate>(res);
        EXPECT_GT(cert.slack, 0);
        EXPECT_TRUE(verify_certificate(arr, res));
        const auto report = check_weights(arr, cert.z);
        EXPECT_TRUE(report.passed());
        EXPECT_GE(report.min_margin, cert.slack);
        EXPECT_EQ(to_string(aspherical_verdict(arr)), "Aspherical(LP)");
    }
}

TEST(Solve, TamperedCertificateIsRejected)
{
    const auto arr = catalog::ceva(3);
    auto cert = std::get<MetricCertificate>(solve_weights(arr));
    cert.z[0] += Rational(1, 1000);
    EXPECT_FALSE(verify_certificate(incidence(arr), cert));
}

TEST(Solve, TriangleInfeasibleWithFarkasCertificate)
{
    const auto arr = catalog::triangle();
    const auto res = solve_weights(arr);
    ASSERT_FALSE(is_feasible(res));
    EXPECT_TRUE(verify_certificate(arr, res));
    const auto v = aspherical_verdict(arr);
    EXPECT_TRUE(v.aspherical);
    EXPECT_EQ(to_string(v), "Aspherical(TriangleSpecialCase)");
}

TEST(Solve, TamperedInfeasibilityCertificateIsRejected)
{
    const auto inc = incidence(catalog::triangle());
    auto cert = std::get<InfeasibilityCertificate>(solve_weights(inc));
    ASSERT_FALSE(cert.multipliers.empty());
    auto bad = cert;
    bad.multipliers[0].second += 1;
    EXPECT_FALSE(verify_certificate(inc, bad));
    bad = cert;
    bad.multipliers.emplace_back("no_such_row", Rational(1));
    EXPECT_FALSE(verify_certificate(inc, bad));
    EXPECT_FALSE(verify_certificate(inc, InfeasibilityCertificate{}));
}

TEST(Solve, GenericArrangementsHaveNoCertificate)
{
    for (int k = 4; k <= 6; ++k)
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const auto arr = catalog::generic_random(k, seed);
            const auto res = solve_weights(arr);
            ASSERT_FALSE(is_feasible(res));
            EXPECT_TRUE(verify_certificate(arr, res));
            EXPECT_EQ(to_string(aspherical_verdict(arr)), "NoCertificate");
        }
}

TEST(Solve, DegenerateInputsHandledGracefully)
{
    for (const auto& arr : {catalog::pencil(4), catalog::pencil(1), catalog::pencil(2), catalog::ceva(2)}) {
        const auto res = solve_weights(arr);
        EXPECT_TRUE(verify_certificate(arr, res)) << arr.name();
        EXPECT_NO_THROW(aspherical_verdict(arr));
    }
}

TEST(Solve, EveryResultVerifiesOnCatalogAndRandom)
{
    for (const auto& e : catalog::entries()) {
        const auto arr = e.build();
        if (arr.size() > 21) continue;
        EXPECT_TRUE(verify_certificate(arr, solve_weights(arr))) << e.name;
    }
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto arr = catalog::random_lines(3 + static_cast<int>(seed % 6), seed, 2);
        EXPECT_TRUE(verify_certificate(arr, solve_weights(arr))) << seed;
    }
}

TEST(Solve, ScalingLinesChangesNothing)
{
    std::mt19937_64 rng(12);
    for (const char* name : {"ceva3", "triangle", "extended_ceva2", "hesse"}) {
        const auto arr = catalog::by_name(name);
        std::vector<CycloElement> s;
        while (s.size() < arr.size()) {
            auto e = oracle::random_element(arr.field_order(), rng, 4);
            if (!e.is_zero()) s.push_back(e);
        }
        const auto scaled = scale_lines(arr, s);
        EXPECT_EQ(build_b_matrix(incidence(arr)), build_b_matrix(incidence(scaled)));
        const auto a = solve_weights(arr), b = solve_weights(scaled);
        EXPECT_EQ(is_feasible(a), is_feasible(b));
        if (is_feasible(a)) { EXPECT_EQ(std::get<MetricCertificate>(a).z, std::get<MetricCertificate>(b).z); }
        else EXPECT_EQ(std::get<InfeasibilityCertificate>(a).multipliers, std::get<InfeasibilityCertificate>(b).multipliers);
        EXPECT_EQ(to_string(aspherical_verdict(arr)), to_string(aspherical_verdict(scaled)));
    }
}

TEST(Solve, Deterministic)
{
    const auto arr = catalog::extended_ceva(3);
    const auto a = solve_weights(arr), b = solve_weights(arr);
    ASSERT_EQ(is_feasible(a), is_feasible(b));
    if (is_feasible(a)) { EXPECT_EQ(std::get<MetricCertificate>(a).z, std::get<MetricCertificate>(b).z); }
}

TEST(Verdict, NonTriangleConcurrentHirzebruchIsAContradiction)
{
    // a hand-made incidence that passes the Hirzebruch count with a point of multiplicity >= 2n
    IncidenceData fake;
    fake.per_line = {{0, 1}, {0, 1}, {0, 1}};
    fake.points = {{ProjPoint(Triple{CycloElement::from_int(1, 0), CycloElement::from_int(1, 0),
                                     CycloElement::from_int(1, 1)}),
                    {0, 1, 2}},
                   {ProjPoint(Triple{CycloElement::from_int(1, 1), CycloElement::from_int(1, 0),
                                     CycloElement::from_int(1, 0)}),
                    {0, 1, 2}}};
    EXPECT_THROW(aspherical_verdict(fake, solve_weights(fake)), InternalContradiction);
}

TEST(Residual, MatchesDirectSummation)
{
    const auto tri = catalog::triangle();
    const WeightVector ones = uniform(3, Rational(1));
    EXPECT_EQ(quadratic_residual(incidence(tri), ones), oracle::brute_quadratic_residual(oracle::brute_incidence(tri), ones));
    EXPECT_EQ(quadratic_residual(incidence(tri), ones), Rational(3, 2));

    const auto c3 = catalog::ceva(3);
    const WeightVector thirds = uniform(9, Rational(1, 3));
    EXPECT_EQ(quadratic_residual(incidence(c3), thirds), oracle::brute_quadratic_residual(oracle::brute_incidence(c3), thirds));
    EXPECT_EQ(quadratic_residual(incidence(c3), thirds), Rational(-3, 2));

    EXPECT_EQ(quadratic_residual(incidence(c3), uniform(9, Rational(0))), Rational(-3, 2));
    EXPECT_THROW(quadratic_residual(incidence(c3), ones), LengthMismatch);
}

TEST(Residual, MatchesDirectSummationOnRandomWeights)
{
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> num(-9, 9);
    for (const char* name : {"ceva4", "extended_ceva2", "hesse", "klein", "pencil4"}) {
        const auto arr = catalog::by_name(name);
        const auto brute = oracle::brute_incidence(arr);
        for (int trial = 0; trial < 5; ++trial) {
            WeightVector z;
            for (std::size_t i = 0; i < arr.size(); ++i) z.push_back(frac(num(rng), 5));
            EXPECT_EQ(quadratic_residual(incidence(arr), z), oracle::brute_quadratic_residual(brute, z)) << name;
        }
    }
}

TEST(Klein, UniformWeightsAndAlphas)
{
    const auto arr = catalog::exceptional("klein");
    const auto inc = incidence(arr);
    const auto z = uniform(21, Rational(1, 7));
    EXPECT_TRUE(check_weights(inc, z).passed());
    for (const auto& a : alphas(inc, z)) {
        if (a.multiplicity == 4) { EXPECT_EQ(a.alpha, Rational(5, 7)); }
        if (a.multiplicity == 3) { EXPECT_EQ(a.alpha, Rational(11, 14)); }
    }
}
