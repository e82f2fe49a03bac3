#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "hirzebruch/extendability.hpp"

using namespace hirzebruch;
using namespace hirzebruch::ext;
using hopf::Vec3;

namespace {

constexpr double pi = std::numbers::pi;

Rational r(long p, long q)
{
    Rational x(p, q);
    x.canonicalize();
    return x;
}

// Sides via the vertex embedding and plain arccos of dot products.
Triple3 sides_by_embedding(const SphTriangle& t)
{
    const auto v = unit_vertices(t);
    auto d = [](const Vec3& a, const Vec3& b) { return std::acos(std::clamp(hopf::dot(a, b), -1.0, 1.0)); };
    return {t.scale() * d(v[1], v[2]), t.scale() * d(v[0], v[2]), t.scale() * d(v[0], v[1])};
}

SphTriangle random_triangle(std::mt19937_64& rng, int curvature)
{
    std::uniform_real_distribution<double> u(0.05, pi - 0.05);
    for (;;) {
        try {
            return SphTriangle::make(u(rng), u(rng), u(rng), curvature);
        } catch (const InvalidParameters&) {
        }
    }
}

}  // namespace

TEST(Sides, Examples)
{
    const auto oct = sides_from_angles(SphTriangle::make(pi / 2, pi / 2, pi / 2, 1));
    for (double s : oct) EXPECT_NEAR(s, pi / 2, 1e-14);
    const auto eq = sides_from_angles(SphTriangle::make(2 * pi / 3, 2 * pi / 3, 2 * pi / 3, 1));
    for (double s : eq) EXPECT_NEAR(s, std::acos(-1.0 / 3.0), 1e-14);
    EXPECT_NEAR(eq[0], 1.91063, 1e-5);

    const auto t = SphTriangle::make(pi / 2, 3 * pi / 4 - 0.01, 3 * pi / 4 - 0.01, 4);
    const auto s = sides_from_angles(t);
    EXPECT_GT(s[1], pi / 4);
    EXPECT_GT(s[2], pi / 4);
    const auto ref = sides_by_embedding(t);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(s[i], ref[i], 1e-9);
}

TEST(Sides, InvalidAngles)
{
    EXPECT_THROW(SphTriangle::make(pi / 2, pi / 2, pi / 2, 2), InvalidParameters);
    EXPECT_THROW(SphTriangle::make(0.1, 0.1, 0.1, 1), InvalidParameters);
    EXPECT_THROW(SphTriangle::make(pi, 1, 1, 1), InvalidParameters);
    // the angles with +eps break B + C < pi + A
    EXPECT_THROW(SphTriangle::make(pi / 2, 3 * pi / 4 + 0.01, 3 * pi / 4 + 0.01, 4), InvalidParameters);
    // near the polar-triangle boundary the opposite side approaches pi
    EXPECT_THROW(sides_from_angles(SphTriangle::make(pi / 2, 3 * pi / 4 - 1e-15, 3 * pi / 4 - 1e-15, 1)),
                 DegenerateTriangle);
}

TEST(Sides, RoundTripOnRandomTriangles)
{
    std::mt19937_64 rng(10);
    int done = 0;
    for (int t = 0; t < 500; ++t) {
        const auto tri = random_triangle(rng, t % 2 ? 4 : 1);
        Triple3 s;
        try {
            s = sides_from_angles(tri);
        } catch (const DegenerateTriangle&) {
            continue;
        }
        // well-conditioned inputs only: sides away from 0 and pi
        bool ok = true;
        for (double x : s) ok = ok && x / tri.scale() > 1e-3 && x / tri.scale() < pi - 1e-3;
        if (!ok) continue;
        const auto back = angles_from_sides(s, tri.curvature);
        for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(back[i], tri.angles[i], 1e-9);
        const auto ref = sides_by_embedding(tri);
        for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(s[i], ref[i], 1e-9);
        ++done;
    }
    EXPECT_GT(done, 300);
}

TEST(Sides, IsoscelesGivesEqualSides)
{
    for (int n = 2; n <= 9; ++n) {
        const auto d = counterexample_triangle(n, r(1, 100));
        const auto s = sides_from_angles(d.triangle);
        EXPECT_EQ(s[1], s[2]) << n;
    }
}

TEST(Counterexample, Angles)
{
    auto d = counterexample_triangle(2, r(1, 100));
    EXPECT_DOUBLE_EQ(d.triangle.angles[0], pi / 2);
    EXPECT_DOUBLE_EQ(d.triangle.angles[1], 3 * pi / 4 - 0.01);
    EXPECT_DOUBLE_EQ(d.triangle.angles[2], 3 * pi / 4 - 0.01);
    EXPECT_DOUBLE_EQ(d.cone_angles[0], pi);
    EXPECT_DOUBLE_EQ(d.cone_angles[1], 3 * pi / 2 - 0.02);
    EXPECT_EQ(d.triangle.curvature, 4);
    EXPECT_EQ(d.distinguished, 0u);
    EXPECT_TRUE(d.singular(1));
    EXPECT_TRUE(d.singular(2));

    d = counterexample_triangle(3, r(1, 100));
    EXPECT_DOUBLE_EQ(d.triangle.angles[0], pi / 3);
    EXPECT_DOUBLE_EQ(d.triangle.angles[1], 2 * pi / 3 - 0.01);

    EXPECT_THROW(counterexample_triangle(2, Rational(2)), InvalidParameters);
    EXPECT_THROW(counterexample_triangle(1, r(1, 100)), InvalidParameters);
    EXPECT_THROW(counterexample_triangle(2, Rational(0)), InvalidParameters);
    EXPECT_THROW(counterexample_triangle(2, r(-1, 100)), InvalidParameters);
}

TEST(Counterexample, ConfirmedForSmallN)
{
    for (int n = 2; n <= 5; ++n) {
        const auto rep = verify_counterexample(n, r(1, 100));
        EXPECT_TRUE(rep.sides_exceed) << n;
        EXPECT_TRUE(rep.not_extendable) << n;
        EXPECT_TRUE(rep.confirmed()) << n;
        EXPECT_GT(rep.extendability.margin(), 0) << n;
        EXPECT_GT(rep.side_margins[1], 0) << n;
        // the farthest point is the distinguished vertex
        EXPECT_NEAR(rep.extendability.witness_bary[0], 1.0, 1e-9) << n;
        EXPECT_NEAR(rep.extendability.max_dist, std::min(rep.sides[1], rep.sides[2]), 1e-12) << n;
    }
    EXPECT_THROW(verify_counterexample(2, Rational(2)), InvalidParameters);
}

TEST(Counterexample, MarginsVaryContinuouslyInEps)
{
    // B = C decreases strictly as eps grows; margins have bounded finite differences
    double prev_angle = 10, prev_margin = 0;
    const long steps = 60;
    for (long k = 1; k <= steps; ++k) {
        const Rational eps = r(k, 1000);
        const auto rep = verify_counterexample(2, eps);
        EXPECT_LT(rep.triangle.triangle.angles[1], prev_angle);
        if (k > 1) { EXPECT_LT(std::abs(rep.extendability.margin() - prev_margin), 0.05); }
        prev_angle = rep.triangle.triangle.angles[1];
        prev_margin = rep.extendability.margin();
    }
}

TEST(Extendability, Examples)
{
    // a small triangle: every point is near a vertex
    const auto tiny = DoubledTriangle::of(SphTriangle::make(1.1, 1.1, 1.1, 1));
    const auto s = sides_from_angles(tiny.triangle);
    const auto rep = alpha_extendable(tiny, s[0] + 1e-3, {0, 1, 2});
    EXPECT_TRUE(rep.extendable);

    const auto oct = DoubledTriangle::of(SphTriangle::make(pi / 2, pi / 2, pi / 2, 1));
    const auto o = alpha_extendable(oct, pi / 2, {0, 1, 2});
    EXPECT_TRUE(o.extendable);
    EXPECT_NEAR(o.max_dist, std::acos(1 / std::sqrt(3.0)), 1e-12);
    EXPECT_NEAR(o.sampled_max, o.max_dist, 1e-6);

    const auto ce = counterexample_triangle(2, r(1, 100));
    EXPECT_FALSE(alpha_extendable(ce, pi / 4, {1, 2}).extendable);
    EXPECT_THROW(alpha_extendable(ce, pi / 4, {}), EmptySingularSet);
}

TEST(Extendability, CandidatesAgreeWithSampling)
{
    std::mt19937_64 rng(77);
    const std::vector<std::vector<std::size_t>> subsets{{0}, {1}, {2}, {0, 1}, {1, 2}, {0, 2}, {0, 1, 2}};
    int checked = 0;
    for (int t = 0; t < 150; ++t) {
        const auto tri = random_triangle(rng, t % 2 ? 4 : 1);
        try {
            sides_from_angles(tri);
        } catch (const DegenerateTriangle&) {
            continue;
        }
        const auto d = DoubledTriangle::of(tri);
        const auto rep = alpha_extendable(d, 1.0, subsets[static_cast<std::size_t>(t) % subsets.size()]);
        EXPECT_NEAR(rep.max_dist, rep.sampled_max, 1e-6) << t;
        EXPECT_GE(rep.max_dist + 1e-12, rep.sampled_max) << t;
        ++checked;
    }
    EXPECT_GT(checked, 100);
}

TEST(Extendability, OneFaceDistanceIsNeverBeatenByReflectedPaths)
{
    // a path through the mirror face is at least as long as the straight arc to the reflected vertex
    std::mt19937_64 rng(91);
    std::uniform_real_distribution<double> u(0, 1);
    for (int t = 0; t < 40; ++t) {
        const auto tri = random_triangle(rng, 1);
        try {
            sides_from_angles(tri);
        } catch (const DegenerateTriangle&) {
            continue;
        }
        const auto v = unit_vertices(tri);
        for (int k = 0; k < 50; ++k) {
            double w[3] = {u(rng), u(rng), u(rng)};
            const Vec3 x = hopf::normalized(w[0] * v[0] + w[1] * v[1] + w[2] * v[2]);
            for (std::size_t target = 0; target < 3; ++target)
                for (std::size_t e = 0; e < 3; ++e) {
                    const Vec3 nrm = hopf::normalized(hopf::cross(v[(e + 1) % 3], v[(e + 2) % 3]));
                    const Vec3 mirrored = v[target] - 2 * hopf::dot(v[target], nrm) * nrm;
                    EXPECT_LE(hopf::angle(x, v[target]), hopf::angle(x, mirrored) + 1e-12);
                }
        }
    }
}
