#include <gtest/gtest.h>

#include <random>

#include "hirzebruch/exact_lp.hpp"
#include "oracles.hpp"

using namespace hirzebruch;
using lp::Sense;

namespace {

lp::Row row(std::vector<long> a, Sense s, long b)
{
    lp::Row r;
    for (long v : a) r.coeffs.emplace_back(v);
    r.sense = s;
    r.rhs = b;
    return r;
}

lp::Problem random_problem(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> nv(1, 4), nr(1, 4), coef(-4, 4), rhs(-6, 8), sense(0, 2);
    lp::Problem p;
    p.num_vars = static_cast<std::size_t>(nv(rng));
    for (std::size_t j = 0; j < p.num_vars; ++j) p.objective.emplace_back(coef(rng));
    const int rows = nr(rng);
    for (int i = 0; i < rows; ++i) {
        lp::Row r;
        for (std::size_t j = 0; j < p.num_vars; ++j) r.coeffs.emplace_back(coef(rng));
        r.sense = static_cast<Sense>(sense(rng));
        r.rhs = rhs(rng);
        p.rows.push_back(r);
    }
    // keeps the optimum finite
    lp::Row cap;
    cap.coeffs.assign(p.num_vars, Rational(1));
    cap.sense = Sense::LessEq;
    cap.rhs = 10;
    p.rows.push_back(cap);
    return p;
}

// A^T y compared against a target vector, with the sign pattern on y.
bool dual_sign_ok(const lp::Problem& p, const std::vector<Rational>& y)
{
    for (std::size_t i = 0; i < p.rows.size(); ++i) {
        if (p.rows[i].sense == Sense::LessEq && y[i] < 0) return false;
        if (p.rows[i].sense == Sense::GreaterEq && y[i] > 0) return false;
    }
    return true;
}

std::vector<Rational> at_y(const lp::Problem& p, const std::vector<Rational>& y)
{
    std::vector<Rational> out(p.num_vars, Rational(0));
    for (std::size_t i = 0; i < p.rows.size(); ++i)
        for (std::size_t j = 0; j < p.num_vars; ++j) out[j] += p.rows[i].coeffs[j] * y[i];
    return out;
}

Rational b_dot(const lp::Problem& p, const std::vector<Rational>& y)
{
    Rational v = 0;
    for (std::size_t i = 0; i < p.rows.size(); ++i) v += p.rows[i].rhs * y[i];
    return v;
}

}  // namespace

TEST(ExactLp, SmallTextbookProblem)
{
    // max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18  ->  36 at (2, 6)
    lp::Problem p;
    p.num_vars = 2;
    p.objective = {Rational(3), Rational(5)};
    p.rows = {row({1, 0}, Sense::LessEq, 4), row({0, 2}, Sense::LessEq, 12), row({3, 2}, Sense::LessEq, 18)};
    const auto r = lp::solve(p);
    ASSERT_EQ(r.status, lp::Status::Optimal);
    EXPECT_EQ(r.value, 36);
    EXPECT_EQ(r.x, (std::vector<Rational>{Rational(2), Rational(6)}));
    EXPECT_EQ(b_dot(p, r.duals), 36);
}

TEST(ExactLp, DetectsInfeasibleAndUnbounded)
{
    lp::Problem p;
    p.num_vars = 1;
    p.objective = {Rational(1)};
    p.rows = {row({1}, Sense::LessEq, 1), row({1}, Sense::GreaterEq, 2)};
    auto r = lp::solve(p);
    EXPECT_EQ(r.status, lp::Status::Infeasible);

    p.rows = {row({1}, Sense::GreaterEq, 2)};
    r = lp::solve(p);
    EXPECT_EQ(r.status, lp::Status::Unbounded);
}

TEST(ExactLp, HandlesRedundantEqualities)
{
    lp::Problem p;
    p.num_vars = 2;
    p.objective = {Rational(1), Rational(1)};
    p.rows = {row({1, 1}, Sense::Equal, 2), row({2, 2}, Sense::Equal, 4), row({1, 0}, Sense::LessEq, 5)};
    const auto r = lp::solve(p);
    ASSERT_EQ(r.status, lp::Status::Optimal);
    EXPECT_EQ(r.value, 2);
}

TEST(ExactLp, DegenerateProblemTerminates)
{
    // a classic cycling example for the largest-coefficient rule
    lp::Problem p;
    p.num_vars = 4;
    p.objective = {Rational(3, 4), Rational(-150), Rational(1, 50), Rational(-6)};
    auto r1 = lp::Row{{Rational(1, 4), Rational(-60), Rational(-1, 25), Rational(9)}, Sense::LessEq, Rational(0)};
    auto r2 = lp::Row{{Rational(1, 2), Rational(-90), Rational(-1, 50), Rational(3)}, Sense::LessEq, Rational(0)};
    auto r3 = lp::Row{{Rational(0), Rational(0), Rational(1), Rational(0)}, Sense::LessEq, Rational(1)};
    p.rows = {r1, r2, r3};
    const auto r = lp::solve(p);
    ASSERT_EQ(r.status, lp::Status::Optimal);
    EXPECT_EQ(r.value, Rational(1, 20));
}

TEST(ExactLp, MatchesVertexEnumerationWithValidDuals)
{
    std::mt19937_64 rng(99);
    int optimal = 0, infeasible = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const auto p = random_problem(rng);
        const auto oracle_value = oracle::lp_vertex_optimum(p);
        const auto r = lp::solve(p);
        ASSERT_NE(r.status, lp::Status::Unbounded);
        if (!oracle_value) {
            ASSERT_EQ(r.status, lp::Status::Infeasible) << trial;
            ++infeasible;
            // Farkas ray: A^T y >= 0, b.y < 0
            ASSERT_TRUE(dual_sign_ok(p, r.duals));
            for (const auto& v : at_y(p, r.duals)) EXPECT_GE(v, 0);
            EXPECT_LT(b_dot(p, r.duals), 0);
            continue;
        }
        ASSERT_EQ(r.status, lp::Status::Optimal) << trial;
        ++optimal;
        EXPECT_EQ(r.value, *oracle_value) << trial;
        // primal feasibility
        for (const auto& x : r.x) EXPECT_GE(x, 0);
        for (const auto& rw : p.rows) {
            Rational lhs = 0;
            for (std::size_t j = 0; j < p.num_vars; ++j) lhs += rw.coeffs[j] * r.x[j];
            if (rw.sense == Sense::LessEq) { EXPECT_LE(lhs, rw.rhs); }
            if (rw.sense == Sense::GreaterEq) { EXPECT_GE(lhs, rw.rhs); }
            if (rw.sense == Sense::Equal) { EXPECT_EQ(lhs, rw.rhs); }
        }
        // dual feasibility and strong duality
        ASSERT_TRUE(dual_sign_ok(p, r.duals));
        const auto aty = at_y(p, r.duals);
        for (std::size_t j = 0; j < p.num_vars; ++j) EXPECT_GE(aty[j], p.objective[j]);
        EXPECT_EQ(b_dot(p, r.duals), r.value);
    }
    EXPECT_GT(optimal, 50);
    EXPECT_GT(infeasible, 20);
}

TEST(ExactLp, Deterministic)
{
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 30; ++trial) {
        const auto p = random_problem(rng);
        const auto a = lp::solve(p), b = lp::solve(p);
        EXPECT_EQ(a.status, b.status);
        EXPECT_EQ(a.x, b.x);
        EXPECT_EQ(a.duals, b.duals);
        EXPECT_EQ(a.pivots, b.pivots);
    }
}
