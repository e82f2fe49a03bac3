#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hirzebruch/arrangement.hpp"
#include "hirzebruch/errors.hpp"
#include "hirzebruch/exact_lp.hpp"
#include "hirzebruch/rational.hpp"

namespace hirzebruch {

/// Symmetric matrix attached to an arrangement: off the diagonal b_ij = 1 iff
/// lines i and j meet at a double point; b_jj + 1 counts the points of
/// multiplicity >= 3 on line j.
class BMatrix {
public:
    explicit BMatrix(std::size_t n = 0) : entries_(n, std::vector<Rational>(n, Rational(0))) {}

    std::size_t size() const { return entries_.size(); }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_.at(i).at(j); }
    Rational& operator()(std::size_t i, std::size_t j) { return entries_.at(i).at(j); }
    const std::vector<Rational>& row(std::size_t i) const { return entries_.at(i); }

    friend bool operator==(const BMatrix&, const BMatrix&) = default;

private:
    std::vector<std::vector<Rational>> entries_;
};

inline BMatrix build_b_matrix(const IncidenceData& inc)
{
    const std::size_t n = inc.line_count();
    BMatrix b(n);
    for (std::size_t j = 0; j < n; ++j) b(j, j) = -1;
    for (const auto& p : inc.points) {
        if (p.multiplicity() == 2) {
            b(p.lines[0], p.lines[1]) = 1;
            b(p.lines[1], p.lines[0]) = 1;
        } else {
            for (std::size_t j : p.lines) b(j, j) += 1;
        }
    }
    return b;
}

using WeightVector = std::vector<Rational>;

struct HeavyPointAlpha {
    std::size_t point_index = 0;
    std::size_t multiplicity = 0;
    Rational alpha;         // 1 - (1/2) * sum of z over incident lines
    Rational fiber_length;  // 2 * alpha, in units of pi
};

using AlphaReport = std::vector<HeavyPointAlpha>;

inline void check_length(const IncidenceData& inc, const WeightVector& z)
{
    if (z.size() != inc.line_count())
        throw LengthMismatch("weight vector has " + std::to_string(z.size()) + " entries for " +
                             std::to_string(inc.line_count()) + " lines");
}

inline AlphaReport alphas(const IncidenceData& inc, const WeightVector& z)
{
    check_length(inc, z);
    AlphaReport out;
    for (std::size_t i = 0; i < inc.points.size(); ++i) {
        const auto& p = inc.points[i];
        if (p.multiplicity() < 3) continue;
        Rational sum = 0;
        for (std::size_t k : p.lines) sum += z[k];
        Rational alpha = 1 - sum / 2;
        out.push_back({i, p.multiplicity(), alpha, 2 * alpha});
    }
    return out;
}

/// Conical angle 2 (1 - z_i) around each line, in units of pi.
inline std::vector<Rational> cone_angles(const WeightVector& z)
{
    std::vector<Rational> out;
    for (const auto& zi : z) out.push_back(2 * (1 - zi));
    return out;
}

enum class ConditionKind { WeightLower, WeightUpper, LineEquation, SumEquation, AlphaPositive };

inline bool is_equality(ConditionKind k) { return k == ConditionKind::LineEquation || k == ConditionKind::SumEquation; }

inline std::string condition_id(ConditionKind kind, std::size_t index)
{
    switch (kind) {
    case ConditionKind::WeightLower: return "z_lower[" + std::to_string(index) + "]";
    case ConditionKind::WeightUpper: return "z_upper[" + std::to_string(index) + "]";
    case ConditionKind::LineEquation: return "line_eq[" + std::to_string(index) + "]";
    case ConditionKind::SumEquation: return "sum_eq";
    case ConditionKind::AlphaPositive: return "alpha[" + std::to_string(index) + "]";
    }
    return {};
}

/// One condition evaluated at a weight vector. For strict conditions `value`
/// is the margin (must be > 0); for equalities it is the residual (must be 0).
struct ConditionEntry {
    ConditionKind kind;
    std::size_t index = 0;
    Rational value;
    bool passed = false;

    std::string id() const { return condition_id(kind, index); }
};

struct ConditionReport {
    std::vector<ConditionEntry> entries;
    bool weights_in_range = true;  // 0 < z_k < 1
    bool equations_hold = true;    // line equations and sum z = 3
    bool alphas_positive = true;   // alpha_x > 0 at points of multiplicity >= 3
    Rational min_margin;           // smallest strict margin

    bool passed() const { return weights_in_range && equations_hold && alphas_positive; }
};

inline ConditionReport check_weights(const IncidenceData& inc, const WeightVector& z)
{
    check_length(inc, z);
    const std::size_t n = z.size();
    const BMatrix b = build_b_matrix(inc);
    ConditionReport r;
    bool have_margin = false;
    auto strict = [&](ConditionKind kind, std::size_t idx, Rational margin, bool& flag) {
        const bool ok = margin > 0;
        flag = flag && ok;
        if (!have_margin || margin < r.min_margin) r.min_margin = margin;
        have_margin = true;
        r.entries.push_back({kind, idx, std::move(margin), ok});
    };

    for (std::size_t k = 0; k < n; ++k) strict(ConditionKind::WeightLower, k, z[k], r.weights_in_range);
    for (std::size_t k = 0; k < n; ++k) strict(ConditionKind::WeightUpper, k, 1 - z[k], r.weights_in_range);

    for (std::size_t j = 0; j < n; ++j) {
        Rational lhs = 0;
        for (std::size_t k = 0; k < n; ++k)
            if (b(j, k) != 0) lhs += b(j, k) * z[k];
        Rational residual = lhs - 1;
        const bool ok = residual == 0;
        r.equations_hold = r.equations_hold && ok;
        r.entries.push_back({ConditionKind::LineEquation, j, std::move(residual), ok});
    }
    Rational total = 0;
    for (const auto& zk : z) total += zk;
    Rational residual = total - 3;
    r.equations_hold = r.equations_hold && residual == 0;
    r.entries.push_back({ConditionKind::SumEquation, 0, residual, residual == 0});

    for (const auto& a : alphas(inc, z)) strict(ConditionKind::AlphaPositive, a.point_index, a.alpha, r.alphas_positive);
    return r;
}

inline ConditionReport check_weights(const Arrangement& arr, const WeightVector& z)
{
    return check_weights(incidence(arr), z);
}

/// coeffs . z + constant  (= 0 for equalities, > 0 for strict conditions).
struct AffineConstraint {
    ConditionKind kind;
    std::size_t index = 0;
    std::vector<Rational> coeffs;
    Rational constant;

    std::string id() const { return condition_id(kind, index); }
    bool equality() const { return is_equality(kind); }
};

/// The full system of conditions on the weights, one row per condition, in
/// the order lower bounds, upper bounds, line equations, sum, alphas.
inline std::vector<AffineConstraint> weight_constraints(const IncidenceData& inc)
{
    const std::size_t n = inc.line_count();
    const BMatrix b = build_b_matrix(inc);
    std::vector<AffineConstraint> rows;
    auto unit = [n](std::size_t k, int v) {
        std::vector<Rational> c(n, Rational(0));
        c[k] = v;
        return c;
    };
    for (std::size_t k = 0; k < n; ++k) rows.push_back({ConditionKind::WeightLower, k, unit(k, 1), Rational(0)});
    for (std::size_t k = 0; k < n; ++k) rows.push_back({ConditionKind::WeightUpper, k, unit(k, -1), Rational(1)});
    for (std::size_t j = 0; j < n; ++j) rows.push_back({ConditionKind::LineEquation, j, b.row(j), Rational(-1)});
    rows.push_back({ConditionKind::SumEquation, 0, std::vector<Rational>(n, Rational(1)), Rational(-3)});
    for (std::size_t i = 0; i < inc.points.size(); ++i) {
        const auto& p = inc.points[i];
        if (p.multiplicity() < 3) continue;
        std::vector<Rational> c(n, Rational(0));
        for (std::size_t k : p.lines) c[k] = Rational(-1, 2);
        rows.push_back({ConditionKind::AlphaPositive, i, std::move(c), Rational(1)});
    }
    return rows;
}

struct MetricCertificate {
    WeightVector z;
    AlphaReport alphas;
    Rational slack;                    // smallest strict margin, > 0
    std::vector<Rational> cone_angles;  // 2 (1 - z_i), units of pi
};

/// Multipliers lambda_r, keyed by condition id, with lambda_r >= 0 on strict
/// rows, such that sum_r lambda_r (coeffs_r . z + constant_r) is a constant C
/// independent of z, and either some strict multiplier is positive and C <= 0,
/// or all strict multipliers vanish and C != 0.
struct InfeasibilityCertificate {
    std::vector<std::pair<std::string, Rational>> multipliers;
    std::optional<Rational> max_slack;  // optimum of the max-slack program, when it was feasible
};

using SolveResult = std::variant<MetricCertificate, InfeasibilityCertificate>;

inline bool is_feasible(const SolveResult& r) { return std::holds_alternative<MetricCertificate>(r); }

/// Decides the strict system by maximizing a common slack s:
/// equalities exact, every strict condition >= s. Feasible iff max s > 0.
inline SolveResult solve_weights(const IncidenceData& inc)
{
    const std::size_t n = inc.line_count();
    const auto rows = weight_constraints(inc);

    // variables: z+ (n), z- (n), s+, s-
    lp::Problem p;
    p.num_vars = 2 * n + 2;
    p.objective.assign(p.num_vars, Rational(0));
    p.objective[2 * n] = 1;
    p.objective[2 * n + 1] = -1;
    for (const auto& c : rows) {
        lp::Row row;
        row.coeffs.assign(p.num_vars, Rational(0));
        for (std::size_t k = 0; k < n; ++k) {
            row.coeffs[k] = c.coeffs[k];
            row.coeffs[n + k] = -c.coeffs[k];
        }
        if (c.equality()) {
            row.sense = lp::Sense::Equal;
        } else {
            row.sense = lp::Sense::GreaterEq;
            row.coeffs[2 * n] = -1;
            row.coeffs[2 * n + 1] = 1;
        }
        row.rhs = -c.constant;
        p.rows.push_back(std::move(row));
    }

    const lp::Result res = lp::solve(p);
    if (res.status == lp::Status::Unbounded)
        throw InternalContradiction("max-slack program reported unbounded");

    if (res.status == lp::Status::Optimal && res.value > 0) {
        MetricCertificate cert;
        cert.z.resize(n);
        for (std::size_t k = 0; k < n; ++k) cert.z[k] = res.x[k] - res.x[n + k];
        const auto report = check_weights(inc, cert.z);
        if (!report.passed()) throw InternalContradiction("solver weights fail the condition check");
        cert.slack = report.min_margin;
        cert.alphas = alphas(inc, cert.z);
        cert.cone_angles = cone_angles(cert.z);
        return cert;
    }

    InfeasibilityCertificate cert;
    for (std::size_t r = 0; r < rows.size(); ++r)
        if (res.duals[r] != 0) cert.multipliers.emplace_back(rows[r].id(), -res.duals[r]);
    if (res.status == lp::Status::Optimal) cert.max_slack = res.value;
    return cert;
}

inline SolveResult solve_weights(const Arrangement& arr) { return solve_weights(incidence(arr)); }

/// Exact re-check of a feasibility certificate against the arrangement.
inline bool verify_certificate(const IncidenceData& inc, const MetricCertificate& cert)
{
    if (cert.z.size() != inc.line_count() || cert.slack <= 0) return false;
    const auto report = check_weights(inc, cert.z);
    if (!report.passed()) return false;
    for (const auto& e : report.entries)
        if (!is_equality(e.kind) && e.value < cert.slack) return false;
    const auto expected = alphas(inc, cert.z);
    if (expected.size() != cert.alphas.size()) return false;
    for (std::size_t i = 0; i < expected.size(); ++i) {
        const auto &a = expected[i], &b = cert.alphas[i];
        if (a.point_index != b.point_index || a.multiplicity != b.multiplicity || a.alpha != b.alpha ||
            a.fiber_length != b.fiber_length)
            return false;
    }
    return cert.cone_angles == cone_angles(cert.z);
}

/// Recomputes the multiplier combination from freshly built condition rows.
inline bool verify_certificate(const IncidenceData& inc, const InfeasibilityCertificate& cert)
{
    const auto rows = weight_constraints(inc);
    std::map<std::string, const AffineConstraint*> by_id;
    for (const auto& r : rows) by_id[r.id()] = &r;

    const std::size_t n = inc.line_count();
    std::vector<Rational> combo(n, Rational(0));
    Rational constant = 0;
    bool strict_used = false;
    std::map<std::string, bool> seen;
    for (const auto& [id, lambda] : cert.multipliers) {
        auto it = by_id.find(id);
        if (it == by_id.end() || seen[id]) return false;
        seen[id] = true;
        const AffineConstraint& row = *it->second;
        if (!row.equality()) {
            if (lambda < 0) return false;
            if (lambda > 0) strict_used = true;
        }
        for (std::size_t k = 0; k < n; ++k)
            if (row.coeffs[k] != 0) combo[k] += lambda * row.coeffs[k];
        constant += lambda * row.constant;
    }
    for (const auto& c : combo)
        if (c != 0) return false;
    return strict_used ? constant <= 0 : constant != 0;
}

inline bool verify_certificate(const Arrangement& arr, const SolveResult& cert)
{
    const auto inc = incidence(arr);
    return std::visit([&](const auto& c) { return verify_certificate(inc, c); }, cert);
}

/// sum_{mult_x > 2} (alpha_x - 1)^2 - sum_j z_j^2 b_jj - 3/2.
inline Rational quadratic_residual(const IncidenceData& inc, const WeightVector& z)
{
    check_length(inc, z);
    const BMatrix b = build_b_matrix(inc);
    Rational total = 0;
    for (const auto& a : alphas(inc, z)) total += (a.alpha - 1) * (a.alpha - 1);
    for (std::size_t j = 0; j < z.size(); ++j) total -= z[j] * z[j] * b(j, j);
    return total - Rational(3, 2);
}

enum class AsphericalReason { LinearProgram, TriangleSpecialCase };

struct Verdict {
    bool aspherical = false;
    std::optional<AsphericalReason> reason;

    static Verdict no_certificate() { return {}; }
    static Verdict because(AsphericalReason r) { return {true, r}; }
};

inline std::string to_string(const Verdict& v)
{
    if (!v.aspherical) return "NoCertificate";
    return *v.reason == AsphericalReason::LinearProgram ? "Aspherical(LP)" : "Aspherical(TriangleSpecialCase)";
}

/// Asphericity of the complement, when certified: either the weight system is
/// solvable, or every line meets the others in n + 1 points and some point
/// has multiplicity >= 2n, which leaves only the triangle.
inline Verdict aspherical_verdict(const IncidenceData& inc, const SolveResult& solved)
{
    if (is_feasible(solved)) return Verdict::because(AsphericalReason::LinearProgram);

    const auto hz = hirzebruch_check(inc);
    if (!hz.holds) return Verdict::no_certificate();
    const std::size_t n = *hz.n;
    const bool concurrent = std::any_of(inc.points.begin(), inc.points.end(),
                                        [&](const IncidencePoint& p) { return p.multiplicity() >= 2 * n; });
    if (!concurrent) return Verdict::no_certificate();

    const bool triangle = inc.line_count() == 3 && inc.points.size() == 3 &&
                          std::all_of(inc.points.begin(), inc.points.end(),
                                      [](const IncidencePoint& p) { return p.multiplicity() == 2; });
    if (!triangle)
        throw InternalContradiction("Hirzebruch arrangement with a point of multiplicity >= 2n is not a triangle");
    return Verdict::because(AsphericalReason::TriangleSpecialCase);
}

inline Verdict aspherical_verdict(const Arrangement& arr)
{
    const auto inc = incidence(arr);
    return aspherical_verdict(inc, solve_weights(inc));
}

}  // namespace hirzebruch
