#pragma once

// Report rendering. JSON objects keep keys sorted, floats carry 12
// significant digits and exact quantities are strings ("p/q", "p/q pi"), so
// identical inputs give byte-identical output.

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "hirzebruch/arrangement.hpp"
#include "hirzebruch/catalog.hpp"
#include "hirzebruch/extendability.hpp"
#include "hirzebruch/hopf.hpp"
#include "hirzebruch/json_io.hpp"
#include "hirzebruch/metric.hpp"
#include "hirzebruch/rational.hpp"

namespace hirzebruch::report {

using io::json;

inline std::string fmt12(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

/// A double rounded to 12 significant digits; -0 is folded into 0.
inline json num(double x)
{
    const double r = std::strtod(fmt12(x).c_str(), nullptr);
    return r == 0 ? json(0.0) : json(r);
}

/// Unit vectors: coordinates below 1e-12 are rounding noise and print as 0.
inline json vec(const hopf::Vec3& v)
{
    json out = json::array();
    for (double x : v) out.push_back(num(std::abs(x) < 1e-12 ? 0.0 : x));
    return out;
}

inline json exact(const Rational& r) { return to_string(r); }

inline json exact_list(const std::vector<Rational>& v)
{
    json out = json::array();
    for (const auto& r : v) out.push_back(exact(r));
    return out;
}

inline json histogram(const std::map<std::size_t, std::size_t>& h)
{
    json out = json::object();
    for (const auto& [mult, count] : h) out[std::to_string(mult)] = count;
    return out;
}

inline std::string histogram_text(const json& h)
{
    std::string out;
    for (const auto& [mult, count] : h.items())
        out += (out.empty() ? "" : ", ") + count.dump() + " of multiplicity " + mult;
    return out;
}

// ------------------------------------------------------------------ analyze

inline json analyze(const Arrangement& arr, const IncidenceData& inc)
{
    const auto hz = hirzebruch_check(inc);
    json points = json::array();
    for (const auto& p : inc.points)
        points.push_back({{"coords", io::triple_to_json(p.point.coords)},
                          {"lines", p.lines},
                          {"multiplicity", p.multiplicity()}});
    json verdict = {{"holds", hz.holds}, {"n", hz.n ? json(*hz.n) : json(nullptr)}};
    return {{"name", arr.name()},
            {"cyclotomic_order", arr.field_order()},
            {"line_count", arr.size()},
            {"point_count", inc.points.size()},
            {"points", points},
            {"multiplicities", histogram(inc.multiplicity_histogram())},
            {"per_line_counts", hz.per_line_point_counts},
            {"hirzebruch", verdict}};
}

inline std::string analyze_text(const json& r)
{
    std::ostringstream o;
    o << "arrangement " << (r["name"].get<std::string>().empty() ? "(unnamed)" : r["name"].get<std::string>())
      << ": " << r["line_count"] << " lines over Q(zeta_" << r["cyclotomic_order"] << ")\n";
    o << "points: " << r["point_count"] << "\n";
    o << "multiplicities: " << histogram_text(r["multiplicities"]);
    o << "\nper-line counts:";
    for (const auto& c : r["per_line_counts"]) o << " " << c;
    o << "\nhirzebruch: ";
    if (r["hirzebruch"]["holds"].get<bool>())
        o << "holds, n = " << r["hirzebruch"]["n"] << "\n";
    else
        o << "fails\n";
    return o.str();
}

// ------------------------------------------------------------------- metric

struct MetricOutcome {
    json report;
    Verdict verdict;
};

inline json alpha_list(const AlphaReport& alphas)
{
    json out = json::array();
    for (const auto& a : alphas)
        out.push_back({{"point", a.point_index},
                       {"multiplicity", a.multiplicity},
                       {"alpha", exact(a.alpha)},
                       {"fiber_length", to_pi_string(a.fiber_length)}});
    return out;
}

inline MetricOutcome metric_report(const Arrangement& arr, const IncidenceData& inc)
{
    const auto b = build_b_matrix(inc);
    json bm = json::array();
    for (std::size_t j = 0; j < inc.line_count(); ++j) bm.push_back(exact_list(b.row(j)));

    const auto solved = solve_weights(inc);
    const auto verdict = aspherical_verdict(inc, solved);
    json cert;
    WeightVector z_eval;
    std::string z_source;
    if (const auto* c = std::get_if<MetricCertificate>(&solved)) {
        json cones = json::array();
        for (const auto& a : c->cone_angles) cones.push_back(to_pi_string(a));
        cert = {{"z", exact_list(c->z)},
                {"slack", exact(c->slack)},
                {"alphas", alpha_list(c->alphas)},
                {"cone_angles", cones},
                {"verified", verify_certificate(inc, *c)}};
        z_eval = c->z;
        z_source = "certificate";
    } else {
        const auto& f = std::get<InfeasibilityCertificate>(solved);
        json mult = json::object();
        for (const auto& [id, lambda] : f.multipliers) mult[id] = exact(lambda);
        cert = {{"multipliers", mult},
                {"max_slack", f.max_slack ? exact(*f.max_slack) : json(nullptr)},
                {"verified", verify_certificate(inc, f)}};
        if (inc.line_count() > 0) z_eval.assign(inc.line_count(), Rational(3, static_cast<long>(inc.line_count())));
        for (auto& x : z_eval) x.canonicalize();
        z_source = "uniform";
    }

    json residual = nullptr;
    if (!z_eval.empty()) {
        const Rational r = quadratic_residual(inc, z_eval);
        residual = {{"at", z_source}, {"value", exact(r)}, {"lhs", exact(r + Rational(3, 2))}};
    }

    json rep = {{"name", arr.name()},
                {"line_count", arr.size()},
                {"b_matrix", bm},
                {"feasibility", is_feasible(solved) ? "Feasible" : "Infeasible"},
                {"certificate", cert},
                {"quadratic_residual", residual},
                {"verdict", to_string(verdict)}};
    return {rep, verdict};
}

inline std::string metric_text(const json& r)
{
    std::ostringstream o;
    o << "arrangement " << r["name"].get<std::string>() << ": " << r["line_count"] << " lines\n";
    o << "b-matrix:\n";
    for (const auto& row : r["b_matrix"]) {
        o << " ";
        for (const auto& e : row) o << " " << e.get<std::string>();
        o << "\n";
    }
    o << "feasibility: " << r["feasibility"].get<std::string>() << "\n";
    const auto& c = r["certificate"];
    if (c.contains("z")) {
        o << "z:";
        for (const auto& e : c["z"]) o << " " << e.get<std::string>();
        o << "\nslack: " << c["slack"].get<std::string>() << "\ncone angles:";
        for (const auto& e : c["cone_angles"]) o << " [" << e.get<std::string>() << "]";
        o << "\n";
        for (const auto& a : c["alphas"])
            o << "  point " << a["point"] << " (mult " << a["multiplicity"] << "): alpha "
              << a["alpha"].get<std::string>() << ", fiber " << a["fiber_length"].get<std::string>() << "\n";
    } else {
        o << "farkas multipliers:\n";
        for (const auto& [id, v] : c["multipliers"].items()) o << "  " << id << " = " << v.get<std::string>() << "\n";
    }
    o << "certificate verified: " << (c["verified"].get<bool>() ? "yes" : "no") << "\n";
    if (!r["quadratic_residual"].is_null())
        o << "quadratic residual (" << r["quadratic_residual"]["at"].get<std::string>()
          << " z): " << r["quadratic_residual"]["value"].get<std::string>() << "\n";
    o << "verdict: " << r["verdict"].get<std::string>() << "\n";
    return o.str();
}

// --------------------------------------------------------------------- hopf

inline json cat_verdict(const hopf::CatVerdict& v)
{
    return {{"status", hopf::to_string(v.status)},
            {"covering_radius", num(v.covering_radius)},
            {"covering_radius_over_pi", num(v.covering_radius / std::numbers::pi)},
            {"margin", num(v.margin())},
            {"witness", vec(v.witness)},
            {"hull", hopf::to_string(v.hull)},
            {"hull_depth", num(v.hull_depth)}};
}

inline json hopf_lines(const std::vector<hopf::ComplexLine2>& lines, const hopf::CatVerdict& v)
{
    json bps = json::array();
    for (const auto& l : lines) bps.push_back(vec(hopf::base_point(l)));
    json out = cat_verdict(v);
    out["line_count"] = lines.size();
    out["base_points"] = bps;
    return out;
}

inline json hopf_local(const Arrangement& arr, const std::vector<hopf::LocalConfig>& locals)
{
    json pts = json::array();
    bool all = true;
    for (const auto& lc : locals) {
        json e = cat_verdict(lc.verdict);
        e["point"] = lc.point_index;
        e["multiplicity"] = lc.multiplicity;
        pts.push_back(e);
        all = all && lc.verdict.status != hopf::CatStatus::NotCat1;
    }
    return {{"name", arr.name()}, {"local", pts}, {"all_cat1", all}};
}

inline std::string hopf_text(const json& r)
{
    std::ostringstream o;
    auto one = [&](const json& v) {
        o << v["status"].get<std::string>() << ", covering radius " << fmt12(v["covering_radius"].get<double>())
          << " (" << fmt12(v["covering_radius_over_pi"].get<double>()) << " pi), hull "
          << v["hull"].get<std::string>() << ", witness [" << fmt12(v["witness"][0].get<double>()) << ", "
          << fmt12(v["witness"][1].get<double>()) << ", " << fmt12(v["witness"][2].get<double>()) << "]\n";
    };
    if (r.contains("local")) {
        o << "arrangement " << r["name"].get<std::string>() << ": local Hopf configurations\n";
        for (const auto& p : r["local"]) {
            o << "  point " << p["point"] << " (mult " << p["multiplicity"] << "): ";
            one(p);
        }
        o << "all CAT(1): " << (r["all_cat1"].get<bool>() ? "yes" : "no") << "\n";
    } else {
        o << r["line_count"] << " lines: ";
        one(r);
    }
    return o.str();
}

// ----------------------------------------------------------- counterexample

inline json counterexample(const ext::CounterexampleReport& r)
{
    const auto& t = r.triangle.triangle;
    const Rational bc_pi(r.n + 1, 2 * r.n);
    Rational bc = bc_pi;
    bc.canonicalize();
    const auto& e = r.extendability;
    return {{"n", r.n},
            {"eps", exact(r.eps)},
            {"curvature", t.curvature},
            {"angles", {num(t.angles[0]), num(t.angles[1]), num(t.angles[2])}},
            {"angles_exact",
             {to_pi_string(Rational(1, r.n)), to_pi_string(bc) + " - " + to_string(r.eps),
              to_pi_string(bc) + " - " + to_string(r.eps)}},
            {"cone_angles", {num(r.triangle.cone_angles[0]), num(r.triangle.cone_angles[1]),
                             num(r.triangle.cone_angles[2])}},
            {"sides", {num(r.sides[0]), num(r.sides[1]), num(r.sides[2])}},
            {"side_margins", {num(r.side_margins[1]), num(r.side_margins[2])}},
            {"sides_exceed", r.sides_exceed},
            {"extendability",
             {{"alpha", "1/4 pi"},
              {"singular_vertices", {1, 2}},
              {"max_dist", num(e.max_dist)},
              {"sampled_max", num(e.sampled_max)},
              {"margin", num(e.margin())},
              {"witness", vec(e.witness)},
              {"witness_bary", {num(e.witness_bary[0]), num(e.witness_bary[1]), num(e.witness_bary[2])}},
              {"extendable", e.extendable}}},
            {"not_extendable", r.not_extendable},
            {"confirmed", r.confirmed()}};
}

inline std::string counterexample_text(const json& r)
{
    std::ostringstream o;
    o << "triangle n = " << r["n"] << ", eps = " << r["eps"].get<std::string>() << ", curvature "
      << r["curvature"] << "\n";
    o << "angles: " << r["angles_exact"][0].get<std::string>() << ", " << r["angles_exact"][1].get<std::string>()
      << ", " << r["angles_exact"][2].get<std::string>() << "\n";
    o << "sides: " << fmt12(r["sides"][0].get<double>()) << ", " << fmt12(r["sides"][1].get<double>()) << ", "
      << fmt12(r["sides"][2].get<double>()) << "\n";
    o << "side margins over pi/4: " << fmt12(r["side_margins"][0].get<double>()) << ", "
      << fmt12(r["side_margins"][1].get<double>()) << "\n";
    const auto& e = r["extendability"];
    o << "farthest distance to singular vertices: " << fmt12(e["max_dist"].get<double>()) << " (margin "
      << fmt12(e["margin"].get<double>()) << ")\n";
    o << "pi/4-extendable: " << (e["extendable"].get<bool>() ? "yes" : "no") << "\n";
    o << "counterexample " << (r["confirmed"].get<bool>() ? "confirmed" : "not confirmed") << "\n";
    return o.str();
}

// ------------------------------------------------------------------ catalog

inline json catalog_list()
{
    json out = json::array();
    for (const auto& e : catalog::entries()) {
        const auto& s = e.expected;
        out.push_back({{"name", e.name},
                       {"parameters", e.parameters},
                       {"line_count", s.lines},
                       {"multiplicities", histogram(s.multiplicities)},
                       {"hirzebruch_n", s.hirzebruch_n ? json(*s.hirzebruch_n) : json(nullptr)},
                       {"warning", e.warning}});
    }
    return out;
}

inline std::string catalog_list_text(const json& list)
{
    std::ostringstream o;
    for (const auto& e : list) {
        o << e["name"].get<std::string>() << ": " << e["line_count"] << " lines, "
          << histogram_text(e["multiplicities"]);
        if (!e["hirzebruch_n"].is_null()) o << ", n = " << e["hirzebruch_n"];
        if (!e["warning"].get<std::string>().empty()) o << "  [" << e["warning"].get<std::string>() << "]";
        o << "\n";
    }
    return o.str();
}

}  // namespace hirzebruch::report
