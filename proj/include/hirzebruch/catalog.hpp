#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "hirzebruch/arrangement.hpp"
#include "hirzebruch/detail/exceptional_data.hpp"
#include "hirzebruch/errors.hpp"
#include "hirzebruch/json_io.hpp"

namespace hirzebruch::catalog {

namespace detail {

inline CycloElement c(int order, long v) { return CycloElement::from_int(order, v); }

inline std::vector<ProjLine> ceva_lines(int m)
{
    std::vector<ProjLine> lines;
    const auto one = c(m, 1), zero = c(m, 0);
    for (int k = 0; k < m; ++k) lines.emplace_back(one, -CycloElement::zeta(m, k), zero);
    for (int k = 0; k < m; ++k) lines.emplace_back(zero, one, -CycloElement::zeta(m, k));
    for (int k = 0; k < m; ++k) lines.emplace_back(-CycloElement::zeta(m, k), zero, one);
    return lines;
}

}  // namespace detail

/// Ceva arrangement: x - z^k y, y - z^k z, z - z^k x for the m-th roots of unity.
inline Arrangement ceva(int m)
{
    if (m < 2) throw InvalidParameter("ceva(m) needs m >= 2, got " + std::to_string(m));
    return Arrangement(m, detail::ceva_lines(m), "ceva" + std::to_string(m));
}

/// Ceva arrangement together with the three coordinate lines.
inline Arrangement extended_ceva(int m)
{
    if (m < 2) throw InvalidParameter("extended_ceva(m) needs m >= 2, got " + std::to_string(m));
    auto lines = detail::ceva_lines(m);
    const auto one = detail::c(m, 1), zero = detail::c(m, 0);
    lines.emplace_back(one, zero, zero);
    lines.emplace_back(zero, one, zero);
    lines.emplace_back(zero, zero, one);
    return Arrangement(m, std::move(lines), "extended_ceva" + std::to_string(m));
}

/// The coordinate triangle xyz = 0.
inline Arrangement triangle()
{
    const auto one = detail::c(1, 1), zero = detail::c(1, 0);
    return Arrangement(1, {ProjLine(one, zero, zero), ProjLine(zero, one, zero), ProjLine(zero, zero, one)},
                       "triangle");
}

/// k lines through [0:0:1]: y = 0 and x - j y = 0 for j = 0..k-2.
inline Arrangement pencil(int k)
{
    if (k < 1) throw InvalidParameter("pencil(k) needs k >= 1");
    std::vector<ProjLine> lines{ProjLine(detail::c(1, 0), detail::c(1, 1), detail::c(1, 0))};
    for (int j = 0; j + 1 < k; ++j) lines.emplace_back(detail::c(1, 1), detail::c(1, -j), detail::c(1, 0));
    return Arrangement(1, std::move(lines), "pencil" + std::to_string(k));
}

/// k rational lines with coefficients drawn uniformly from [-bound, bound];
/// zero and repeated lines are redrawn, coincidences of points are kept.
inline Arrangement random_lines(int k, std::uint64_t seed, int bound = 9)
{
    if (k < 1 || bound < 1) throw InvalidParameter("random_lines needs k >= 1 and bound >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-bound, bound);
    std::vector<ProjLine> lines;
    std::vector<Triple> seen;
    while (static_cast<int>(lines.size()) < k) {
        Triple t{detail::c(1, coeff(rng)), detail::c(1, coeff(rng)), detail::c(1, coeff(rng))};
        if (is_zero(t)) continue;
        if (std::any_of(seen.begin(), seen.end(), [&](const Triple& s) { return proj_equal(s, t); })) continue;
        seen.push_back(t);
        lines.emplace_back(std::move(t));
    }
    return Arrangement(1, std::move(lines), "random" + std::to_string(k));
}

/// k lines in general position: redraws until every intersection point is a double point.
inline Arrangement generic_random(int k, std::uint64_t seed)
{
    if (k < 1) throw InvalidParameter("generic_random(k) needs k >= 1");
    std::mt19937_64 rng(seed);
    for (;;) {
        Arrangement arr = random_lines(k, rng(), 9);
        const auto inc = incidence(arr);
        if (std::all_of(inc.points.begin(), inc.points.end(),
                        [](const IncidencePoint& p) { return p.multiplicity() == 2; })) {
            arr.set_name("generic" + std::to_string(k));
            return arr;
        }
    }
}

/// Canonical name for the exceptional reflection arrangements, or nullopt.
inline std::optional<std::string> exceptional_key(std::string_view name)
{
    std::string s(name);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return std::tolower(ch); });
    if (s == "icosahedral" || s == "g23") return "icosahedral";
    if (s == "klein" || s == "g24") return "klein";
    if (s == "hesse" || s == "hesse_family" || s == "g25") return "hesse";
    if (s == "g26" || s == "extended_hesse") return "g26";
    if (s == "valentiner" || s == "g27") return "valentiner";
    return std::nullopt;
}

/// Exceptional reflection arrangements G23..G27, shipped as exact tables.
inline Arrangement exceptional(std::string_view name)
{
    const auto key = exceptional_key(name);
    if (!key) throw UnknownName("unknown exceptional arrangement '" + std::string(name) + "'");
    std::string_view data;
    if (*key == "icosahedral") data = hirzebruch::detail::k_icosahedral_json;
    if (*key == "klein") data = hirzebruch::detail::k_klein_json;
    if (*key == "hesse") data = hirzebruch::detail::k_hesse_json;
    if (*key == "g26") data = hirzebruch::detail::k_g26_json;
    if (*key == "valentiner") data = hirzebruch::detail::k_valentiner_json;
    return io::arrangement_from_json(io::json::parse(data));
}

/// Combinatorial signature: line count, multiplicity histogram, Hirzebruch n.
struct Signature {
    std::size_t lines = 0;
    std::map<std::size_t, std::size_t> multiplicities;
    std::optional<std::size_t> hirzebruch_n;

    friend bool operator==(const Signature&, const Signature&) = default;
};

inline Signature signature_of(const Arrangement& arr)
{
    const auto inc = incidence(arr);
    return {arr.size(), inc.multiplicity_histogram(), hirzebruch_check(inc).n};
}

struct CatalogEntry {
    std::string name;
    std::string parameters;
    Signature expected;
    std::string warning;
    std::function<Arrangement()> build;
};

inline Signature ceva_signature(std::size_t m)
{
    Signature s{3 * m, {}, m};
    s.multiplicities[3] += m * m;
    s.multiplicities[m] += 3;
    return s;
}

inline Signature extended_ceva_signature(std::size_t m)
{
    Signature s{3 * m + 3, {}, m + 1};
    s.multiplicities[2] += 3 * m;
    s.multiplicities[3] += m * m;
    s.multiplicities[m + 2] += 3;
    return s;
}

inline const std::vector<CatalogEntry>& entries()
{
    static const std::vector<CatalogEntry> list = [] {
        std::vector<CatalogEntry> out;
        for (int m = 2; m <= 8; ++m)
            out.push_back({"ceva" + std::to_string(m), "m=" + std::to_string(m),
                           ceva_signature(static_cast<std::size_t>(m)),
                           m == 2 ? "ceva2 lies below the usual range m >= 3 of the Ceva family" : "",
                           [m] { return ceva(m); }});
        for (int m = 2; m <= 5; ++m)
            out.push_back({"extended_ceva" + std::to_string(m), "m=" + std::to_string(m),
                           extended_ceva_signature(static_cast<std::size_t>(m)), "",
                           [m] { return extended_ceva(m); }});
        out.push_back({"triangle", "", {3, {{2, 3}}, 1}, "", [] { return triangle(); }});
        out.push_back({"pencil4", "k=4", {4, {{4, 1}}, std::nullopt}, "", [] { return pencil(4); }});
        out.push_back({"icosahedral", "G23", {15, {{2, 15}, {3, 10}, {5, 6}}, 5}, "",
                       [] { return exceptional("icosahedral"); }});
        out.push_back({"klein", "G24", {21, {{3, 28}, {4, 21}}, 7}, "", [] { return exceptional("klein"); }});
        out.push_back({"hesse", "G25", {12, {{2, 12}, {4, 9}}, 4}, "", [] { return exceptional("hesse"); }});
        out.push_back({"g26", "G26", {21, {{2, 36}, {4, 9}, {5, 12}}, 7}, "", [] { return exceptional("g26"); }});
        out.push_back({"valentiner", "G27", {45, {{3, 120}, {4, 45}, {5, 36}}, 15}, "",
                       [] { return exceptional("valentiner"); }});
        return out;
    }();
    return list;
}

/// Resolves a catalog name: listed entries, exceptional aliases, and the
/// parametric forms cevaM, extended_cevaM, pencilK, genericK, randomK.
inline Arrangement by_name(std::string_view name, std::uint64_t seed = 0)
{
    for (const auto& e : entries())
        if (e.name == name) return e.build();
    if (exceptional_key(name)) return exceptional(name);

    auto parametric = [&](std::string_view prefix) -> std::optional<int> {
        if (name.size() <= prefix.size() || name.substr(0, prefix.size()) != prefix) return std::nullopt;
        const auto digits = name.substr(prefix.size());
        if (!std::all_of(digits.begin(), digits.end(), [](unsigned char ch) { return std::isdigit(ch); }))
            return std::nullopt;
        if (digits.size() > 4) throw InvalidParameter("parameter too large in '" + std::string(name) + "'");
        return std::stoi(std::string(digits));
    };
    if (auto m = parametric("extended_ceva")) return extended_ceva(*m);
    if (auto m = parametric("ceva")) return ceva(*m);
    if (auto k = parametric("pencil")) return pencil(*k);
    if (auto k = parametric("generic")) return generic_random(*k, seed);
    if (auto k = parametric("random")) return random_lines(*k, seed);
    throw UnknownName("unknown catalog entry '" + std::string(name) + "'");
}

}  // namespace hirzebruch::catalog
