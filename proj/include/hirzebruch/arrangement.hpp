#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hirzebruch/cyclofield.hpp"
#include "hirzebruch/errors.hpp"

namespace hirzebruch {

using Triple = std::array<CycloElement, 3>;

inline Triple cross(const Triple& u, const Triple& v)
{
    return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

inline CycloElement dot(const Triple& u, const Triple& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }

inline bool is_zero(const Triple& t) { return t[0].is_zero() && t[1].is_zero() && t[2].is_zero(); }

/// Scales a nonzero triple so that its first nonzero entry is 1.
inline Triple normalized(const Triple& t)
{
    for (std::size_t i = 0; i < 3; ++i) {
        if (t[i].is_zero()) continue;
        if (t[i].is_one()) return t;
        const CycloElement s = t[i].inverse();
        Triple out = {t[0] * s, t[1] * s, t[2] * s};
        return out;
    }
    throw InvalidArrangement("zero homogeneous triple");
}

/// Lexicographic order on triples (used after normalization).
inline bool triple_less(const Triple& a, const Triple& b)
{
    for (std::size_t i = 0; i < 3; ++i) {
        int c = compare(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

/// The line a x + b y + c z = 0 of CP^2.
struct ProjLine {
    Triple coeffs;

    ProjLine() = default;
    explicit ProjLine(Triple c) : coeffs(std::move(c))
    {
        if (is_zero(coeffs)) throw InvalidArrangement("line with all coefficients zero");
    }
    ProjLine(CycloElement a, CycloElement b, CycloElement c) : ProjLine(Triple{std::move(a), std::move(b), std::move(c)}) {}

    int order() const { return coeffs[0].order(); }
};

/// A point [x : y : z] of CP^2.
struct ProjPoint {
    Triple coords;

    ProjPoint() = default;
    explicit ProjPoint(Triple c) : coords(std::move(c))
    {
        if (is_zero(coords)) throw InvalidArrangement("point with all coordinates zero");
    }
};

/// Projective equality: the cross product of the two triples vanishes.
inline bool proj_equal(const Triple& p, const Triple& q) { return is_zero(cross(p, q)); }
inline bool proj_equal(const ProjPoint& p, const ProjPoint& q) { return proj_equal(p.coords, q.coords); }
inline bool proj_equal(const ProjLine& p, const ProjLine& q) { return proj_equal(p.coeffs, q.coeffs); }

inline bool lies_on(const ProjPoint& p, const ProjLine& l) { return dot(p.coords, l.coeffs).is_zero(); }

/// Intersection point of two distinct lines.
inline ProjPoint intersect(const ProjLine& l1, const ProjLine& l2)
{
    Triple x = cross(l1.coeffs, l2.coeffs);
    if (is_zero(x)) throw CoincidentLines("lines are projectively equal");
    return ProjPoint(std::move(x));
}

/// Ordered list of pairwise distinct lines over a single cyclotomic field.
class Arrangement {
public:
    Arrangement(int field_order, std::vector<ProjLine> lines, std::string name = {})
        : field_order_(field_order), lines_(std::move(lines)), name_(std::move(name))
    {
        validate();
    }

    int field_order() const { return field_order_; }
    const std::vector<ProjLine>& lines() const { return lines_; }
    std::size_t size() const { return lines_.size(); }
    const ProjLine& operator[](std::size_t i) const { return lines_.at(i); }
    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

private:
    void validate() const
    {
        if (lines_.empty()) throw InvalidArrangement("arrangement has no lines");
        for (std::size_t i = 0; i < lines_.size(); ++i) {
            for (const auto& c : lines_[i].coeffs)
                if (c.order() != field_order_)
                    throw InvalidArrangement("line " + std::to_string(i) + " is not over Q(zeta_" +
                                             std::to_string(field_order_) + ")");
            if (is_zero(lines_[i].coeffs)) throw InvalidArrangement("line " + std::to_string(i) + " is zero");
        }
        std::map<Triple, std::size_t, decltype(&triple_less)> seen(&triple_less);
        for (std::size_t i = 0; i < lines_.size(); ++i) {
            auto [it, inserted] = seen.emplace(normalized(lines_[i].coeffs), i);
            if (!inserted)
                throw InvalidArrangement("duplicate line: lines " + std::to_string(it->second) + " and " +
                                         std::to_string(i) + " are projectively equal");
        }
    }

    int field_order_;
    std::vector<ProjLine> lines_;
    std::string name_;
};

struct IncidencePoint {
    ProjPoint point;                 // normalized: first nonzero coordinate is 1
    std::vector<std::size_t> lines;  // sorted indices of incident lines

    std::size_t multiplicity() const { return lines.size(); }
};

/// Intersection points of an arrangement with their incident lines.
struct IncidenceData {
    std::vector<IncidencePoint> points;
    std::vector<std::vector<std::size_t>> per_line;  // point indices on each line, ascending

    std::size_t line_count() const { return per_line.size(); }

    /// multiplicity -> number of points
    std::map<std::size_t, std::size_t> multiplicity_histogram() const
    {
        std::map<std::size_t, std::size_t> h;
        for (const auto& p : points) ++h[p.multiplicity()];
        return h;
    }

    std::vector<std::size_t> multiplicities() const
    {
        std::vector<std::size_t> out;
        for (const auto& p : points) out.push_back(p.multiplicity());
        return out;
    }
};

/// Groups all pairwise intersections by projective equality. Points are
/// ordered canonically (lexicographically on normalized coordinates).
inline IncidenceData incidence(const Arrangement& arr)
{
    const std::size_t n = arr.size();
    std::map<Triple, std::vector<std::size_t>, decltype(&triple_less)> groups(&triple_less);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Triple p = normalized(intersect(arr[i], arr[j]).coords);
            auto& members = groups[std::move(p)];
            members.push_back(i);
            members.push_back(j);
        }

    IncidenceData out;
    out.per_line.resize(n);
    for (auto& [coords, members] : groups) {
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        const std::size_t index = out.points.size();
        for (std::size_t l : members) out.per_line[l].push_back(index);
        out.points.push_back({ProjPoint(coords), std::move(members)});
    }
    return out;
}

struct HirzebruchReport {
    bool holds = false;
    std::optional<std::size_t> n;  // set when holds
    std::vector<std::size_t> per_line_point_counts;
};

/// 3n lines, each meeting the others at exactly n + 1 points.
inline HirzebruchReport hirzebruch_check(const IncidenceData& inc)
{
    HirzebruchReport r;
    for (const auto& pts : inc.per_line) r.per_line_point_counts.push_back(pts.size());
    const std::size_t lines = inc.line_count();
    if (lines == 0 || lines % 3 != 0) return r;
    const std::size_t n = lines / 3;
    for (std::size_t c : r.per_line_point_counts)
        if (c != n + 1) return r;
    r.holds = true;
    r.n = n;
    return r;
}

inline HirzebruchReport hirzebruch_check(const Arrangement& arr) { return hirzebruch_check(incidence(arr)); }

using Matrix3 = std::array<Triple, 3>;

/// Pulls every line back along the linear map M: the covector l becomes l * M.
inline Arrangement transform(const Arrangement& arr, const Matrix3& m)
{
    std::vector<ProjLine> out;
    out.reserve(arr.size());
    for (const auto& l : arr.lines()) {
        Triple t;
        for (std::size_t j = 0; j < 3; ++j) t[j] = l.coeffs[0] * m[0][j] + l.coeffs[1] * m[1][j] + l.coeffs[2] * m[2][j];
        out.emplace_back(std::move(t));
    }
    return Arrangement(arr.field_order(), std::move(out), arr.name());
}

inline CycloElement determinant(const Matrix3& m) { return dot(m[0], cross(m[1], m[2])); }

/// Multiplies line i by scalars[i] (nonzero).
inline Arrangement scale_lines(const Arrangement& arr, const std::vector<CycloElement>& scalars)
{
    if (scalars.size() != arr.size()) throw LengthMismatch("one scalar per line required");
    std::vector<ProjLine> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (scalars[i].is_zero()) throw InvalidParameter("zero scalar");
        const auto& c = arr[i].coeffs;
        out.emplace_back(c[0] * scalars[i], c[1] * scalars[i], c[2] * scalars[i]);
    }
    return Arrangement(arr.field_order(), std::move(out), arr.name());
}

}  // namespace hirzebruch
