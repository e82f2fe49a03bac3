#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hirzebruch/arrangement.hpp"
#include "hirzebruch/cyclofield.hpp"
#include "hirzebruch/errors.hpp"

namespace hirzebruch::hopf {

using Complex = std::complex<double>;
using Vec3 = std::array<double, 3>;

struct Tolerances {
    double predicate = 1e-9;  // hull, boundary and perimeter predicates
    double grid = 1e-6;       // agreement of the sampled covering radius
};

// ------------------------------------------------------------------ vectors

inline double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline Vec3 cross(const Vec3& a, const Vec3& b)
{
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline Vec3 operator-(const Vec3& a) { return {-a[0], -a[1], -a[2]}; }
inline Vec3 operator*(double s, const Vec3& a) { return {s * a[0], s * a[1], s * a[2]}; }
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline Vec3 normalized(const Vec3& a) { return (1.0 / norm(a)) * a; }

/// Angle between two nonzero vectors, accurate near 0 and pi.
inline double angle(const Vec3& a, const Vec3& b) { return std::atan2(norm(cross(a, b)), dot(a, b)); }

// -------------------------------------------------------------- lines in C^2

/// A complex line through the origin of C^2, given by a direction (d0, d1).
class ComplexLine2 {
public:
    ComplexLine2(Complex d0, Complex d1) : d0_(d0), d1_(d1)
    {
        if (std::norm(d0) + std::norm(d1) == 0.0) throw ZeroDirection("line direction (0, 0)");
    }

    /// Exact direction over Q(zeta_m); numerics use its embedding.
    static ComplexLine2 exact(const CycloElement& a0, const CycloElement& a1)
    {
        if (a0.is_zero() && a1.is_zero()) throw ZeroDirection("line direction (0, 0)");
        ComplexLine2 l(a0.embed().value(), a1.embed().value());
        l.exact_ = std::make_pair(a0, a1);
        return l;
    }

    Complex d0() const { return d0_; }
    Complex d1() const { return d1_; }
    const std::optional<std::pair<CycloElement, CycloElement>>& exact_direction() const { return exact_; }

private:
    Complex d0_, d1_;
    std::optional<std::pair<CycloElement, CycloElement>> exact_;
};

/// Image of the Hopf circle of the line on the unit 2-sphere.
inline Vec3 base_point(const ComplexLine2& l)
{
    const Complex w0 = l.d0(), w1 = l.d1();
    const double n = std::norm(w0) + std::norm(w1);
    if (n == 0.0) throw ZeroDirection("line direction (0, 0)");
    const Complex c = std::conj(w0) * w1;
    return normalized({2 * c.real() / n, 2 * c.imag() / n, (std::norm(w0) - std::norm(w1)) / n});
}

/// Hermitian angle in [0, pi/2] between the lines.
inline double line_angle(const ComplexLine2& a, const ComplexLine2& b)
{
    const Complex inner = std::conj(a.d0()) * b.d0() + std::conj(a.d1()) * b.d1();
    const Complex det = a.d0() * b.d1() - a.d1() * b.d0();
    return std::atan2(std::abs(det), std::abs(inner));
}

/// Exact when both lines carry directions over the same field.
inline bool same_line(const ComplexLine2& a, const ComplexLine2& b, double tol)
{
    const auto &ea = a.exact_direction(), &eb = b.exact_direction();
    if (ea && eb && ea->first.order() == eb->first.order())
        return (ea->first * eb->second - ea->second * eb->first).is_zero();
    return line_angle(a, b) < tol;
}

// ---------------------------------------------------------- configurations

/// Base points on the unit sphere; the quotient metric halves all angles.
struct HopfConfig {
    std::vector<Vec3> base_points;

    static HopfConfig from_points(std::vector<Vec3> pts)
    {
        for (const auto& p : pts)
            if (std::abs(norm(p) - 1.0) > 1e-12) throw InvalidParameter("base point is not a unit vector");
        return {std::move(pts)};
    }

    static HopfConfig from_lines(const std::vector<ComplexLine2>& lines)
    {
        HopfConfig c;
        for (const auto& l : lines) c.base_points.push_back(base_point(l));
        return c;
    }

    std::size_t size() const { return base_points.size(); }
};

/// Distance in the curvature-4 quotient sphere.
inline double quotient_distance(const Vec3& a, const Vec3& b) { return 0.5 * angle(a, b); }

enum class HullStatus { Inside, Boundary, Outside };

inline std::string to_string(HullStatus s)
{
    switch (s) {
    case HullStatus::Inside: return "Inside";
    case HullStatus::Boundary: return "Boundary";
    case HullStatus::Outside: return "Outside";
    }
    return {};
}

namespace detail {

// Closest point to the origin on the triangle abc (segments and points when degenerate).
inline Vec3 closest_on_segment(const Vec3& a, const Vec3& b)
{
    const Vec3 ab = b - a;
    const double len2 = dot(ab, ab);
    if (len2 == 0.0) return a;
    const double t = std::clamp(-dot(a, ab) / len2, 0.0, 1.0);
    return a + t * ab;
}

inline Vec3 closest_on_triangle(const Vec3& a, const Vec3& b, const Vec3& c)
{
    Vec3 best = closest_on_segment(a, b);
    for (const Vec3& cand : {closest_on_segment(b, c), closest_on_segment(a, c)})
        if (norm(cand) < norm(best)) best = cand;
    const Vec3 n = cross(b - a, c - a);
    const double n2 = dot(n, n);
    if (n2 < 1e-24) return best;
    // projection of the origin onto the plane, kept if inside the triangle
    const Vec3 p = (dot(a, n) / n2) * n;
    const double u = dot(cross(b - p, c - p), n), v = dot(cross(c - p, a - p), n), w = dot(cross(a - p, b - p), n);
    if (u >= 0 && v >= 0 && w >= 0 && norm(p) < norm(best)) return p;
    return best;
}

// Origin inside the closed tetrahedron abcd (nondegenerate).
inline bool tetra_contains_origin(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d)
{
    const double vol = dot(b - a, cross(c - a, d - a));
    if (std::abs(vol) < 1e-14) return false;
    const Vec3 o{0, 0, 0};
    const double s[4] = {dot(b - o, cross(c - o, d - o)), dot(o - a, cross(c - a, d - a)),
                         dot(b - a, cross(o - a, d - a)), dot(b - a, cross(c - a, o - a))};
    for (double x : s)
        if (x * vol < 0) return false;
    return true;
}

}  // namespace detail

/// Signed distance from the origin to the boundary of the convex hull of the
/// base points: positive outside, negative inside, zero on the boundary or
/// when the hull is flat through the origin. Equals max_{|u|=1} min_i u.p_i.
inline double hull_depth(const HopfConfig& config)
{
    const auto& p = config.base_points;
    const std::size_t n = p.size();
    if (n == 0) throw InvalidParameter("empty configuration");

    double outside = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) outside = std::min(outside, norm(p[i]));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            outside = std::min(outside, norm(detail::closest_on_segment(p[i], p[j])));
            for (std::size_t k = j + 1; k < n; ++k)
                outside = std::min(outside, norm(detail::closest_on_triangle(p[i], p[j], p[k])));
        }
    bool enclosed = false;
    for (std::size_t i = 0; i < n && !enclosed; ++i)
        for (std::size_t j = i + 1; j < n && !enclosed; ++j)
            for (std::size_t k = j + 1; k < n && !enclosed; ++k)
                for (std::size_t l = k + 1; l < n && !enclosed; ++l)
                    enclosed = detail::tetra_contains_origin(p[i], p[j], p[k], p[l]);
    if (!enclosed && outside > 1e-15) return outside;

    // origin in the closed hull: nearest supporting plane
    double inside = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                const Vec3 nrm = cross(p[j] - p[i], p[k] - p[i]);
                const double len = norm(nrm);
                if (len < 1e-12) continue;
                const Vec3 u = (1.0 / len) * nrm;
                double lo = 0, hi = 0;
                for (std::size_t l = 0; l < n; ++l) {
                    const double s = dot(p[l] - p[i], u);
                    lo = std::min(lo, s);
                    hi = std::max(hi, s);
                }
                constexpr double flat = 1e-12;
                if (lo >= -flat || hi <= flat) inside = std::min(inside, std::abs(dot(p[i], u)));
            }
    if (!std::isfinite(inside)) return 0.0;  // collinear through the origin
    return -inside;
}

/// Membership of the origin in the convex hull of the base points. Outside
/// means an open hemisphere contains every base point.
inline HullStatus hull_contains_origin(const HopfConfig& config, double tol = Tolerances{}.predicate)
{
    const double h = hull_depth(config);
    if (h > tol) return HullStatus::Outside;
    if (h < -tol) return HullStatus::Inside;
    return HullStatus::Boundary;
}

struct Covering {
    double radius = 0;  // quotient metric
    Vec3 witness{0, 0, 1};
};

namespace detail {

inline double nearest_angle(const std::vector<Vec3>& pts, const Vec3& u)
{
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : pts) best = std::min(best, angle(u, p));
    return best;
}

// Local pattern search on the sphere; accepts strict improvements only.
inline void polish(const std::vector<Vec3>& pts, Vec3& u, double& f, double step)
{
    constexpr int directions = 24;
    while (step > 1e-13) {
        Vec3 e1 = normalized(std::abs(u[0]) < 0.9 ? cross(u, Vec3{1, 0, 0}) : cross(u, Vec3{0, 1, 0}));
        Vec3 e2 = cross(u, e1);
        bool moved = false;
        for (int k = 0; k < directions; ++k) {
            const double t = 2 * std::numbers::pi * k / directions;
            const Vec3 cand = normalized(u + step * (std::cos(t) * e1 + std::sin(t) * e2));
            const double g = nearest_angle(pts, cand);
            if (g > f) {
                u = cand;
                f = g;
                moved = true;
                break;
            }
        }
        if (!moved) step /= 2;
    }
}

// Candidate maximizers of the nearest-point distance built from a subset of
// the points: antipodes, bisector points of pairs, circumcenters of triples.
// `near` (optional) adds the projection of a reference point onto each bisector.
inline std::vector<Vec3> candidates(const std::vector<Vec3>& pts, const std::vector<std::size_t>& idx,
                                    const Vec3* near = nullptr)
{
    std::vector<Vec3> out;
    for (std::size_t a : idx) out.push_back(-pts[a]);
    for (std::size_t x = 0; x < idx.size(); ++x)
        for (std::size_t y = x + 1; y < idx.size(); ++y) {
            const Vec3 &p = pts[idx[x]], &q = pts[idx[y]];
            const Vec3 mid = p + q;
            if (norm(mid) > 1e-12) {
                out.push_back(-normalized(mid));
                out.push_back(normalized(mid));
            } else {
                const Vec3 perp = std::abs(p[0]) < 0.9 ? cross(p, Vec3{1, 0, 0}) : cross(p, Vec3{0, 1, 0});
                out.push_back(normalized(perp));
                out.push_back(normalized(cross(p, perp)));
            }
            if (near) {
                const Vec3 axis = p - q;
                const double a2 = dot(axis, axis);
                if (a2 > 0) {
                    const Vec3 proj = *near - (dot(*near, axis) / a2) * axis;
                    if (norm(proj) > 1e-12) out.push_back(normalized(proj));
                }
            }
            for (std::size_t z = y + 1; z < idx.size(); ++z) {
                const Vec3 nrm = cross(q - p, pts[idx[z]] - p);
                if (norm(nrm) < 1e-14) continue;
                out.push_back(normalized(nrm));
                out.push_back(-normalized(nrm));
            }
        }
    return out;
}

}  // namespace detail

/// Largest quotient distance from a point of the sphere to the nearest base
/// point, from an exhaustive candidate sweep refined by local ascent.
inline Covering covering_radius(const HopfConfig& config)
{
    const auto& pts = config.base_points;
    if (pts.empty()) throw InvalidParameter("empty configuration");
    std::vector<std::size_t> all(pts.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    Covering best;
    double f_best = -1;
    for (const auto& c : detail::candidates(pts, all)) {
        const double f = detail::nearest_angle(pts, c);
        if (f > f_best) {
            f_best = f;
            best.witness = c;
        }
    }
    detail::polish(pts, best.witness, f_best, 1e-3);
    best.radius = 0.5 * f_best;
    return best;
}

/// Independent estimate: a randomly rotated Fibonacci grid, then active-set
/// refinement around every grid point near the sampled maximum.
inline Covering covering_radius_sampled(const HopfConfig& config, std::size_t grid_points = 20000,
                                        std::uint64_t seed = 0)
{
    const auto& pts = config.base_points;
    if (pts.empty()) throw InvalidParameter("empty configuration");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    // random rotation from a normalized Gaussian quaternion
    double q[4];
    double qn = 0;
    for (double& x : q) {
        x = gauss(rng);
        qn += x * x;
    }
    qn = std::sqrt(qn);
    for (double& x : q) x /= qn;
    const double w = q[0], x = q[1], y = q[2], z = q[3];
    const std::array<Vec3, 3> rot{Vec3{1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)},
                                  Vec3{2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)},
                                  Vec3{2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)}};

    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    std::vector<std::pair<double, Vec3>> samples;
    samples.reserve(grid_points);
    for (std::size_t i = 0; i < grid_points; ++i) {
        const double zc = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / static_cast<double>(grid_points);
        const double r = std::sqrt(std::max(0.0, 1.0 - zc * zc));
        const double t = golden * static_cast<double>(i);
        const Vec3 v{r * std::cos(t), r * std::sin(t), zc};
        const Vec3 u{dot(rot[0], v), dot(rot[1], v), dot(rot[2], v)};
        samples.emplace_back(detail::nearest_angle(pts, u), u);
    }
    std::sort(samples.begin(), samples.end(), [](const auto& a, const auto& b) { return a.first > b.first; });

    const double spacing = std::sqrt(4 * std::numbers::pi / static_cast<double>(grid_points));
    Covering best{0.5 * samples.front().first, samples.front().second};
    double f_best = samples.front().first;
    const std::size_t limit = std::min<std::size_t>(samples.size(), 400);
    for (std::size_t s = 0; s < limit && samples[s].first >= samples.front().first - 3 * spacing; ++s) {
        const Vec3 u = samples[s].second;
        const double fu = samples[s].first;
        std::vector<std::size_t> active;
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (angle(u, pts[i]) <= fu + 4 * spacing) active.push_back(i);
        for (const auto& c : detail::candidates(pts, active, &u)) {
            if (angle(c, u) > 6 * spacing) continue;
            const double f = detail::nearest_angle(pts, c);
            if (f > f_best) {
                f_best = f;
                best.witness = c;
            }
        }
    }
    detail::polish(pts, best.witness, f_best, spacing);
    best.radius = 0.5 * f_best;
    return best;
}

enum class CatStatus { Cat1, Cat1Boundary, NotCat1 };

inline std::string to_string(CatStatus s)
{
    switch (s) {
    case CatStatus::Cat1: return "Cat1";
    case CatStatus::Cat1Boundary: return "Cat1Boundary";
    case CatStatus::NotCat1: return "NotCat1";
    }
    return {};
}

struct CatVerdict {
    CatStatus status = CatStatus::Cat1;
    double covering_radius = 0;  // quotient metric
    Vec3 witness{0, 0, 1};       // farthest point found
    HullStatus hull = HullStatus::Inside;
    double hull_depth = 0;
    double margin() const { return covering_radius - std::numbers::pi / 4; }
};

/// CAT(1) test for the ramification of S^3 along the Hopf circles of n >= 2
/// lines: it fails exactly when some point of the quotient sphere lies
/// farther than pi/4 from every base point.
inline CatVerdict cat1_verdict(const std::vector<ComplexLine2>& lines, const Tolerances& tol = {})
{
    if (lines.size() < 2) throw TooFewLines("CAT(1) test needs at least two lines, got " + std::to_string(lines.size()));
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j)
            if (same_line(lines[i], lines[j], tol.predicate))
                throw DuplicateLines("lines " + std::to_string(i) + " and " + std::to_string(j) + " coincide");

    const auto config = HopfConfig::from_lines(lines);
    CatVerdict v;
    v.hull_depth = hull_depth(config);
    v.hull = v.hull_depth > tol.predicate    ? HullStatus::Outside
             : v.hull_depth < -tol.predicate ? HullStatus::Inside
                                             : HullStatus::Boundary;
    const auto cover = covering_radius(config);
    v.covering_radius = cover.radius;
    v.witness = cover.witness;

    // the covering radius is (1/2) arccos(-depth); both paths must agree
    const double from_hull = 0.5 * std::acos(std::clamp(-v.hull_depth, -1.0, 1.0));
    const double quarter = std::numbers::pi / 4;
    const bool agree = std::abs(from_hull - cover.radius) <= tol.grid &&
                       (v.hull != HullStatus::Outside || cover.radius > quarter - tol.predicate) &&
                       (v.hull != HullStatus::Inside || cover.radius < quarter + tol.predicate);
    if (!agree)
        throw InternalContradiction("hull test and covering radius disagree (radius " + std::to_string(cover.radius) +
                                    ", from hull " + std::to_string(from_hull) + ")");
    v.status = v.hull == HullStatus::Outside ? CatStatus::NotCat1
               : v.hull == HullStatus::Boundary ? CatStatus::Cat1Boundary
                                                : CatStatus::Cat1;
    return v;
}

// -------------------------------------------------------- local structure

struct LocalConfig {
    std::size_t point_index = 0;
    std::size_t multiplicity = 0;
    std::vector<ComplexLine2> lines;  // tangent directions of the incident lines
    HopfConfig config;
    CatVerdict verdict;
};

/// Tangent directions at every point of multiplicity >= 2, written in an
/// orthonormal basis of the Hermitian complement of the point.
inline std::vector<LocalConfig> local_configs(const Arrangement& arr, const IncidenceData& inc,
                                              const Tolerances& tol = {})
{
    using C3 = std::array<Complex, 3>;
    auto herm = [](const C3& a, const C3& b) {
        return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1] + std::conj(a[2]) * b[2];
    };
    auto unit = [&](C3 v) {
        const double n = std::sqrt(herm(v, v).real());
        for (auto& x : v) x /= n;
        return v;
    };
    std::vector<LocalConfig> out;
    for (std::size_t idx = 0; idx < inc.points.size(); ++idx) {
        const auto& pt = inc.points[idx];
        if (pt.multiplicity() < 2) continue;
        C3 p;
        for (std::size_t k = 0; k < 3; ++k) p[k] = pt.point.coords[k].embed().value();
        p = unit(p);
        // two standard vectors least aligned with p, Gram-Schmidt against p
        std::array<std::size_t, 3> order{0, 1, 2};
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return std::abs(p[a]) < std::abs(p[b]); });
        std::array<C3, 2> basis;
        for (std::size_t b = 0; b < 2; ++b) {
            C3 v{0, 0, 0};
            v[order[b]] = 1;
            const Complex c0 = herm(p, v);
            for (std::size_t k = 0; k < 3; ++k) v[k] -= c0 * p[k];
            if (b == 1) {
                const Complex c1 = herm(basis[0], v);
                for (std::size_t k = 0; k < 3; ++k) v[k] -= c1 * basis[0][k];
            }
            basis[b] = unit(v);
        }
        LocalConfig lc;
        lc.point_index = idx;
        lc.multiplicity = pt.multiplicity();
        for (std::size_t li : pt.lines) {
            C3 a;
            for (std::size_t k = 0; k < 3; ++k) a[k] = arr[li].coeffs[k].embed().value();
            auto bilinear = [&](const C3& v) { return a[0] * v[0] + a[1] * v[1] + a[2] * v[2]; };
            lc.lines.emplace_back(bilinear(basis[1]), -bilinear(basis[0]));
        }
        lc.config = HopfConfig::from_lines(lc.lines);
        lc.verdict = cat1_verdict(lc.lines, tol);
        out.push_back(std::move(lc));
    }
    return out;
}

inline std::vector<LocalConfig> local_configs(const Arrangement& arr, const Tolerances& tol = {})
{
    return local_configs(arr, incidence(arr), tol);
}

// ---------------------------------------------------- three-point checks

namespace detail {

inline double perimeter(const Vec3& x, const Vec3& y, const Vec3& z)
{
    for (const Vec3* v : {&x, &y, &z})
        if (std::abs(norm(*v) - 1.0) > 1e-9) throw DegenerateInput("point is not on the unit sphere");
    const double a = angle(x, y), b = angle(y, z), c = angle(z, x);
    if (a < 1e-12 || b < 1e-12 || c < 1e-12) throw DegenerateInput("points are not distinct");
    return a + b + c;
}

}  // namespace detail

/// Triangle of perimeter 2 pi on the unit sphere.
inline bool three_point_s2_check(const Vec3& x, const Vec3& y, const Vec3& z, double tol = Tolerances{}.predicate)
{
    return std::abs(detail::perimeter(x, y, z) - 2 * std::numbers::pi) <= tol;
}

/// Three Hopf fibers whose base triangle has quotient perimeter pi.
inline bool three_fiber_check(const HopfConfig& config, double tol = Tolerances{}.predicate)
{
    if (config.size() != 3) throw WrongCount("three fibers required, got " + std::to_string(config.size()));
    const auto& p = config.base_points;
    return std::abs(0.5 * detail::perimeter(p[0], p[1], p[2]) - std::numbers::pi) <= tol;
}

}  // namespace hirzebruch::hopf
