#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "hirzebruch/errors.hpp"
#include "hirzebruch/hopf.hpp"
#include "hirzebruch/rational.hpp"

namespace hirzebruch::ext {

using hopf::Vec3;
using hopf::operator+;
using hopf::operator-;
using hopf::operator*;
using Triple3 = std::array<double, 3>;

/// Spherical triangle given by its angles, on the sphere of curvature 1 or 4.
struct SphTriangle {
    Triple3 angles{};  // A, B, C; side a is opposite A
    int curvature = 1;

    static SphTriangle make(double a, double b, double c, int curvature)
    {
        if (curvature != 1 && curvature != 4) throw InvalidParameters("curvature must be 1 or 4");
        for (double x : {a, b, c})
            if (!(x > 0 && x < std::numbers::pi)) throw InvalidParameters("triangle angle outside (0, pi)");
        if (!(a + b + c > std::numbers::pi)) throw InvalidParameters("angle sum must exceed pi");
        // the polar triangle has sides pi - A, pi - B, pi - C
        if (!(b + c < std::numbers::pi + a && a + c < std::numbers::pi + b && a + b < std::numbers::pi + c))
            throw InvalidParameters("no spherical triangle has these angles");
        return {{a, b, c}, curvature};
    }

    double scale() const { return curvature == 4 ? 0.5 : 1.0; }
};

/// Side lengths (a, b, c) in the metric of the stated curvature, by the polar law of cosines.
inline Triple3 sides_from_angles(const SphTriangle& t)
{
    Triple3 out{};
    for (std::size_t i = 0; i < 3; ++i) {
        const double A = t.angles[i], B = t.angles[(i + 1) % 3], C = t.angles[(i + 2) % 3];
        const double c = (std::cos(A) + std::cos(B) * std::cos(C)) / (std::sin(B) * std::sin(C));
        if (c <= -1.0 + 1e-12) throw DegenerateTriangle("side of length pi");
        if (c > 1.0 + 1e-12) throw InvalidParameters("no spherical triangle has these angles");
        out[i] = t.scale() * std::acos(std::clamp(c, -1.0, 1.0));
    }
    return out;
}

/// Angles from side lengths given in the metric of the stated curvature.
inline Triple3 angles_from_sides(const Triple3& sides, int curvature)
{
    if (curvature != 1 && curvature != 4) throw InvalidParameters("curvature must be 1 or 4");
    const double k = curvature == 4 ? 2.0 : 1.0;
    Triple3 out{};
    for (std::size_t i = 0; i < 3; ++i) {
        const double a = k * sides[i], b = k * sides[(i + 1) % 3], c = k * sides[(i + 2) % 3];
        const double v = (std::cos(a) - std::cos(b) * std::cos(c)) / (std::sin(b) * std::sin(c));
        out[i] = std::acos(std::clamp(v, -1.0, 1.0));
    }
    return out;
}

/// Vertices on the unit sphere: A at the pole, B in the xz-plane, C with positive y.
inline std::array<Vec3, 3> unit_vertices(const SphTriangle& t)
{
    const auto s = sides_from_angles(t);
    const double b = s[1] / t.scale(), c = s[2] / t.scale(), A = t.angles[0];
    return {Vec3{0, 0, 1}, Vec3{std::sin(c), 0, std::cos(c)},
            Vec3{std::sin(b) * std::cos(A), std::sin(b) * std::sin(A), std::cos(b)}};
}

/// Two copies of a triangle glued along the boundary.
struct DoubledTriangle {
    SphTriangle triangle;
    Triple3 cone_angles{};          // twice the triangle angles
    std::size_t distinguished = 0;  // vertex whose fiber upstairs is regular

    static DoubledTriangle of(const SphTriangle& t, std::size_t distinguished = 0)
    {
        return {t, {2 * t.angles[0], 2 * t.angles[1], 2 * t.angles[2]}, distinguished};
    }

    bool singular(std::size_t v, double tol = 1e-12) const
    {
        return std::abs(cone_angles.at(v) - 2 * std::numbers::pi) > tol;
    }
};

/// Angles pi/n at A and pi (n + 1)/(2n) - eps at B and C, curvature 4.
/// The minus sign keeps B + C < pi + A, without which no such triangle exists.
inline DoubledTriangle counterexample_triangle(int n, const Rational& eps)
{
    if (n < 2) throw InvalidParameters("n must be at least 2");
    if (eps <= 0) throw InvalidParameters("eps must be positive");
    const double e = eps.get_d();
    const double a = std::numbers::pi / n;
    const double bc = std::numbers::pi * (n + 1) / (2.0 * n) - e;
    return DoubledTriangle::of(SphTriangle::make(a, bc, bc, 4), 0);
}

struct ExtendabilityReport {
    double max_dist = 0;  // largest distance to the singular set, intrinsic metric
    double alpha = 0;
    bool extendable = false;
    Vec3 witness{0, 0, 1};     // farthest point, unit-sphere model of one face
    Triple3 witness_bary{};    // its normalized barycentric weights
    double sampled_max = 0;    // independent barycentric sampling estimate
    double margin() const { return max_dist - alpha; }
};

namespace detail {

struct Face {
    std::array<Vec3, 3> v;
    std::array<Vec3, 3> inward;  // inward normals of the edge planes opposite each vertex

    explicit Face(const std::array<Vec3, 3>& verts) : v(verts)
    {
        for (std::size_t i = 0; i < 3; ++i) {
            Vec3 n = hopf::cross(v[(i + 1) % 3], v[(i + 2) % 3]);
            if (hopf::dot(n, v[i]) < 0) n = -n;
            inward[i] = hopf::normalized(n);
        }
    }

    bool contains(const Vec3& x, double tol = 1e-12) const
    {
        for (const auto& n : inward)
            if (hopf::dot(n, x) < -tol) return false;
        return true;
    }

    Triple3 bary(const Vec3& x) const
    {
        Triple3 w{};
        double sum = 0;
        for (std::size_t i = 0; i < 3; ++i) {
            w[i] = std::max(0.0, hopf::dot(inward[i], x) / hopf::dot(inward[i], v[i]));
            sum += w[i];
        }
        for (auto& x2 : w) x2 /= sum;
        return w;
    }
};

inline double nearest(const std::vector<Vec3>& sing, const Vec3& x)
{
    double best = 1e300;
    for (const auto& s : sing) best = std::min(best, hopf::angle(x, s));
    return best;
}

}  // namespace detail

/// Largest distance from a point of the double to the chosen vertices,
/// evaluated on one face by candidate enumeration and checked by sampling.
inline ExtendabilityReport alpha_extendable(const DoubledTriangle& d, double alpha, const std::vector<std::size_t>& singular,
                                            std::size_t samples_per_edge = 300)
{
    if (singular.empty()) throw EmptySingularSet("singular vertex set is empty");
    for (std::size_t s : singular)
        if (s > 2) throw InvalidParameters("vertex index out of range");
    const detail::Face face(unit_vertices(d.triangle));
    std::vector<Vec3> sing;
    for (std::size_t s : singular) sing.push_back(face.v[s]);

    std::vector<Vec3> cand(face.v.begin(), face.v.end());
    for (const auto& s : sing) cand.push_back(-s);
    for (std::size_t i = 0; i < sing.size(); ++i)
        for (std::size_t j = i + 1; j < sing.size(); ++j) {
            const Vec3 mid = sing[i] + sing[j];
            if (hopf::norm(mid) > 1e-12) cand.push_back(-hopf::normalized(mid));
            for (std::size_t k = j + 1; k < sing.size(); ++k) {
                const Vec3 n = hopf::cross(sing[j] - sing[i], sing[k] - sing[i]);
                if (hopf::norm(n) < 1e-14) continue;
                cand.push_back(hopf::normalized(n));
                cand.push_back(-hopf::normalized(n));
            }
        }
    for (std::size_t e = 0; e < 3; ++e) {
        const Vec3& plane = face.inward[e];
        // points of the edge farthest from a single vertex
        for (const auto& s : sing) {
            const Vec3 proj = s - hopf::dot(s, plane) * plane;
            if (hopf::norm(proj) > 1e-12) {
                cand.push_back(hopf::normalized(proj));
                cand.push_back(-hopf::normalized(proj));
            }
        }
        // points of the edge equidistant from two vertices
        for (std::size_t i = 0; i < sing.size(); ++i)
            for (std::size_t j = i + 1; j < sing.size(); ++j) {
                const Vec3 dir = hopf::cross(plane, sing[i] - sing[j]);
                if (hopf::norm(dir) < 1e-14) continue;
                cand.push_back(hopf::normalized(dir));
                cand.push_back(-hopf::normalized(dir));
            }
    }

    ExtendabilityReport r;
    r.alpha = alpha;
    double best = -1;
    for (const auto& c : cand) {
        if (!face.contains(c, 1e-10)) continue;
        const double g = detail::nearest(sing, c);
        if (g > best) {
            best = g;
            r.witness = c;
        }
    }

    // barycentric sampling, then a constrained pattern search from the best
    // samples; besides a fan of directions it moves along edges and along
    // bisectors of vertex pairs, where the maximum typically sits
    const std::size_t N = std::max<std::size_t>(samples_per_edge, 2);
    std::vector<std::pair<double, Vec3>> grid;
    for (std::size_t i = 0; i <= N; ++i)
        for (std::size_t j = 0; i + j <= N; ++j) {
            const double wi = double(i) / double(N), wj = double(j) / double(N), wk = 1.0 - wi - wj;
            const Vec3 x = hopf::normalized(wi * face.v[0] + wj * face.v[1] + wk * face.v[2]);
            grid.emplace_back(detail::nearest(sing, x), x);
        }
    std::partial_sort(grid.begin(), grid.begin() + std::min<std::ptrdiff_t>(12, std::ssize(grid)), grid.end(),
                      [](const auto& a, const auto& b) { return a.first > b.first; });
    std::vector<Vec3> planes(face.inward.begin(), face.inward.end());
    for (std::size_t i = 0; i < sing.size(); ++i)
        for (std::size_t j = i + 1; j < sing.size(); ++j)
            if (hopf::norm(sing[i] - sing[j]) > 1e-12) planes.push_back(hopf::normalized(sing[i] - sing[j]));
    double sampled = grid.front().first;
    for (std::size_t start = 0; start < std::min<std::size_t>(12, grid.size()); ++start) {
        Vec3 at = grid[start].second;
        double val = grid[start].first;
        const double first_step = 4.0 / double(N);
        double step = first_step;
        while (step > 1e-13) {
            const Vec3 e1 = hopf::normalized(std::abs(at[0]) < 0.9 ? hopf::cross(at, Vec3{1, 0, 0})
                                                                    : hopf::cross(at, Vec3{0, 1, 0}));
            const Vec3 e2 = hopf::cross(at, e1);
            std::vector<Vec3> dirs;
            for (int k = 0; k < 24; ++k) {
                const double t = 2 * std::numbers::pi * k / 24;
                dirs.push_back(std::cos(t) * e1 + std::sin(t) * e2);
            }
            for (const auto& pl : planes) {
                const Vec3 t = hopf::cross(pl, at);
                if (hopf::norm(t) < 1e-12) continue;
                dirs.push_back(hopf::normalized(t));
                dirs.push_back(-hopf::normalized(t));
            }
            bool moved = false;
            for (const auto& dir : dirs) {
                const Vec3 x = hopf::normalized(at + step * dir);
                if (!face.contains(x, 0.0)) continue;
                const double g = detail::nearest(sing, x);
                if (g > val) {
                    val = g;
                    at = x;
                    moved = true;
                    break;
                }
            }
            step = moved ? std::min(2 * step, first_step) : step / 2;
        }
        sampled = std::max(sampled, val);
    }

    const double s = d.triangle.scale();
    r.max_dist = s * best;
    r.sampled_max = s * sampled;
    r.witness_bary = face.bary(r.witness);
    r.extendable = r.max_dist <= alpha + 1e-9;
    return r;
}

struct CounterexampleReport {
    int n = 0;
    Rational eps;
    DoubledTriangle triangle;
    Triple3 sides{};               // curvature-4 lengths, side i opposite vertex i
    Triple3 side_margins{};        // b - pi/4 and c - pi/4 in slots 1 and 2; slot 0 unused
    bool sides_exceed = false;     // both sides at the distinguished vertex exceed pi/4
    ExtendabilityReport extendability;
    bool not_extendable = false;   // singular set = the two other vertices
    bool confirmed() const { return sides_exceed && not_extendable; }
};

/// Checks that the two sides at the pi/n vertex exceed pi/4 and that the
/// double is not pi/4-extendable with respect to the two other vertices.
inline CounterexampleReport verify_counterexample(int n, const Rational& eps)
{
    CounterexampleReport r;
    r.n = n;
    r.eps = eps;
    r.triangle = counterexample_triangle(n, eps);
    r.sides = sides_from_angles(r.triangle.triangle);
    const double quarter = std::numbers::pi / 4;
    r.side_margins = {0.0, r.sides[1] - quarter, r.sides[2] - quarter};
    r.sides_exceed = r.side_margins[1] > 0 && r.side_margins[2] > 0;
    r.extendability = alpha_extendable(r.triangle, quarter, {1, 2});
    r.not_extendable = !r.extendability.extendable;
    return r;
}

}  // namespace hirzebruch::ext
