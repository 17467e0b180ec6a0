#ifndef DCOVER_GEOMETRY_HPP
#define DCOVER_GEOMETRY_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

#include "errors.hpp"
#include "rng.hpp"

namespace dcover {

// Absolute tolerance for point-in-disk tests. Every containment decision in
// the library goes through contains() with this default so that candidate
// cover lists, feasibility checks and the solvers agree bit-for-bit.
inline constexpr double kContainTol = 1e-9;

// Looser tolerance for "lies on the boundary" classification.
inline constexpr double kBoundaryTol = 1e-7;

struct Point {
    double x = 0.0;
    double y = 0.0;
    friend bool operator==(const Point&, const Point&) = default;
};

struct Disk {
    Point center;
    double radius = 0.0;
    double area() const { return std::numbers::pi * radius * radius; }
    friend bool operator==(const Disk&, const Disk&) = default;
};

inline double dist_sq(Point p, Point q) {
    const double dx = p.x - q.x;
    const double dy = p.y - q.y;
    return dx * dx + dy * dy;
}

inline double dist(Point p, Point q) { return std::sqrt(dist_sq(p, q)); }

inline bool contains(const Disk& d, Point p, double tol = kContainTol) {
    const double reach = d.radius + tol;
    return dist_sq(d.center, p) <= reach * reach;
}

inline bool on_boundary(const Disk& d, Point p, double tol = kBoundaryTol) {
    return std::abs(dist(d.center, p) - d.radius) <= tol;
}

// Smallest disk through two points: centered at the midpoint.
inline Disk disk_from_two(Point a, Point b) {
    const Point c{(a.x + b.x) / 2.0, (a.y + b.y) / 2.0};
    return Disk{c, dist(a, b) / 2.0};
}

// Strictly acute test on squared side lengths; right and degenerate
// triangles (coincident or collinear points included) report non-acute.
inline bool is_acute(Point a, Point b, Point c) {
    double s[3] = {dist_sq(a, b), dist_sq(b, c), dist_sq(c, a)};
    std::sort(s, s + 3);
    return s[0] + s[1] > s[2];
}

// Circle through three non-collinear points, via perpendicular bisectors
// translated so `a` is the origin (better conditioning than the raw form).
inline Disk circumdisk(Point a, Point b, Point c) {
    const double bx = b.x - a.x, by = b.y - a.y;
    const double cx = c.x - a.x, cy = c.y - a.y;
    const double d = 2.0 * (bx * cy - by * cx);
    if (d == 0.0)
        throw ValidationError("circumdisk: collinear points");
    const double b2 = bx * bx + by * by;
    const double c2 = cx * cx + cy * cy;
    const double ux = (cy * b2 - by * c2) / d;
    const double uy = (bx * c2 - cx * b2) / d;
    const Point center{a.x + ux, a.y + uy};
    return Disk{center, dist(center, a)};
}

namespace detail {

// Smallest disk with a and b on the boundary that also contains c.
// Normally the circumdisk; falls back to the widest pair disk when the
// triple is numerically degenerate.
inline Disk boundary_disk3(Point a, Point b, Point c) {
    const double bx = b.x - a.x, by = b.y - a.y;
    const double cx = c.x - a.x, cy = c.y - a.y;
    const double d = 2.0 * (bx * cy - by * cx);
    if (d != 0.0) {
        const double b2 = bx * bx + by * by;
        const double c2 = cx * cx + cy * cy;
        const double ux = (cy * b2 - by * c2) / d;
        const double uy = (bx * c2 - cx * b2) / d;
        const Point center{a.x + ux, a.y + uy};
        const Disk disk{center, dist(center, a)};
        if (std::isfinite(disk.radius)) return disk;
    }
    Disk best{{0, 0}, -1.0};
    const Point ps[3] = {a, b, c};
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            const Disk pair = disk_from_two(ps[i], ps[j]);
            if (pair.radius > best.radius && contains(pair, ps[3 - i - j]))
                best = pair;
        }
    if (best.radius < 0.0) best = disk_from_two(a, b);
    return best;
}

} // namespace detail

// Minimum enclosing disk, Welzl-style randomized incremental construction.
// The input is copied and permuted with a fixed internal seed, so the result
// and the work done are deterministic. Expected O(n).
inline Disk min_enclosing_disk(std::span<const Point> points) {
    if (points.empty())
        throw ValidationError("min_enclosing_disk: empty point set");
    std::vector<Point> p(points.begin(), points.end());
    std::uint64_t state = 0x70c0ffee ^ (static_cast<std::uint64_t>(p.size()) << 17);
    for (std::size_t i = p.size(); i > 1; --i) {
        const std::uint64_t j = splitmix64(state) % i;
        std::swap(p[i - 1], p[j]);
    }

    Disk d{p[0], 0.0};
    for (std::size_t i = 1; i < p.size(); ++i) {
        if (contains(d, p[i])) continue;
        d = Disk{p[i], 0.0};
        for (std::size_t j = 0; j < i; ++j) {
            if (contains(d, p[j])) continue;
            d = disk_from_two(p[i], p[j]);
            for (std::size_t k = 0; k < j; ++k) {
                if (contains(d, p[k])) continue;
                d = detail::boundary_disk3(p[i], p[j], p[k]);
            }
        }
    }
    return d;
}

inline Disk min_enclosing_disk(const std::vector<Point>& points) {
    return min_enclosing_disk(std::span<const Point>(points));
}

enum class SampleRegion { UnitSquare, UnitDisk };

// Monte-Carlo estimate of the probability that three points drawn uniformly
// from the region form a non-acute (right or obtuse) triangle.
inline double obtuse_fraction_estimate(SampleRegion region, std::uint64_t trials,
                                       std::uint64_t seed) {
    if (trials == 0)
        throw ValidationError("obtuse_fraction_estimate: trials must be positive");
    Rng rng(seed);
    auto draw = [&]() -> Point {
        if (region == SampleRegion::UnitSquare)
            return Point{rng.uniform01(), rng.uniform01()};
        for (;;) {
            const double x = rng.uniform(-1.0, 1.0);
            const double y = rng.uniform(-1.0, 1.0);
            if (x * x + y * y <= 1.0) return Point{x, y};
        }
    };
    std::uint64_t hits = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const Point a = draw(), b = draw(), c = draw();
        if (!is_acute(a, b, c)) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(trials);
}

} // namespace dcover

#endif
