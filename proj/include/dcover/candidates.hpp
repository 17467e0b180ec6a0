#ifndef DCOVER_CANDIDATES_HPP
#define DCOVER_CANDIDATES_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "geometry.hpp"
#include "instance.hpp"
#include "solution.hpp"
#include "spatial_index.hpp"

namespace dcover {

enum class DiskOrigin : std::uint8_t { Singleton, Pair, Triple, KgonAugment };

// Finite pool of disks an optimal cover can be assembled from: one zero disk
// per point, one per point pair (diameter disk), one circumdisk per acute
// triple, deduplicated on a 1e-9 grid. Any other disk in an optimal solution
// could be replaced by the minimum enclosing disk of the points it covers,
// and that disk is in the pool.
struct CandidateSet {
    std::vector<Disk> disks;
    std::vector<std::vector<int>> covers;  // sorted point indices per disk
    std::vector<DiskOrigin> origin;
    int size() const { return static_cast<int>(disks.size()); }
};

namespace detail {

struct DiskKey {
    std::int64_t x, y, r;
    friend bool operator==(const DiskKey&, const DiskKey&) = default;
};

struct DiskKeyHash {
    std::size_t operator()(const DiskKey& k) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (std::uint64_t v : {static_cast<std::uint64_t>(k.x),
                                static_cast<std::uint64_t>(k.y),
                                static_cast<std::uint64_t>(k.r)}) {
            h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

inline DiskKey disk_key(const Disk& d) {
    return DiskKey{std::llround(d.center.x * 1e9), std::llround(d.center.y * 1e9),
                   std::llround(d.radius * 1e9)};
}

using DiskKeyMap = std::unordered_map<DiskKey, int, DiskKeyHash>;

} // namespace detail

// Key -> candidate index map for an existing set (used to look candidates up
// by geometry, e.g. when seeding the exact solver from a heuristic cover).
inline detail::DiskKeyMap candidate_key_index(const CandidateSet& cands) {
    detail::DiskKeyMap map;
    map.reserve(cands.disks.size() * 2);
    for (int i = 0; i < cands.size(); ++i)
        map.emplace(detail::disk_key(cands.disks[i]), i);
    return map;
}

inline int find_candidate(const detail::DiskKeyMap& map, const Disk& d) {
    const auto it = map.find(detail::disk_key(d));
    return it == map.end() ? -1 : it->second;
}

inline CandidateSet enumerate_candidates(const std::vector<Point>& pts) {
    if (pts.empty()) throw ValidationError("enumerate_candidates: empty point set");
    const int n = static_cast<int>(pts.size());
    const SpatialIndex index(pts);

    double diameter = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            diameter = std::max(diameter, dist_sq(pts[i], pts[j]));
    diameter = std::sqrt(diameter);
    // degenerate circumdisks (nearly collinear acute triples) are useless
    // beyond this radius: the whole input fits in a far smaller disk
    const double radius_cap = diameter <= 0.0 ? 1.0 : 1e4 * diameter;

    CandidateSet cs;
    detail::DiskKeyMap seen;
    auto add = [&](const Disk& d, DiskOrigin origin) {
        const auto [it, fresh] = seen.emplace(detail::disk_key(d), cs.size());
        if (!fresh) return;
        cs.disks.push_back(d);
        cs.covers.push_back(index.query(d));
        cs.origin.push_back(origin);
    };

    for (int i = 0; i < n; ++i) add(Disk{pts[i], 0.0}, DiskOrigin::Singleton);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            add(disk_from_two(pts[i], pts[j]), DiskOrigin::Pair);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                if (!is_acute(pts[i], pts[j], pts[k])) continue;
                const Disk d = circumdisk(pts[i], pts[j], pts[k]);
                if (!std::isfinite(d.radius) || d.radius > radius_cap) continue;
                add(d, DiskOrigin::Triple);
            }
    return cs;
}

// Keep candidates with radius <= alpha * (largest radius in `reference`),
// boundary inclusive. alpha = +inf keeps everything. The reference solution
// is typically an optimal unseparated cover.
inline CandidateSet prune_by_alpha(const CandidateSet& cands, const Solution& reference,
                                   double alpha) {
    if (!(alpha > 0.0)) throw ValidationError("alpha: must be positive");
    if (std::isinf(alpha)) return cands;
    double rmax = 0.0;
    for (const Disk& d : reference.disks) rmax = std::max(rmax, d.radius);
    const double cap = alpha * rmax + 1e-9;
    CandidateSet out;
    for (int i = 0; i < cands.size(); ++i) {
        if (cands.disks[i].radius > cap) continue;
        out.disks.push_back(cands.disks[i]);
        out.covers.push_back(cands.covers[i]);
        out.origin.push_back(cands.origin[i]);
    }
    return out;
}

// Regular-polygon radius: a k-gon with side ell has circumradius
// ell / (2 sin(pi/k)).
inline double kgon_radius(int k, double ell) {
    return ell / (2.0 * std::sin(std::numbers::pi / k));
}

// For every point with kappa(p) = k >= 2, add the k disks centered on the
// vertices of a regular k-gon around p with side length ell: each vertex is
// at circumradius R = kgon_radius(k, ell) from p, so every disk carries p on
// its boundary, and adjacent centers sit exactly ell apart. These disks make
// multi-coverage achievable once centers must keep distance ell.
inline CandidateSet augment_kgons(const CandidateSet& cands, const Instance& inst,
                                  double ell) {
    if (!(ell > 0.0) || !std::isfinite(ell))
        throw ValidationError("ell: must be positive and finite");
    const SpatialIndex index(inst.points);
    CandidateSet out = cands;
    detail::DiskKeyMap seen = candidate_key_index(out);
    auto add = [&](const Disk& d) {
        const auto [it, fresh] = seen.emplace(detail::disk_key(d), out.size());
        if (!fresh) return;
        out.disks.push_back(d);
        out.covers.push_back(index.query(d));
        out.origin.push_back(DiskOrigin::KgonAugment);
    };
    for (int j = 0; j < inst.n(); ++j) {
        const int k = inst.kappa[j];
        if (k < 2) continue;
        const double r = kgon_radius(k, ell);
        for (int v = 0; v < k; ++v) {
            const double angle = 2.0 * std::numbers::pi * v / k;
            const Point c{inst.points[j].x + r * std::cos(angle),
                          inst.points[j].y + r * std::sin(angle)};
            add(Disk{c, r});
        }
    }
    return out;
}

} // namespace dcover

#endif
