#ifndef DCOVER_HEURISTIC_HPP
#define DCOVER_HEURISTIC_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

#include "errors.hpp"
#include "geometry.hpp"
#include "instance.hpp"
#include "rng.hpp"
#include "solution.hpp"

namespace dcover {

namespace detail {

struct KMeans {
    std::vector<Point> centers;
    std::vector<int> assign;  // point -> center, -1 never occurs on exit
};

// k-means++ seeding followed by Lloyd iterations (capped). Empty clusters are
// re-seeded onto the point currently farthest from its own center. `order` is
// the caller's shuffled index order; it decides scan order and tie wins, so
// the whole routine is a pure function of (points, k, order, rng state).
inline KMeans kmeans(const std::vector<Point>& pts, int k,
                     const std::vector<int>& order, Rng& rng) {
    const int n = static_cast<int>(pts.size());
    KMeans km;
    km.centers.reserve(k);
    km.centers.push_back(pts[order[0]]);
    std::vector<double> d2(n);
    while (static_cast<int>(km.centers.size()) < k) {
        double total = 0.0;
        for (int j = 0; j < n; ++j) {
            double best = std::numeric_limits<double>::infinity();
            for (const Point& c : km.centers) best = std::min(best, dist_sq(pts[j], c));
            d2[j] = best;
            total += best;
        }
        if (total <= 0.0) {
            // all points coincide with existing centers; any pick works
            km.centers.push_back(pts[order[km.centers.size() % n]]);
            continue;
        }
        const double target = rng.uniform01() * total;
        double acc = 0.0;
        int pick = order[n - 1];
        for (int idx : order) {
            acc += d2[idx];
            if (acc >= target) { pick = idx; break; }
        }
        km.centers.push_back(pts[pick]);
    }

    km.assign.assign(n, -1);
    for (int iter = 0; iter < 50; ++iter) {
        bool changed = false;
        for (int j = 0; j < n; ++j) {
            int best = 0;
            double bestd = dist_sq(pts[j], km.centers[0]);
            for (int c = 1; c < k; ++c) {
                const double d = dist_sq(pts[j], km.centers[c]);
                if (d < bestd) { bestd = d; best = c; }
            }
            if (km.assign[j] != best) { km.assign[j] = best; changed = true; }
        }
        if (!changed) break;

        std::vector<double> sx(k, 0.0), sy(k, 0.0);
        std::vector<int> cnt(k, 0);
        for (int j = 0; j < n; ++j) {
            sx[km.assign[j]] += pts[j].x;
            sy[km.assign[j]] += pts[j].y;
            ++cnt[km.assign[j]];
        }
        for (int c = 0; c < k; ++c) {
            if (cnt[c] > 0) {
                km.centers[c] = Point{sx[c] / cnt[c], sy[c] / cnt[c]};
            } else {
                // re-seed on the point worst served by its current cluster
                int far = order[0];
                double fard = -1.0;
                for (int idx : order) {
                    const double d = dist_sq(pts[idx], km.centers[km.assign[idx]]);
                    if (d > fard) { fard = d; far = idx; }
                }
                km.centers[c] = pts[far];
            }
        }
    }
    return km;
}

// Clustering pass + per-level coverage repair. Requires 1 <= m <= n and
// max(kappa) <= m. Returns at most m disks meeting every kappa requirement.
inline std::vector<Disk> cluster_cover(const std::vector<Point>& pts,
                                       const std::vector<int>& kappa, int m,
                                       Rng& rng) {
    const int n = static_cast<int>(pts.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);

    const int k = std::min(m, n);
    const KMeans km = kmeans(pts, k, order, rng);

    std::vector<std::vector<int>> members(k);
    for (int j = 0; j < n; ++j) members[km.assign[j]].push_back(j);
    std::vector<std::vector<int>> live;
    for (auto& ms : members)
        if (!ms.empty()) live.push_back(std::move(ms));
    members = std::move(live);

    std::vector<Disk> disks;
    disks.reserve(members.size());
    std::vector<Point> buf;
    auto mec_of = [&](const std::vector<int>& ms) {
        buf.clear();
        for (int j : ms) buf.push_back(pts[j]);
        return min_enclosing_disk(buf);
    };
    for (const auto& ms : members) disks.push_back(mec_of(ms));

    auto is_member = [&](int cluster, int j) {
        const auto& ms = members[cluster];
        return std::find(ms.begin(), ms.end(), j) != ms.end();
    };
    auto coverage_of = [&](int j) {
        int c = 0;
        for (const Disk& d : disks)
            if (contains(d, pts[j])) ++c;
        return c;
    };

    const int kappa_max = *std::max_element(kappa.begin(), kappa.end());
    // Re-fitting a disk after a join can recenter it and evict a point that was
    // covered geometrically without being a member, invalidating levels already
    // repaired. Sweep all levels until one full sweep changes nothing; each
    // repair strictly grows total membership or the cluster count, so the
    // outer loop terminates.
    for (bool dirty = true; dirty;) {
        dirty = false;
        for (int level = 1; level <= kappa_max; ++level) {
            for (;;) {
                bool progress = false;
                bool deficient = false;
                for (int j : order) {
                    if (kappa[j] < level || coverage_of(j) >= level) continue;
                    deficient = true;
                    // rank clusters by center distance; aim at rank `level`,
                    // then walk outward (and finally inward) to one j isn't in
                    std::vector<int> ranked(members.size());
                    std::iota(ranked.begin(), ranked.end(), 0);
                    std::stable_sort(ranked.begin(), ranked.end(), [&](int a, int b) {
                        return dist_sq(pts[j], disks[a].center) <
                               dist_sq(pts[j], disks[b].center);
                    });
                    int pick = -1;
                    const int start = std::min<int>(level, static_cast<int>(ranked.size())) - 1;
                    for (int r = start; r < static_cast<int>(ranked.size()) && pick < 0; ++r)
                        if (!is_member(ranked[r], j)) pick = ranked[r];
                    for (int r = start - 1; r >= 0 && pick < 0; --r)
                        if (!is_member(ranked[r], j)) pick = ranked[r];
                    if (pick < 0) {
                        // j sits in every cluster yet is still short: spend budget
                        if (static_cast<int>(disks.size()) >= m)
                            throw Error("cluster_cover: coverage repair ran out of budget");
                        members.push_back({j});
                        disks.push_back(Disk{pts[j], 0.0});
                    } else {
                        members[pick].push_back(j);
                        disks[pick] = mec_of(members[pick]);
                    }
                    progress = true;
                    dirty = true;
                }
                if (!deficient) break;
                if (!progress)
                    throw Error("cluster_cover: coverage repair stalled");
            }
        }
    }
    return disks;
}

// Full pipeline on an index subset; recursion handles the surplus-budget case.
inline void heuristic_disks(const std::vector<Point>& pts, std::vector<int> kappa,
                            int m, Rng& rng, std::vector<Disk>& out) {
    std::vector<int> active;
    for (int j = 0; j < static_cast<int>(pts.size()); ++j)
        if (kappa[j] > 0) active.push_back(j);
    if (active.empty()) return;

    long long remaining = 0;
    int kmax = 0;
    for (int j : active) {
        remaining += kappa[j];
        kmax = std::max(kmax, kappa[j]);
    }

    if (remaining <= m) {
        // enough budget for a zero-radius disk per required unit
        for (int j : active)
            for (int c = 0; c < kappa[j]; ++c) out.push_back(Disk{pts[j], 0.0});
        return;
    }

    const int na = static_cast<int>(active.size());
    if (m > na && kmax - 1 <= m - na) {
        // strip one coverage unit off every point for free, then recurse
        for (int j : active) {
            out.push_back(Disk{pts[j], 0.0});
            --kappa[j];
        }
        heuristic_disks(pts, std::move(kappa), m - na, rng, out);
        return;
    }

    std::vector<Point> sub_pts;
    std::vector<int> sub_kappa;
    sub_pts.reserve(na);
    sub_kappa.reserve(na);
    for (int j : active) {
        sub_pts.push_back(pts[j]);
        sub_kappa.push_back(kappa[j]);
    }
    const std::vector<Disk> disks = cluster_cover(sub_pts, sub_kappa, m, rng);
    out.insert(out.end(), disks.begin(), disks.end());
}

} // namespace detail

// Single-point removal descent: for each disk (largest first) try dropping a
// strictly overcovered point (boundary points first) and re-fit the minimum
// enclosing disk of the rest; keep the change when the radius strictly drops
// (or the disk empties out) without pushing any point below its requirement.
// Runs to a fixpoint. The result never has a larger objective than the input.
inline Solution shrink_overcovered(const Solution& sol, const Instance& inst) {
    inst.validate();
    const std::vector<Point>& pts = inst.points;
    const int n = inst.n();

    std::vector<Disk> disks = sol.disks;
    std::vector<char> alive(disks.size(), 1);
    std::vector<std::vector<int>> geo(disks.size());
    std::vector<int> cov(n, 0);
    for (std::size_t i = 0; i < disks.size(); ++i) {
        for (int j = 0; j < n; ++j)
            if (contains(disks[i], pts[j])) geo[i].push_back(j);
        for (int j : geo[i]) ++cov[j];
    }

    std::vector<Point> buf;
    auto mec_of = [&](const std::vector<int>& ms) {
        buf.clear();
        for (int j : ms) buf.push_back(pts[j]);
        return min_enclosing_disk(buf);
    };

    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> by_radius;
        for (std::size_t i = 0; i < disks.size(); ++i)
            if (alive[i]) by_radius.push_back(static_cast<int>(i));
        std::stable_sort(by_radius.begin(), by_radius.end(), [&](int a, int b) {
            return disks[a].radius > disks[b].radius;
        });

        for (int i : by_radius) {
            std::vector<int> scan = geo[i];
            std::stable_sort(scan.begin(), scan.end(), [&](int a, int b) {
                return on_boundary(disks[i], pts[a]) > on_boundary(disks[i], pts[b]);
            });
            for (int p : scan) {
                if (cov[p] <= inst.kappa[p]) continue;
                std::vector<int> rest;
                for (int q : geo[i])
                    if (q != p) rest.push_back(q);

                Disk replacement;
                bool remove = rest.empty();
                if (!remove) {
                    replacement = mec_of(rest);
                    if (replacement.radius >= disks[i].radius - 1e-12) continue;
                }
                std::vector<int> new_geo;
                if (!remove)
                    for (int j = 0; j < n; ++j)
                        if (contains(replacement, pts[j])) new_geo.push_back(j);

                bool ok = true;
                for (int q : geo[i]) {
                    const bool still = !remove &&
                        std::binary_search(new_geo.begin(), new_geo.end(), q);
                    if (!still && cov[q] - 1 < inst.kappa[q]) { ok = false; break; }
                }
                if (!ok) continue;

                for (int q : geo[i]) --cov[q];
                for (int q : new_geo) ++cov[q];
                if (remove) {
                    alive[i] = 0;
                    geo[i].clear();
                    break;  // disk gone; move on to the next disk
                }
                disks[i] = replacement;
                geo[i] = std::move(new_geo);
                changed = true;
            }
            if (!alive[i]) { changed = true; }
        }
    }

    std::vector<Disk> kept;
    for (std::size_t i = 0; i < disks.size(); ++i)
        if (alive[i]) kept.push_back(disks[i]);
    Solution out = make_solution(sol.method, std::move(kept), inst, sol.seed);
    out.lower_bound = sol.lower_bound;
    out.stats = sol.stats;
    return out;
}

// Cluster-and-repair heuristic. Shuffles, clusters into at most m groups,
// wraps each group in its minimum enclosing disk, tops up multi-coverage
// demands level by level, then shrinks. Throws InfeasibleError when some
// kappa exceeds the disk budget (no disk multiset can fix that).
inline Solution solve_heuristic(const Instance& inst, std::uint64_t seed) {
    inst.validate();
    if (inst.max_kappa() > inst.m)
        throw InfeasibleError("heuristic: max coverage requirement exceeds disk budget");
    Rng rng(seed);
    std::vector<Disk> disks;
    detail::heuristic_disks(inst.points, inst.kappa, inst.m, rng, disks);
    Solution raw = make_solution("heuristic", std::move(disks), inst, seed);
    return shrink_overcovered(raw, inst);
}

// Surplus-budget entry point (m strictly larger than the point count): grants
// every point a free zero-radius disk per coverage unit while the budget
// allows, recursing on what remains. Exposed for direct testing.
inline Solution solve_with_surplus_budget(const Instance& inst, std::uint64_t seed) {
    inst.validate();
    if (inst.m <= inst.n())
        throw ValidationError("surplus budget path requires m > n");
    return solve_heuristic(inst, seed);
}

} // namespace dcover

#endif
