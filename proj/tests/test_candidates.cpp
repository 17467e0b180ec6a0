#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <set>
#include <vector>

#include <dcover/candidates.hpp>
#include <dcover/rng.hpp>

using namespace dcover;
using Catch::Approx;

namespace {

std::vector<int> linear_cover(const Disk& d, const std::vector<Point>& pts) {
    std::vector<int> out;
    for (std::size_t j = 0; j < pts.size(); ++j)
        if (contains(d, pts[j])) out.push_back(static_cast<int>(j));
    return out;
}

Instance with_points(std::vector<Point> pts, std::vector<int> kappa, int m) {
    Instance inst;
    inst.name = "t";
    inst.points = std::move(pts);
    inst.kappa = std::move(kappa);
    inst.m = m;
    return inst;
}

} // namespace

TEST_CASE("candidate pool sizes on hand geometries") {
    SECTION("single point: one zero disk") {
        const auto cs = enumerate_candidates({{1.0, 2.0}});
        REQUIRE(cs.size() == 1);
        REQUIRE(cs.disks[0].radius == 0.0);
        REQUIRE(cs.origin[0] == DiskOrigin::Singleton);
        REQUIRE(cs.covers[0] == std::vector<int>{0});
    }
    SECTION("two points: two singletons and a diameter disk") {
        const auto cs = enumerate_candidates({{0.0, 0.0}, {2.0, 0.0}});
        REQUIRE(cs.size() == 3);
        int pairs = 0;
        for (int i = 0; i < cs.size(); ++i)
            if (cs.origin[i] == DiskOrigin::Pair) {
                ++pairs;
                REQUIRE(cs.disks[i].radius == Approx(1.0));
                REQUIRE(cs.covers[i] == std::vector<int>{0, 1});
            }
        REQUIRE(pairs == 1);
    }
    SECTION("equilateral triangle: all triples acute, 3+3+1") {
        const double h = std::sqrt(3.0);
        const auto cs = enumerate_candidates({{0.0, 0.0}, {2.0, 0.0}, {1.0, h}});
        REQUIRE(cs.size() == 7);
        int triples = 0;
        for (int i = 0; i < cs.size(); ++i)
            if (cs.origin[i] == DiskOrigin::Triple) {
                ++triples;
                REQUIRE(cs.disks[i].radius == Approx(2.0 / std::sqrt(3.0)));
            }
        REQUIRE(triples == 1);
    }
    SECTION("right triangle: the right triple is not added") {
        const auto cs = enumerate_candidates({{0.0, 0.0}, {2.0, 0.0}, {0.0, 2.0}});
        REQUIRE(cs.size() == 6);
        for (int i = 0; i < cs.size(); ++i)
            REQUIRE(cs.origin[i] != DiskOrigin::Triple);
    }
    SECTION("co-circular quadruple: the two acute circumdisks merge") {
        // four points on one circle at angles 0, 100, 200, 300 degrees: the
        // two triples whose arcs all stay below 180 degrees are acute and
        // share the same circumdisk, so it must be stored once
        const double R = 5.0;
        const Point c{10.0, 20.0};
        std::vector<Point> pts;
        for (double deg : {0.0, 100.0, 200.0, 300.0}) {
            const double a = deg * std::numbers::pi / 180.0;
            pts.push_back({c.x + R * std::cos(a), c.y + R * std::sin(a)});
        }
        const auto cs = enumerate_candidates(pts);
        REQUIRE(cs.size() == 4 + 6 + 1);
        int triples = 0;
        for (int i = 0; i < cs.size(); ++i)
            if (cs.origin[i] == DiskOrigin::Triple) {
                ++triples;
                REQUIRE(cs.disks[i].radius == Approx(R).margin(1e-7));
                REQUIRE(cs.covers[i].size() == 4);
            }
        REQUIRE(triples == 1);
    }
    SECTION("empty input is rejected") {
        REQUIRE_THROWS_AS(enumerate_candidates({}), ValidationError);
    }
}

TEST_CASE("candidate pool structural invariants on random inputs") {
    Rng rng(0xc4ad1da7e5ull);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 3 + static_cast<int>(rng.below(6));
        std::vector<Point> pts;
        for (int i = 0; i < n; ++i)
            pts.push_back({rng.uniform(0.0, 50.0), rng.uniform(0.0, 50.0)});
        const auto cs = enumerate_candidates(pts);

        // no duplicates on the 1e-9 grid
        std::set<std::array<long long, 3>> keys;
        for (const Disk& d : cs.disks)
            keys.insert({std::llround(d.center.x * 1e9), std::llround(d.center.y * 1e9),
                         std::llround(d.radius * 1e9)});
        REQUIRE(keys.size() == static_cast<std::size_t>(cs.size()));

        for (int i = 0; i < cs.size(); ++i) {
            REQUIRE(std::is_sorted(cs.covers[i].begin(), cs.covers[i].end()));
            REQUIRE(cs.covers[i] == linear_cover(cs.disks[i], pts));
            if (cs.origin[i] == DiskOrigin::Singleton)
                REQUIRE(cs.disks[i].radius == 0.0);
        }

        // every pair disk keeps its two defining points on the boundary
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const Disk d = disk_from_two(pts[i], pts[j]);
                REQUIRE(on_boundary(d, pts[i]));
                REQUIRE(on_boundary(d, pts[j]));
            }
        // and every acute-triple circumdisk its three
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k)
                    if (is_acute(pts[i], pts[j], pts[k])) {
                        const Disk d = circumdisk(pts[i], pts[j], pts[k]);
                        REQUIRE(on_boundary(d, pts[i]));
                        REQUIRE(on_boundary(d, pts[j]));
                        REQUIRE(on_boundary(d, pts[k]));
                    }
    }
}

TEST_CASE("candidate lookup by geometry") {
    const auto cs = enumerate_candidates({{0.0, 0.0}, {2.0, 0.0}});
    const auto keys = candidate_key_index(cs);
    REQUIRE(find_candidate(keys, Disk{{1.0, 0.0}, 1.0}) >= 0);
    REQUIRE(find_candidate(keys, Disk{{0.0, 0.0}, 0.0}) >= 0);
    REQUIRE(find_candidate(keys, Disk{{1.0, 0.0}, 1.5}) == -1);
}

TEST_CASE("radius pruning against a reference cover") {
    const auto cs = enumerate_candidates(
        {{0.0, 0.0}, {4.0, 0.0}, {0.0, 3.0}, {40.0, 40.0}});
    Solution ref;
    ref.disks = {Disk{{0.0, 0.0}, 2.0}};  // largest reference radius 2

    SECTION("boundary inclusive at alpha times the max radius") {
        const auto pruned = prune_by_alpha(cs, ref, 1.25);  // cap 2.5
        REQUIRE(pruned.size() < cs.size());
        for (const Disk& d : pruned.disks) REQUIRE(d.radius <= 2.5 + 1e-9);
        // the pair disk of (0,0)-(4,0) and (0,0)-(0,3) have radii 2 and 1.5:
        // both at or under the cap, so they survive
        const auto keys = candidate_key_index(pruned);
        REQUIRE(find_candidate(keys, Disk{{2.0, 0.0}, 2.0}) >= 0);
        REQUIRE(find_candidate(keys, Disk{{0.0, 1.5}, 1.5}) >= 0);
        // exact boundary: alpha = 1 keeps the radius-2 disk
        const auto tight = prune_by_alpha(cs, ref, 1.0);
        const auto tkeys = candidate_key_index(tight);
        REQUIRE(find_candidate(tkeys, Disk{{2.0, 0.0}, 2.0}) >= 0);
    }
    SECTION("infinite alpha is the identity") {
        const auto same = prune_by_alpha(cs, ref, std::numeric_limits<double>::infinity());
        REQUIRE(same.size() == cs.size());
    }
    SECTION("pruned pool is a subset and monotone in alpha") {
        const auto a10 = prune_by_alpha(cs, ref, 1.0);
        const auto a12 = prune_by_alpha(cs, ref, 1.2);
        REQUIRE(a10.size() <= a12.size());
        REQUIRE(a12.size() <= cs.size());
        const auto big = candidate_key_index(a12);
        for (const Disk& d : a10.disks) REQUIRE(find_candidate(big, d) >= 0);
    }
    SECTION("singletons always survive") {
        Solution zero;
        zero.disks = {Disk{{0.0, 0.0}, 0.0}};
        const auto pruned = prune_by_alpha(cs, zero, 1.0);
        REQUIRE(pruned.size() == 4);  // exactly the four zero disks
        for (const Disk& d : pruned.disks) REQUIRE(d.radius == 0.0);
    }
    SECTION("non-positive alpha is rejected") {
        REQUIRE_THROWS_AS(prune_by_alpha(cs, ref, 0.0), ValidationError);
        REQUIRE_THROWS_AS(prune_by_alpha(cs, ref, -1.0), ValidationError);
    }
}

TEST_CASE("regular polygon circumradius") {
    REQUIRE(kgon_radius(2, 5.0) == Approx(2.5));
    REQUIRE(kgon_radius(3, 3.0) == Approx(std::sqrt(3.0)));
    REQUIRE(kgon_radius(4, 1.0) == Approx(1.0 / std::sqrt(2.0)));
    REQUIRE(kgon_radius(6, 2.0) == Approx(2.0));
}

TEST_CASE("polygon augmentation for multiplicity under separation") {
    SECTION("kappa 2: two disks of radius ell/2 whose centers are ell apart") {
        const Instance inst = with_points({{0.0, 0.0}}, {2}, 2);
        auto cs = enumerate_candidates(inst.points);
        REQUIRE(cs.size() == 1);
        cs = augment_kgons(cs, inst, 5.0);
        REQUIRE(cs.size() == 3);
        std::vector<const Disk*> added;
        for (int i = 0; i < cs.size(); ++i)
            if (cs.origin[i] == DiskOrigin::KgonAugment) added.push_back(&cs.disks[i]);
        REQUIRE(added.size() == 2);
        for (const Disk* d : added) {
            REQUIRE(d->radius == Approx(2.5));
            REQUIRE(on_boundary(*d, inst.points[0]));  // anchor sits on the rim
            REQUIRE(cs.covers[static_cast<int>(d - cs.disks.data())] ==
                    std::vector<int>{0});
        }
        REQUIRE(dist(added[0]->center, added[1]->center) == Approx(5.0).margin(1e-9));
    }
    SECTION("kappa 3: adjacent vertex centers exactly ell apart") {
        const Instance inst = with_points({{7.0, -2.0}}, {3}, 3);
        auto cs = augment_kgons(enumerate_candidates(inst.points), inst, 3.0);
        std::vector<Point> centers;
        for (int i = 0; i < cs.size(); ++i)
            if (cs.origin[i] == DiskOrigin::KgonAugment) {
                REQUIRE(cs.disks[i].radius == Approx(std::sqrt(3.0)));
                centers.push_back(cs.disks[i].center);
            }
        REQUIRE(centers.size() == 3);
        // vertices are emitted counterclockwise from due east
        REQUIRE(centers[0].x == Approx(7.0 + std::sqrt(3.0)));
        REQUIRE(centers[0].y == Approx(-2.0).margin(1e-12));
        for (std::size_t v = 0; v < 3; ++v)
            REQUIRE(dist(centers[v], centers[(v + 1) % 3]) == Approx(3.0).margin(1e-9));
    }
    SECTION("all kappa equal to one leaves the pool unchanged") {
        const Instance inst = with_points({{0.0, 0.0}, {8.0, 0.0}}, {1, 1}, 2);
        const auto before = enumerate_candidates(inst.points);
        const auto after = augment_kgons(before, inst, 5.0);
        REQUIRE(after.size() == before.size());
    }
    SECTION("re-augmenting adds nothing (deduplication)") {
        const Instance inst = with_points({{0.0, 0.0}, {1.0, 0.0}}, {2, 2}, 4);
        const auto once = augment_kgons(enumerate_candidates(inst.points), inst, 5.0);
        const auto twice = augment_kgons(once, inst, 5.0);
        REQUIRE(twice.size() == once.size());
    }
    SECTION("added covers match a linear recount") {
        const Instance inst =
            with_points({{0.0, 0.0}, {2.0, 1.0}, {4.0, 0.0}}, {2, 3, 1}, 5);
        const auto cs = augment_kgons(enumerate_candidates(inst.points), inst, 4.0);
        for (int i = 0; i < cs.size(); ++i)
            REQUIRE(cs.covers[i] == linear_cover(cs.disks[i], inst.points));
    }
    SECTION("invalid separation distance is rejected") {
        const Instance inst = with_points({{0.0, 0.0}}, {2}, 2);
        const auto cs = enumerate_candidates(inst.points);
        REQUIRE_THROWS_AS(augment_kgons(cs, inst, 0.0), ValidationError);
        REQUIRE_THROWS_AS(augment_kgons(cs, inst,
                                        std::numeric_limits<double>::infinity()),
                          ValidationError);
    }
}
