#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <vector>

#include <dcover/bench.hpp>
#include <dcover/bnb.hpp>
#include <dcover/oracle.hpp>
#include <dcover/solver.hpp>

using namespace dcover;
using Catch::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

Instance make(std::vector<Point> pts, std::vector<int> kappa, int m) {
    Instance inst;
    inst.name = "s";
    inst.points = std::move(pts);
    inst.kappa = std::move(kappa);
    inst.m = m;
    return inst;
}

Instance random_instance(int n, int m, std::uint64_t seed, std::vector<int> choices,
                         double canvas = 100.0) {
    GeneratorConfig cfg;
    cfg.canvas_w = canvas;
    cfg.canvas_h = canvas;
    cfg.kappa_choices = std::move(choices);
    cfg.seed = seed;
    return generate_uniform(n, m, cfg, "rand");
}

double selected_area(const CoverModel& model, const SolveResult& res) {
    double area = 0.0;
    for (const auto& [i, cnt] : res.selected) area += cnt * model.cost[i];
    return area;
}

} // namespace

TEST_CASE("integer model construction") {
    const Instance inst = make({{0.0, 0.0}, {2.0, 0.0}}, {2, 1}, 3);
    const auto cs = enumerate_candidates(inst.points);
    const CoverModel model = build_gmc_model(cs, inst);

    REQUIRE(model.n_vars() == cs.size());
    REQUIRE(model.n_points() == 2);
    REQUIRE(model.n_rows() == 3);  // two coverage rows + the cardinality row
    REQUIRE(model.kappa == std::vector<int>{2, 1});
    REQUIRE(model.budget == 3);
    for (int u : model.ub) REQUIRE(u == 3);
    for (int i = 0; i < model.n_vars(); ++i)
        REQUIRE(model.cost[i] == Approx(cs.disks[i].area()));
    // adjacency is the transpose of covers
    for (int j = 0; j < model.n_points(); ++j)
        for (int i : model.point_adj[j])
            REQUIRE(std::binary_search(model.covers[i].begin(), model.covers[i].end(), j));

    SECTION("single point: the only candidate is free") {
        const Instance one = make({{5.0, 5.0}}, {1}, 1);
        const CoverModel m1 = build_gmc_model(enumerate_candidates(one.points), one);
        REQUIRE(m1.n_vars() == 1);
        REQUIRE(m1.cost[0] == 0.0);
    }
    SECTION("binarization caps bounds and disables dominance") {
        CoverModel b = model;
        binarize(b);
        for (int u : b.ub) REQUIRE(u == 1);
        REQUIRE_FALSE(b.allow_dominance);
    }
}

TEST_CASE("branch and bound on pinned models") {
    SECTION("two points, budget two: free cover") {
        const Instance inst = make({{0.0, 0.0}, {2.0, 0.0}}, {1, 1}, 2);
        const auto res =
            solve_exact(build_gmc_model(enumerate_candidates(inst.points), inst), {});
        REQUIRE(res.status == SolveStatus::Optimal);
        REQUIRE(res.objective == Approx(0.0).margin(1e-12));
    }
    SECTION("two points, budget one: the diameter disk") {
        const Instance inst = make({{0.0, 0.0}, {2.0, 0.0}}, {1, 1}, 1);
        const CoverModel model = build_gmc_model(enumerate_candidates(inst.points), inst);
        const auto res = solve_exact(model, {});
        REQUIRE(res.status == SolveStatus::Optimal);
        REQUIRE(res.objective == Approx(kPi));
        REQUIRE(res.objective == Approx(selected_area(model, res)));
        REQUIRE(std::abs(res.objective - res.lower_bound) <=
                1e-6 * std::max(1.0, res.objective));
    }
    SECTION("multiplicity above the budget is infeasible") {
        const Instance inst = make({{0.0, 0.0}}, {2}, 1);
        const auto res =
            solve_exact(build_gmc_model(enumerate_candidates(inst.points), inst), {});
        REQUIRE(res.status == SolveStatus::Infeasible);
    }
    SECTION("duplicate cover sets keep the cheaper variable") {
        CoverModel model;
        model.cost = {2.0, 1.0};
        model.covers = {{0}, {0}};
        model.ub = {1, 1};
        model.kappa = {1};
        model.budget = 1;
        model.rebuild_point_adj();
        const auto res = solve_exact(model, {});
        REQUIRE(res.status == SolveStatus::Optimal);
        REQUIRE(res.objective == Approx(1.0));
        REQUIRE(res.selected == std::vector<std::pair<int, int>>{{1, 1}});
    }
    SECTION("dominated variable is never picked") {
        CoverModel model;
        model.cost = {1.0, 2.0};
        model.covers = {{0, 1}, {0}};  // second costs more and covers less
        model.ub = {2, 2};
        model.kappa = {1, 1};
        model.budget = 2;
        model.rebuild_point_adj();
        const auto res = solve_exact(model, {});
        REQUIRE(res.status == SolveStatus::Optimal);
        REQUIRE(res.objective == Approx(1.0));
        REQUIRE(res.selected == std::vector<std::pair<int, int>>{{0, 1}});
    }
}

TEST_CASE("exact solve limits produce statuses, not errors") {
    const Instance inst = random_instance(12, 4, 5, {1, 2}, 30.0);
    const CoverModel model = build_gmc_model(enumerate_candidates(inst.points), inst);

    SECTION("node cap") {
        SolveLimits limits;
        limits.node_cap = 1;
        const auto res = solve_exact(model, limits);
        REQUIRE((res.status == SolveStatus::Feasible ||
                 res.status == SolveStatus::Optimal));
        if (res.status == SolveStatus::Feasible && std::isfinite(res.objective))
            REQUIRE(res.lower_bound <= res.objective + 1e-9);
    }
    SECTION("cap large enough resolves to the same optimum as unlimited") {
        SolveLimits roomy;
        roomy.node_cap = 50'000'000;
        const auto a = solve_exact(model, roomy);
        const auto b = solve_exact(model, {});
        REQUIRE(a.status == SolveStatus::Optimal);
        REQUIRE(a.objective == Approx(b.objective).margin(1e-9));
    }
}

TEST_CASE("plain solve pipeline on pinned instances") {
    SECTION("multiplicity satisfied with stacked zero disks") {
        const Instance inst = make({{0.0, 0.0}, {10.0, 0.0}}, {2, 1}, 3);
        const auto out = solve_gmc(inst);
        REQUIRE(out.result.status == SolveStatus::Optimal);
        REQUIRE(out.result.objective == Approx(0.0).margin(1e-12));
        REQUIRE(out.solution.method == "gmc-ip");
        REQUIRE(out.solution.disks.size() == 3);
        REQUIRE(covers_instance(out.solution.disks, inst));
    }
    SECTION("three collinear points, one disk") {
        const auto out = solve_gmc(make({{0.0, 0.0}, {4.0, 0.0}, {8.0, 0.0}}, {1, 1, 1}, 1));
        REQUIRE(out.result.status == SolveStatus::Optimal);
        REQUIRE(out.result.objective == Approx(16.0 * kPi));
    }
    SECTION("budget below the multiplicity requirement") {
        const auto out = solve_gmc(make({{0.0, 0.0}}, {2}, 1));
        REQUIRE(out.result.status == SolveStatus::Infeasible);
    }
    SECTION("objective equals the recomputed disk area") {
        const auto out = solve_gmc(random_instance(8, 3, 17, {1, 2}, 40.0));
        REQUIRE(out.result.status == SolveStatus::Optimal);
        REQUIRE(out.solution.objective == Approx(total_area(out.solution.disks)));
        REQUIRE(out.result.objective == Approx(out.solution.objective));
    }
}

TEST_CASE("exhaustive reference solver") {
    SECTION("stacked zero disks") {
        const auto r = brute_force_cover(make({{0.0, 0.0}}, {2}, 2));
        REQUIRE(r.status == SolveStatus::Optimal);
        REQUIRE(r.objective == Approx(0.0).margin(1e-12));
    }
    SECTION("right-triangle enclosing disk") {
        const auto r = brute_force_cover(make({{0.0, 0.0}, {2.0, 0.0}, {1.0, 1.0}},
                                              {1, 1, 1}, 1));
        REQUIRE(r.status == SolveStatus::Optimal);
        REQUIRE(r.objective == Approx(kPi));
    }
    SECTION("infeasible budget") {
        const auto r = brute_force_cover(make({{0.0, 0.0}}, {3}, 2));
        REQUIRE(r.status == SolveStatus::Infeasible);
    }
    SECTION("guards refuse oversized inputs") {
        REQUIRE_THROWS_AS(brute_force_cover(make({{0.0, 0.0}}, {1}, 7)),
                          ValidationError);
        // 12 points give 12 + 66 = 78 candidates before any triples: over cap
        std::vector<Point> many;
        std::vector<int> ones;
        for (int i = 0; i < 12; ++i) {
            many.push_back({static_cast<double>(i), 0.0});
            ones.push_back(1);
        }
        REQUIRE_THROWS_AS(brute_force_cover(make(many, ones, 2)), ValidationError);
    }
}

TEST_CASE("exact solver agrees with exhaustive enumeration") {
    int compared = 0;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const int n = 3 + static_cast<int>(seed % 4);
        const int m = 1 + static_cast<int>(seed % 3);
        const Instance inst = random_instance(n, m, 9000 + seed, {1, 2}, 20.0);
        const auto exact = solve_gmc(inst);
        const auto oracle = brute_force_cover(inst);
        INFO("seed=" << seed << " n=" << n << " m=" << m);
        REQUIRE(exact.result.status == oracle.status);
        if (oracle.status == SolveStatus::Optimal) {
            REQUIRE(exact.result.objective == Approx(oracle.objective).margin(1e-9));
            ++compared;
        }
    }
    REQUIRE(compared >= 30);  // most random draws are feasible
}

TEST_CASE("warm start does not change the optimum") {
    const Instance inst = random_instance(10, 3, 123, {1, 2}, 30.0);
    const auto cs = enumerate_candidates(inst.points);
    const CoverModel model = build_gmc_model(cs, inst);

    const auto cold = solve_exact(model, {});
    const Solution heur = solve_heuristic(inst, 0);
    auto warm_sel = detail::selection_from_disks(cs, heur.disks);
    REQUIRE_FALSE(warm_sel.empty());  // shrunken covers map back onto candidates
    const auto warm = solve_exact(model, {}, &warm_sel);

    REQUIRE(cold.status == SolveStatus::Optimal);
    REQUIRE(warm.status == SolveStatus::Optimal);
    REQUIRE(warm.objective == Approx(cold.objective).margin(1e-9));
}

TEST_CASE("exact solve is deterministic") {
    const Instance inst = random_instance(9, 3, 321, {1, 2}, 25.0);
    const auto a = solve_gmc(inst);
    const auto b = solve_gmc(inst);
    REQUIRE(a.result.objective == b.result.objective);
    REQUIRE(a.result.selected == b.result.selected);
    REQUIRE(a.result.stats.nodes == b.result.stats.nodes);
    REQUIRE(to_json(a.solution).dump(2) == to_json(b.solution).dump(2));
}

TEST_CASE("gap metric") {
    REQUIRE(compute_gap(100.0, 72.5) == Approx(0.275));
    REQUIRE(compute_gap(50.0, 50.0) == 0.0);
    REQUIRE(compute_gap(0.0, 0.0) == 0.0);
    // sub-tolerance shortfall clamps to zero instead of going negative
    REQUIRE(compute_gap(10.0, 10.0 + 1e-8) == 0.0);
    REQUIRE_THROWS_AS(compute_gap(50.0, 60.0), ValidationError);
}
