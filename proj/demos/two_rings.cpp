// Library walkthrough on a small hand-made layout: an inner ring of points
// that must each be covered twice, an outer ring covered once. Solves the
// plain minimum-area model, then the variant where disk centers must keep
// their distance, and writes the pictures next to the binary.
//
//   ./two_rings            prints a comparison table
//   ./two_rings out_dir    additionally writes solutions and SVG drawings

#include <cstdio>
#include <filesystem>
#include <numbers>
#include <string>

#include <dcover/dcover.hpp>

int main(int argc, char** argv) {
    using namespace dcover;

    // five inner points (coverage 2) on a small ring, eight outer points
    // (coverage 1) on a wide one
    Instance inst;
    inst.name = "two_rings";
    inst.m = 6;
    inst.ell = 19.0;
    inst.seed = 0;
    const Point center{50.0, 50.0};
    for (int k = 0; k < 5; ++k) {
        const double a = 2.0 * std::numbers::pi * k / 5;
        inst.points.push_back({center.x + 8.0 * std::cos(a), center.y + 8.0 * std::sin(a)});
        inst.kappa.push_back(2);
    }
    for (int k = 0; k < 8; ++k) {
        const double a = 2.0 * std::numbers::pi * (k + 0.5) / 8;
        inst.points.push_back({center.x + 30.0 * std::cos(a), center.y + 30.0 * std::sin(a)});
        inst.kappa.push_back(1);
    }

    // fast clustering heuristic: feasible, not optimal
    const Solution rough = solve_heuristic(inst, /*seed=*/1);

    // exact minimum without the separation rule (the instance's ell is
    // ignored by solve_gmc; solve() would dispatch on it)
    const SolveOutcome exact = solve_gmc(inst);

    // exact minimum with centers at least 19 apart; the answer is found by
    // re-solving with separation rows added each time an incumbent pair of
    // centers sits too close
    const SolveOutcome spread = solve(inst);

    std::printf("%-28s %12s %8s %s\n", "model", "objective", "disks", "status");
    std::printf("%-28s %12.4f %8zu %s\n", "heuristic", rough.objective,
                rough.disks.size(), "feasible");
    std::printf("%-28s %12.4f %8zu %s\n", "minimum area", exact.result.objective,
                exact.solution.disks.size(), to_string(exact.result.status));
    std::printf("%-28s %12.4f %8zu %s\n", "minimum area, spread out",
                spread.result.objective, spread.solution.disks.size(),
                to_string(spread.result.status));
    std::printf("separation cost factor: %.3f\n",
                spread.result.objective / exact.result.objective);

    if (argc > 1) {
        namespace fs = std::filesystem;
        const fs::path dir(argv[1]);
        fs::create_directories(dir);
        save_solution(rough, (dir / "two_rings_heuristic.json").string());
        save_solution(exact.solution, (dir / "two_rings_exact.json").string());
        save_solution(spread.solution, (dir / "two_rings_spread.json").string());
        // the drawing needs the instance to carry the separation distance so
        // close center pairs get annotated
        render_svg_file(inst, exact.solution, (dir / "two_rings_exact.svg").string());
        render_svg_file(inst, spread.solution, (dir / "two_rings_spread.svg").string());
        std::printf("wrote solutions and drawings to %s\n", dir.string().c_str());
    }
    return 0;
}
