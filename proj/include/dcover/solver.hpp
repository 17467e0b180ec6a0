#ifndef DCOVER_SOLVER_HPP
#define DCOVER_SOLVER_HPP

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bnb.hpp"
#include "candidates.hpp"
#include "cover_model.hpp"
#include "errors.hpp"
#include "heuristic.hpp"
#include "instance.hpp"
#include "solution.hpp"

namespace dcover {

struct SolveOptions {
    double alpha = 1.2;            // radius-pruning factor for separated solving
    bool cliques = true;           // allow clique rows in place of pair rows
    bool augment = true;           // add the k-gon disks before separated solving
    SolveLimits limits;            // shared across all separation rounds
    std::uint64_t heuristic_seed = 0;
    int max_rounds = 200;          // separation rounds before giving up
};

struct SolveOutcome {
    SolveResult result;
    Solution solution;             // meaningful when result.objective is finite
    int candidates_initial = 0;
    int candidates_final = 0;
    int pair_cuts = 0;
    int clique_cuts = 0;
};

// One pair of disk centers closer together than the required distance.
// `a` and `b` index into whatever list the violations were computed from.
struct SeparationViolation {
    int a = 0;
    int b = 0;
    double distance = 0.0;
};

// All unordered pairs of the given disks whose centers lie closer than
// `ell`, with a 1e-9 slack: centers at exactly `ell` apart are acceptable.
inline std::vector<SeparationViolation> separation_violations(
    const std::vector<Disk>& disks, double ell) {
    std::vector<SeparationViolation> out;
    for (std::size_t i = 0; i < disks.size(); ++i)
        for (std::size_t j = i + 1; j < disks.size(); ++j) {
            const double d = dist(disks[i].center, disks[j].center);
            if (d < ell - 1e-9)
                out.push_back({static_cast<int>(i), static_cast<int>(j), d});
        }
    return out;
}

// Carries clique bookkeeping across separation rounds: where cliques were
// centered so far (new cliques are suppressed near an existing center) and
// running counters used to name the generated rows.
struct CliqueState {
    bool enabled = true;
    std::vector<Point> anchors;
    int pair_rows = 0;
    int clique_rows = 0;
};

namespace detail {

inline bool pack_row_excludes(const CoverModel& model, int a, int b) {
    for (const PackRow& row : model.packs)
        if (std::binary_search(row.vars.begin(), row.vars.end(), a) &&
            std::binary_search(row.vars.begin(), row.vars.end(), b))
            return true;
    return false;
}

} // namespace detail

// Turn violated center pairs into model rows. Violation indices here refer
// to candidate variables. For each violated pair, in order: skip it if some
// pack row already forbids the pair; else, when the two centers are closer
// than ell/2 and no earlier clique center lies within ell/2 of the first
// one, add a clique row over every candidate within ell/2 of that center
// (any two of those conflict, so one row replaces many pair rows); else add
// the plain two-variable pair row. Returns the number of rows added, which
// is at least 1 whenever `violations` is non-empty, because the solver that
// produced the violating selection had already satisfied every older row.
inline int add_separation_cuts(CoverModel& model, const CandidateSet& cands,
                               const std::vector<SeparationViolation>& violations,
                               double ell, CliqueState& state) {
    int added = 0;
    for (const SeparationViolation& v : violations) {
        const int a = std::min(v.a, v.b);
        const int b = std::max(v.a, v.b);
        if (detail::pack_row_excludes(model, a, b)) continue;

        const Point ya = cands.disks[v.a].center;
        bool clique_ok = state.enabled && v.distance < ell / 2.0;
        if (clique_ok)
            for (const Point& prev : state.anchors)
                if (dist(prev, ya) < ell / 2.0) { clique_ok = false; break; }

        PackRow row;
        std::ostringstream nm;
        if (clique_ok) {
            for (int i = 0; i < cands.size(); ++i)
                if (dist(cands.disks[i].center, ya) < ell / 2.0)
                    row.vars.push_back(i);
            nm << "clique" << state.clique_rows++;
            state.anchors.push_back(ya);
        } else {
            row.vars = {a, b};
            nm << "pair" << state.pair_rows++;
        }
        row.name = nm.str();
        model.packs.push_back(std::move(row));
        ++added;
    }
    return added;
}

namespace detail {

inline int find_candidate_near(const CandidateSet& cands, const DiskKeyMap& keys,
                               const Disk& d) {
    const int hit = find_candidate(keys, d);
    if (hit >= 0) return hit;
    for (int i = 0; i < cands.size(); ++i) {
        const Disk& c = cands.disks[i];
        if (std::abs(c.radius - d.radius) <= 1e-7 &&
            std::abs(c.center.x - d.center.x) <= 1e-7 &&
            std::abs(c.center.y - d.center.y) <= 1e-7)
            return i;
    }
    return -1;
}

// Express a geometric solution as candidate multiplicities; empty on any miss.
inline std::vector<std::pair<int, int>> selection_from_disks(
    const CandidateSet& cands, const std::vector<Disk>& disks) {
    const DiskKeyMap keys = candidate_key_index(cands);
    std::vector<std::pair<int, int>> sel;
    for (const Disk& d : disks) {
        const int i = find_candidate_near(cands, keys, d);
        if (i < 0) return {};
        bool found = false;
        for (auto& [c, cnt] : sel)
            if (c == i) { ++cnt; found = true; break; }
        if (!found) sel.emplace_back(i, 1);
    }
    std::sort(sel.begin(), sel.end());
    return sel;
}

inline std::vector<Disk> disks_from_selection(
    const CandidateSet& cands, const std::vector<std::pair<int, int>>& sel) {
    std::vector<Disk> disks;
    for (const auto& [i, cnt] : sel)
        for (int c = 0; c < cnt; ++c) disks.push_back(cands.disks[i]);
    return disks;
}

inline double remaining_seconds(std::chrono::steady_clock::time_point t0,
                                double total) {
    if (total <= 0.0) return 0.0;  // unlimited
    const double used =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return std::max(1e-3, total - used);
}

} // namespace detail

// Exact cover without separation: enumerate the finite candidate pool, build
// the integer model, seed the search with the cluster heuristic when it maps
// cleanly onto candidates, and minimize.
inline SolveOutcome solve_gmc(const Instance& inst, const SolveOptions& opts = {}) {
    inst.validate();
    const auto t0 = std::chrono::steady_clock::now();
    CandidateSet cands = enumerate_candidates(inst.points);

    SolveOutcome out;
    out.candidates_initial = cands.size();
    out.candidates_final = cands.size();

    CoverModel model = build_gmc_model(cands, inst);

    std::vector<std::pair<int, int>> warm;
    if (inst.max_kappa() <= inst.m) {
        const Solution heur = solve_heuristic(inst, opts.heuristic_seed);
        warm = detail::selection_from_disks(cands, heur.disks);
    }

    SolveLimits limits = opts.limits;
    limits.time_limit_s = opts.limits.time_limit_s <= 0.0
                              ? 0.0
                              : detail::remaining_seconds(t0, opts.limits.time_limit_s);
    out.result = solve_exact(model, limits, warm.empty() ? nullptr : &warm);

    if (std::isfinite(out.result.objective)) {
        out.solution = make_solution(
            "gmc-ip", detail::disks_from_selection(cands, out.result.selected), inst,
            opts.heuristic_seed);
        out.solution.lower_bound = out.result.lower_bound;
        out.solution.stats = out.result.stats;
    }
    return out;
}

// Exact cover under a minimum center separation `ell`, by lazy constraint
// generation: solve, collect selected center pairs closer than ell, turn
// them into pair/clique rows, and repeat until the cover is separation-clean.
// The unseparated optimum is solved first; it supplies the radius cap for
// candidate pruning and is reported as the lower bound of the final result.
inline SolveOutcome solve_dgmc(const Instance& inst, const SolveOptions& opts = {}) {
    inst.validate();
    if (!inst.ell)
        throw ValidationError("ell: separated solve requires a separation distance");
    const double ell = *inst.ell;
    const auto t0 = std::chrono::steady_clock::now();

    // reference (unseparated) optimum: the alpha-pruning radius, a quick
    // infeasibility certificate, and the reported lower bound come from it
    CandidateSet cands = enumerate_candidates(inst.points);
    SolveOutcome out;
    out.candidates_initial = cands.size();

    CoverModel base_model = build_gmc_model(cands, inst);
    std::vector<std::pair<int, int>> warm;
    if (inst.max_kappa() <= inst.m) {
        const Solution heur = solve_heuristic(inst, opts.heuristic_seed);
        warm = detail::selection_from_disks(cands, heur.disks);
    }
    SolveLimits ref_limits = opts.limits;
    if (opts.limits.time_limit_s > 0.0)
        ref_limits.time_limit_s = detail::remaining_seconds(t0, opts.limits.time_limit_s);
    const SolveResult ref = solve_exact(base_model, ref_limits,
                                        warm.empty() ? nullptr : &warm);
    if (ref.status == SolveStatus::Infeasible) {
        out.result = ref;
        out.result.stats.rounds = 1;
        return out;
    }
    const bool have_ref = std::isfinite(ref.objective);

    SolveStats agg;
    agg.nodes = ref.stats.nodes;
    agg.rounds = 0;
    agg.cuts = 0;

    // Shrink the pool around the unseparated optimum first, then add the
    // k-gon disks: the added disks exist to make multiplicity achievable
    // under separation, so the radius cap must not apply to them.
    if (have_ref) {
        Solution ref_sol = make_solution(
            "gmc-ip", detail::disks_from_selection(cands, ref.selected), inst, 0);
        cands = prune_by_alpha(cands, ref_sol, opts.alpha);
    }
    if (opts.augment) cands = augment_kgons(cands, inst, ell);
    out.candidates_final = cands.size();

    CoverModel model = build_gmc_model(cands, inst);
    binarize(model);

    CliqueState cliques;
    cliques.enabled = opts.cliques;
    SolveResult res;
    for (int round = 1; round <= opts.max_rounds; ++round) {
        SolveLimits limits = opts.limits;
        if (opts.limits.time_limit_s > 0.0) {
            limits.time_limit_s = detail::remaining_seconds(t0, opts.limits.time_limit_s);
            if (limits.time_limit_s <= 1e-3 && round > 1) {
                res.status = SolveStatus::Feasible;
                res.objective = detail::kInf;
                res.selected.clear();
                agg.rounds = round - 1;
                break;
            }
        }
        res = solve_exact(model, limits, nullptr);
        agg.rounds = round;
        agg.nodes += res.stats.nodes;
        if (res.status == SolveStatus::Infeasible) break;
        if (!std::isfinite(res.objective)) break;  // ran out of budget undecided

        std::vector<Disk> sel_disks;
        std::vector<int> sel_ids;
        for (const auto& [i, cnt] : res.selected) {
            sel_disks.push_back(cands.disks[i]);
            sel_ids.push_back(i);
        }
        std::vector<SeparationViolation> violated =
            separation_violations(sel_disks, ell);
        if (violated.empty()) break;  // separation-clean: done
        for (SeparationViolation& v : violated) {
            v.a = sel_ids[v.a];
            v.b = sel_ids[v.b];
        }
        agg.cuts += add_separation_cuts(model, cands, violated, ell, cliques);
    }

    // a round cap (or other early exit) can leave the last incumbent dirty
    if (std::isfinite(res.objective) &&
        !separation_ok(detail::disks_from_selection(cands, res.selected), ell)) {
        res.status = SolveStatus::Feasible;
        res.objective = detail::kInf;
        res.selected.clear();
    }

    if (opts.limits.capture_timings)
        agg.wall_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    out.result = res;
    out.result.stats = agg;
    out.pair_cuts = cliques.pair_rows;
    out.clique_cuts = cliques.clique_rows;
    // the separated optimum can only cost more than the unseparated one, so
    // the reference objective is the natural bound to report gaps against
    if (have_ref) out.result.lower_bound = ref.objective;
    if (std::isfinite(res.objective)) {
        out.solution = make_solution(
            "dgmc-ip", detail::disks_from_selection(cands, res.selected), inst,
            opts.heuristic_seed);
        out.solution.lower_bound = out.result.lower_bound;
        out.solution.stats = agg;
    }
    return out;
}

// Dispatch on whether the instance carries a separation distance.
inline SolveOutcome solve(const Instance& inst, const SolveOptions& opts = {}) {
    return inst.ell ? solve_dgmc(inst, opts) : solve_gmc(inst, opts);
}

} // namespace dcover

#endif
