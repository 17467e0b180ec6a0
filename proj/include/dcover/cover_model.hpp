#ifndef DCOVER_COVER_MODEL_HPP
#define DCOVER_COVER_MODEL_HPP

#include <limits>
#include <string>
#include <vector>

#include "candidates.hpp"
#include "errors.hpp"
#include "instance.hpp"
#include "solution.hpp"

namespace dcover {

// A packing side constraint: sum of the listed variables <= 1. Generated
// lazily from separation violations (pair rows and clique rows).
struct PackRow {
    std::vector<int> vars;  // sorted candidate indices
    std::string name;
};

// Integer program over a candidate pool:
//   minimize    sum cost[i] * x[i]
//   subject to  sum_{i covering j} x[i] >= kappa[j]   for every point j
//               sum x[i] <= budget
//               sum_{i in row} x[i] <= 1               for every pack row
//               0 <= x[i] <= ub[i], integer
struct CoverModel {
    std::vector<double> cost;
    std::vector<std::vector<int>> covers;     // candidate -> sorted point indices
    std::vector<int> ub;
    std::vector<int> kappa;
    int budget = 0;
    std::vector<PackRow> packs;
    std::vector<std::vector<int>> point_adj;  // point -> candidates covering it
    // Cover-set dominance between candidates is only sound while no pack row
    // distinguishes them; separated solving turns it off.
    bool allow_dominance = true;

    int n_vars() const { return static_cast<int>(cost.size()); }
    int n_points() const { return static_cast<int>(kappa.size()); }
    int n_rows() const {
        return n_points() + 1 + static_cast<int>(packs.size());
    }

    void rebuild_point_adj() {
        point_adj.assign(kappa.size(), {});
        for (int i = 0; i < n_vars(); ++i)
            for (int j : covers[i]) point_adj[j].push_back(i);
    }
};

inline CoverModel build_gmc_model(const CandidateSet& cands, const Instance& inst) {
    inst.validate();
    CoverModel model;
    model.cost.reserve(cands.size());
    for (const Disk& d : cands.disks) model.cost.push_back(d.area());
    model.covers = cands.covers;
    model.ub.assign(cands.size(), inst.m);
    model.kappa = inst.kappa;
    model.budget = inst.m;
    model.rebuild_point_adj();
    return model;
}

// Cap every variable at one copy. Required once centers must keep a minimum
// distance: two copies of the same disk sit at distance zero.
inline void binarize(CoverModel& model) {
    for (int& u : model.ub) u = std::min(u, 1);
    model.allow_dominance = false;
}

enum class SolveStatus { Optimal, Feasible, Infeasible };

inline const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Optimal: return "optimal";
        case SolveStatus::Feasible: return "feasible";
        case SolveStatus::Infeasible: return "infeasible";
    }
    return "unknown";
}

struct SolveLimits {
    double time_limit_s = 900.0;   // <= 0 means unlimited
    long long node_cap = 0;        // 0 means unlimited
    bool capture_timings = false;  // leave wall_ms at 0 unless asked
};

struct SolveResult {
    SolveStatus status = SolveStatus::Infeasible;
    std::vector<std::pair<int, int>> selected;  // (candidate, copies), sorted
    double objective = std::numeric_limits<double>::infinity();
    double lower_bound = 0.0;
    SolveStats stats;
};

} // namespace dcover

#endif
