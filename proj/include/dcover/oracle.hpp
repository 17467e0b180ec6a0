#ifndef DCOVER_ORACLE_HPP
#define DCOVER_ORACLE_HPP

#include <cmath>
#include <limits>
#include <vector>

#include "candidates.hpp"
#include "cover_model.hpp"
#include "errors.hpp"
#include "instance.hpp"

namespace dcover {

struct OracleResult {
    SolveStatus status = SolveStatus::Infeasible;
    std::vector<Disk> disks;
    double objective = std::numeric_limits<double>::infinity();
};

namespace detail {

struct BruteForce {
    const CandidateSet& cands;
    const Instance& inst;
    const bool separated;
    const double ell;
    long long nodes = 0;
    double best = std::numeric_limits<double>::infinity();
    std::vector<int> best_counts;
    std::vector<int> counts;
    std::vector<int> cov;
    long long deficit = 0;

    static constexpr long long kNodeCap = 20'000'000;

    BruteForce(const CandidateSet& c, const Instance& i)
        : cands(c), inst(i), separated(i.ell.has_value()),
          ell(i.ell.value_or(0.0)) {}

    bool sep_ok_with(int cand) const {
        if (!separated) return true;
        const Point y = cands.disks[cand].center;
        for (int j = 0; j < cands.size(); ++j)
            if (counts[j] > 0 && dist(cands.disks[j].center, y) < ell - 1e-9)
                return false;
        return true;
    }

    void take(int cand, int delta) {
        counts[cand] += delta;
        for (int j : cands.covers[cand]) {
            const int before = cov[j];
            cov[j] += delta;
            if (delta > 0 && before < inst.kappa[j])
                deficit -= std::min(delta, inst.kappa[j] - before);
            if (delta < 0 && cov[j] < inst.kappa[j])
                deficit += std::min(-delta, inst.kappa[j] - cov[j]);
        }
    }

    void dfs(int pos, int budget, double cost) {
        if (++nodes > kNodeCap)
            throw ValidationError("brute force: search budget exceeded");
        if (cost >= best - 1e-12) return;
        if (deficit == 0) {
            best = cost;
            best_counts = counts;
            return;
        }
        if (pos >= cands.size() || budget == 0) return;
        const int max_here = separated ? 1 : budget;
        dfs(pos + 1, budget, cost);  // skip this candidate entirely
        if (!sep_ok_with(pos)) return;
        for (int c = 1; c <= max_here && c <= budget; ++c) {
            take(pos, 1);
            dfs(pos + 1, budget - c, cost + c * cands.disks[pos].area());
        }
        take(pos, -counts[pos]);
    }
};

} // namespace detail

// Exhaustive reference solver for small inputs: tries every candidate
// multiset (every subset once separation applies) over the given pool and
// keeps the cheapest feasible one. Guarded so it refuses anything that
// could run away.
inline OracleResult brute_force_cover(const CandidateSet& cands, const Instance& inst) {
    inst.validate();
    if (cands.size() > 64)
        throw ValidationError("brute force: candidate pool too large (> 64)");
    if (inst.m > 6)
        throw ValidationError("brute force: budget too large (> 6)");

    detail::BruteForce bf(cands, inst);
    bf.counts.assign(cands.size(), 0);
    bf.cov.assign(inst.n(), 0);
    bf.deficit = inst.total_kappa();
    bf.dfs(0, inst.m, 0.0);

    OracleResult out;
    if (bf.best < std::numeric_limits<double>::infinity()) {
        out.status = SolveStatus::Optimal;
        out.objective = bf.best;
        for (int i = 0; i < cands.size(); ++i)
            for (int c = 0; c < bf.best_counts[i]; ++c)
                out.disks.push_back(cands.disks[i]);
    }
    return out;
}

// Convenience overload building the standard pool itself (plus the k-gon
// disks when the instance asks for center separation).
inline OracleResult brute_force_cover(const Instance& inst) {
    inst.validate();
    CandidateSet cands = enumerate_candidates(inst.points);
    if (inst.ell) cands = augment_kgons(cands, inst, *inst.ell);
    return brute_force_cover(cands, inst);
}

} // namespace dcover

#endif
