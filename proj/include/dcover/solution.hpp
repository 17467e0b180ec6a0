#ifndef DCOVER_SOLUTION_HPP
#define DCOVER_SOLUTION_HPP

#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "geometry.hpp"
#include "instance.hpp"

namespace dcover {

// Search statistics attached to exact-solver output.
struct SolveStats {
    long long nodes = 0;     // branch-and-bound nodes expanded
    int rounds = 1;          // separation rounds (1 when no distance constraint)
    int cuts = 0;            // violated pair/clique rows added in total
    double wall_ms = 0.0;    // 0 unless timing capture was requested
};

struct Solution {
    std::string method;                    // "heuristic", "gmc-ip", "dgmc-ip"
    std::vector<Disk> disks;
    std::vector<std::vector<int>> covers;  // per disk: sorted indices it covers
    double objective = 0.0;                // pi * sum r^2, always recomputed
    std::string instance_name;
    std::uint64_t seed = 0;
    std::optional<double> lower_bound;     // exact methods only
    std::optional<SolveStats> stats;

    std::size_t size() const { return disks.size(); }
};

inline double total_area(const std::vector<Disk>& disks) {
    double sum = 0.0;
    for (const Disk& d : disks) sum += d.radius * d.radius;
    return std::numbers::pi * sum;
}

// How many of the given disks contain each point.
inline std::vector<int> coverage_counts(const std::vector<Disk>& disks,
                                        const std::vector<Point>& points,
                                        double tol = kContainTol) {
    std::vector<int> counts(points.size(), 0);
    for (const Disk& d : disks)
        for (std::size_t j = 0; j < points.size(); ++j)
            if (contains(d, points[j], tol)) ++counts[j];
    return counts;
}

inline std::vector<std::vector<int>> compute_covers(const std::vector<Disk>& disks,
                                                    const std::vector<Point>& points,
                                                    double tol = kContainTol) {
    std::vector<std::vector<int>> covers(disks.size());
    for (std::size_t i = 0; i < disks.size(); ++i)
        for (std::size_t j = 0; j < points.size(); ++j)
            if (contains(disks[i], points[j], tol)) covers[i].push_back(static_cast<int>(j));
    return covers;
}

// Coverage + budget feasibility (ignores any separation requirement).
inline bool covers_instance(const std::vector<Disk>& disks, const Instance& inst,
                            double tol = kContainTol) {
    if (static_cast<int>(disks.size()) > inst.m) return false;
    const std::vector<int> counts = coverage_counts(disks, inst.points, tol);
    for (std::size_t j = 0; j < counts.size(); ++j)
        if (counts[j] < inst.kappa[j]) return false;
    return true;
}

// Smallest pairwise center distance; +inf for fewer than two disks.
inline double min_center_separation(const std::vector<Disk>& disks) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < disks.size(); ++i)
        for (std::size_t j = i + 1; j < disks.size(); ++j)
            best = std::min(best, dist(disks[i].center, disks[j].center));
    return best;
}

// Separation holds when every pair of centers is at distance >= ell, with a
// 1e-9 slack so that constructions placing centers at exactly ell pass.
inline bool separation_ok(const std::vector<Disk>& disks, double ell) {
    return min_center_separation(disks) >= ell - 1e-9;
}

inline Solution make_solution(std::string method, std::vector<Disk> disks,
                              const Instance& inst, std::uint64_t seed = 0) {
    Solution sol;
    sol.method = std::move(method);
    sol.disks = std::move(disks);
    sol.covers = compute_covers(sol.disks, inst.points);
    sol.objective = total_area(sol.disks);
    sol.instance_name = inst.name;
    sol.seed = seed;
    return sol;
}

inline ordered_json to_json(const Solution& sol) {
    ordered_json j;
    j["method"] = sol.method;
    j["objective"] = sol.objective;
    ordered_json disks = ordered_json::array();
    for (const Disk& d : sol.disks) {
        ordered_json e;
        e["x"] = d.center.x;
        e["y"] = d.center.y;
        e["r"] = d.radius;
        disks.push_back(std::move(e));
    }
    j["disks"] = std::move(disks);
    if (sol.lower_bound) j["lower_bound"] = *sol.lower_bound;
    if (sol.stats) {
        ordered_json s;
        s["nodes"] = sol.stats->nodes;
        s["rounds"] = sol.stats->rounds;
        s["cuts"] = sol.stats->cuts;
        s["wall_ms"] = sol.stats->wall_ms;
        j["stats"] = std::move(s);
    }
    ordered_json meta;
    meta["instance"] = sol.instance_name;
    meta["seed"] = sol.seed;
    j["meta"] = std::move(meta);
    return j;
}

inline Solution solution_from_json(const ordered_json& j) {
    Solution sol;
    try {
        sol.method = j.at("method").get<std::string>();
        sol.objective = j.at("objective").get<double>();
        for (const auto& e : j.at("disks")) {
            Disk d;
            d.center.x = e.at("x").get<double>();
            d.center.y = e.at("y").get<double>();
            d.radius = e.at("r").get<double>();
            if (!std::isfinite(d.radius) || d.radius < 0.0)
                throw ValidationError("disks: radius must be finite and >= 0");
            sol.disks.push_back(d);
        }
        if (j.contains("lower_bound") && !j.at("lower_bound").is_null())
            sol.lower_bound = j.at("lower_bound").get<double>();
        if (j.contains("stats")) {
            SolveStats st;
            const auto& s = j.at("stats");
            st.nodes = s.value("nodes", 0LL);
            st.rounds = s.value("rounds", 1);
            st.cuts = s.value("cuts", 0);
            st.wall_ms = s.value("wall_ms", 0.0);
            sol.stats = st;
        }
        if (j.contains("meta")) {
            sol.instance_name = j.at("meta").value("instance", std::string());
            sol.seed = j.at("meta").value("seed", std::uint64_t{0});
        }
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("solution json: ") + e.what());
    }
    const double recomputed = total_area(sol.disks);
    const double scale = std::max(1.0, std::abs(recomputed));
    if (std::abs(recomputed - sol.objective) > 1e-9 * scale) {
        std::ostringstream os;
        os << "objective: stored " << sol.objective << " differs from recomputed "
           << recomputed;
        throw ValidationError(os.str());
    }
    return sol;
}

inline void save_solution(const Solution& sol, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << to_json(sol).dump(2) << '\n';
    if (!out) throw IoError("write failed: " + path);
}

inline Solution load_solution(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open: " + path);
    ordered_json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return solution_from_json(j);
}

} // namespace dcover

#endif
