#ifndef DCOVER_INSTANCE_HPP
#define DCOVER_INSTANCE_HPP

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "geometry.hpp"
#include "rng.hpp"

namespace dcover {

// A covering problem: points with per-point coverage requirements kappa,
// a disk budget m, and (for the separated variant) a minimum distance ell
// that any two placed disk centers must keep.
struct Instance {
    std::string name;
    std::vector<Point> points;
    std::vector<int> kappa;
    int m = 1;
    std::optional<double> ell;           // absent => plain (unseparated) problem
    std::optional<std::int64_t> seed;    // generator seed, if generated

    int n() const { return static_cast<int>(points.size()); }

    int max_kappa() const {
        return kappa.empty() ? 0 : *std::max_element(kappa.begin(), kappa.end());
    }

    long long total_kappa() const {
        return std::accumulate(kappa.begin(), kappa.end(), 0LL);
    }

    void validate() const {
        if (points.empty()) throw ValidationError("points: must be non-empty");
        if (kappa.size() != points.size()) {
            std::ostringstream os;
            os << "kappa: length " << kappa.size() << " does not match points length "
               << points.size();
            throw ValidationError(os.str());
        }
        for (std::size_t i = 0; i < points.size(); ++i)
            if (!std::isfinite(points[i].x) || !std::isfinite(points[i].y)) {
                std::ostringstream os;
                os << "points[" << i << "]: coordinates must be finite";
                throw ValidationError(os.str());
            }
        for (std::size_t i = 0; i < kappa.size(); ++i)
            if (kappa[i] < 1) {
                std::ostringstream os;
                os << "kappa[" << i << "]: must be >= 1";
                throw ValidationError(os.str());
            }
        if (m < 1) throw ValidationError("m: must be >= 1");
        if (ell && (!std::isfinite(*ell) || *ell <= 0.0))
            throw ValidationError("ell: must be positive and finite");
    }
};

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const Instance& inst) {
    ordered_json j;
    j["name"] = inst.name;
    j["n"] = inst.n();
    j["m"] = inst.m;
    if (inst.ell) j["ell"] = *inst.ell; else j["ell"] = nullptr;
    ordered_json pts = ordered_json::array();
    for (const Point& p : inst.points) pts.push_back(ordered_json::array({p.x, p.y}));
    j["points"] = std::move(pts);
    j["kappa"] = inst.kappa;
    if (inst.seed) j["seed"] = *inst.seed; else j["seed"] = nullptr;
    return j;
}

inline Instance instance_from_json(const ordered_json& j) {
    Instance inst;
    try {
        inst.name = j.at("name").get<std::string>();
        inst.m = j.at("m").get<int>();
        if (j.contains("ell") && !j.at("ell").is_null())
            inst.ell = j.at("ell").get<double>();
        for (const auto& row : j.at("points")) {
            if (!row.is_array() || row.size() != 2)
                throw ValidationError("points: each entry must be an [x, y] pair");
            inst.points.push_back(Point{row[0].get<double>(), row[1].get<double>()});
        }
        inst.kappa = j.at("kappa").get<std::vector<int>>();
        if (j.contains("seed") && !j.at("seed").is_null())
            inst.seed = j.at("seed").get<std::int64_t>();
        if (j.contains("n") && j.at("n").get<int>() != inst.n()) {
            std::ostringstream os;
            os << "n: declared " << j.at("n").get<int>() << " but points has "
               << inst.n() << " entries";
            throw ValidationError(os.str());
        }
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("instance json: ") + e.what());
    }
    inst.validate();
    return inst;
}

inline void save_instance(const Instance& inst, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << to_json(inst).dump(2) << '\n';
    if (!out) throw IoError("write failed: " + path);
}

inline Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open: " + path);
    ordered_json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return instance_from_json(j);
}

// ---------------------------------------------------------------------------
// Random instances and the three benchmark families.

struct GeneratorConfig {
    double canvas_w = 100.0;
    double canvas_h = 100.0;
    std::vector<int> kappa_choices = {1, 2, 3};
    std::optional<double> ell;
    std::uint64_t seed = 0;
};

// Uniform points on [0, canvas_w) x [0, canvas_h); kappa drawn uniformly
// from kappa_choices. Fully determined by cfg.seed.
inline Instance generate_uniform(int n, int m, const GeneratorConfig& cfg,
                                 const std::string& name = "") {
    if (n < 1) throw ValidationError("generate: n must be >= 1");
    if (m < 1) throw ValidationError("generate: m must be >= 1");
    Rng rng(cfg.seed);
    Instance inst;
    inst.name = name;
    inst.m = m;
    inst.ell = cfg.ell;
    inst.seed = static_cast<std::int64_t>(cfg.seed);
    inst.points.reserve(n);
    inst.kappa.reserve(n);
    for (int i = 0; i < n; ++i)
        inst.points.push_back(Point{rng.uniform(0.0, cfg.canvas_w),
                                    rng.uniform(0.0, cfg.canvas_h)});
    for (int i = 0; i < n; ++i) {
        const std::size_t pick = static_cast<std::size_t>(rng.below(cfg.kappa_choices.size()));
        inst.kappa.push_back(cfg.kappa_choices[pick]);
    }
    inst.validate();
    return inst;
}

enum class SuiteScale { Full, Small };

// The three standard families. Per-instance seeds are derived from
// (base_seed, family name, size index, replicate), so any single instance
// can be regenerated without producing the rest.
inline std::vector<Instance> make_suite(const std::string& family,
                                        std::uint64_t base_seed,
                                        SuiteScale scale = SuiteScale::Full) {
    struct SizeSpec { int n; int m; };
    std::vector<SizeSpec> sizes;
    constexpr int kReplicates = 5;
    if (family == "uni_sm") {
        for (int n = 20; n <= 200; n += 10) sizes.push_back({n, 20});
    } else if (family == "uni_lg") {
        for (int n = 30; n <= 300; n += 10) sizes.push_back({n, 30});
    } else if (family == "uni_fix_n") {
        for (int m = 5; m <= 100; m += 5) sizes.push_back({250, m});
    } else {
        throw ValidationError("unknown family: " + family +
                              " (expected uni_sm, uni_lg or uni_fix_n)");
    }
    if (scale == SuiteScale::Small) {
        for (SizeSpec& s : sizes) {
            s.n = std::min(s.n, 60);
            s.m = std::min(s.m, 60);
        }
        sizes.erase(std::unique(sizes.begin(), sizes.end(),
                                [](SizeSpec a, SizeSpec b) {
                                    return a.n == b.n && a.m == b.m;
                                }),
                    sizes.end());
    }

    const std::uint64_t family_seed = seed_mix(base_seed, fnv1a(family));
    std::vector<Instance> out;
    out.reserve(sizes.size() * kReplicates);
    for (std::size_t si = 0; si < sizes.size(); ++si) {
        const std::uint64_t size_seed = seed_mix(family_seed, si);
        for (int rep = 0; rep < kReplicates; ++rep) {
            GeneratorConfig cfg;
            cfg.seed = seed_mix(size_seed, static_cast<std::uint64_t>(rep));
            std::ostringstream nm;
            nm << family << "_n" << std::setw(3) << std::setfill('0') << sizes[si].n
               << "_m" << std::setw(3) << std::setfill('0') << sizes[si].m
               << "_r" << rep;
            out.push_back(generate_uniform(sizes[si].n, sizes[si].m, cfg, nm.str()));
        }
    }
    return out;
}

} // namespace dcover

#endif
