// Command line front end: generate instances and benchmark suites, run the
// heuristic or the exact solvers, emit benchmark CSV tables, render SVG
// pictures. All outputs are deterministic for fixed flags and seeds.
//
// Exit codes: 0 success (an infeasible model is an expected outcome, not an
// error), 2 usage errors, 3 I/O failures or bad input content, 4 anything
// unexpected.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include <dcover/dcover.hpp>

namespace fs = std::filesystem;
using namespace dcover;

namespace {

constexpr const char* kCsvColumnDoc =
    "CSV output starts with the version line '# disk-cover-bench v1' followed by\n"
    "the column header. Columns: instance,n,m,ell,method,objective,lower_bound,\n"
    "gap,wall_ms,status,seed. 'gap' is (objective - reference) / objective with\n"
    "the solver's lower bound as reference (for heuristic rows: the gmc-ip\n"
    "objective on the same instance, when available). Optional fields stay\n"
    "empty. wall_ms is 0 unless --timings is given, keeping output bytes\n"
    "reproducible across machines.";

struct RunSettings {
    std::uint64_t seed = 0;
    std::optional<double> ell_flag;  // --ell when given; overrides the instance
    double alpha = 1.2;
    std::string cliques = "on";
    std::string augment = "on";
    double time_limit = 900.0;
    bool timings = false;
};

void add_run_flags(CLI::App* cmd, RunSettings& s) {
    cmd->add_option("--seed", s.seed, "Run seed for the clustering heuristic")
        ->capture_default_str();
    cmd->add_option("--ell", s.ell_flag,
                    "Minimum center separation for dgmc-ip (defaults to the "
                    "instance value, else 5)");
    cmd->add_option("--alpha", s.alpha,
                    "Radius pruning factor for dgmc-ip (inf disables pruning)")
        ->capture_default_str();
    cmd->add_option("--cliques", s.cliques, "Use clique rows for dense conflicts")
        ->check(CLI::IsMember({"on", "off"}))
        ->capture_default_str();
    cmd->add_option("--augment", s.augment,
                    "Add ring candidates that make multiplicity achievable "
                    "under separation")
        ->check(CLI::IsMember({"on", "off"}))
        ->capture_default_str();
    cmd->add_option("--time-limit", s.time_limit, "Solver time limit in seconds")
        ->capture_default_str();
    cmd->add_flag("--timings", s.timings,
                  "Record wall-clock times (off by default so artifacts are "
                  "byte-reproducible)");
}

SolveOptions to_options(const RunSettings& s) {
    SolveOptions opts;
    opts.alpha = s.alpha;
    opts.cliques = s.cliques == "on";
    opts.augment = s.augment == "on";
    opts.heuristic_seed = s.seed;
    opts.limits.time_limit_s = s.time_limit;
    opts.limits.capture_timings = s.timings;
    return opts;
}

struct MethodRun {
    RunRecord record;
    std::optional<Solution> solution;
};

// One (instance, method) run. Infeasibility is reported in the record;
// anything else propagates to the caller.
MethodRun run_method(const Instance& inst, const std::string& method,
                     const RunSettings& s) {
    MethodRun run;
    RunRecord& r = run.record;
    r.instance = inst.name;
    r.n = inst.n();
    r.m = inst.m;
    r.method = method;
    r.seed = static_cast<std::int64_t>(s.seed);

    if (method == "heuristic") {
        const auto t0 = std::chrono::steady_clock::now();
        try {
            Solution sol = solve_heuristic(inst, s.seed);
            if (s.timings)
                r.wall_ms = std::chrono::duration<double, std::milli>(
                                std::chrono::steady_clock::now() - t0)
                                .count();
            r.objective = sol.objective;
            r.status = "feasible";
            run.solution = std::move(sol);
        } catch (const InfeasibleError&) {
            r.status = "infeasible";
        }
        return run;
    }

    SolveOutcome out;
    if (method == "gmc-ip") {
        out = solve_gmc(inst, to_options(s));
    } else {
        Instance separated = inst;
        separated.ell = s.ell_flag ? *s.ell_flag : inst.ell.value_or(5.0);
        r.ell = separated.ell;
        out = solve_dgmc(separated, to_options(s));
    }

    r.status = to_string(out.result.status);
    r.wall_ms = out.result.stats.wall_ms;
    if (std::isfinite(out.result.objective)) {
        r.objective = out.result.objective;
        if (std::isfinite(out.result.lower_bound)) {
            r.lower_bound = out.result.lower_bound;
            r.gap = compute_gap(*r.objective, *r.lower_bound);
        }
        run.solution = std::move(out.solution);
    }
    return run;
}

// Fill in heuristic gaps against the exact unseparated objective on the same
// instance, once all of an instance's rows exist.
void anchor_heuristic_gaps(std::vector<MethodRun>& runs) {
    std::optional<double> exact;
    for (const MethodRun& run : runs)
        if (run.record.method == "gmc-ip" && run.record.objective)
            exact = run.record.objective;
    if (!exact) return;
    for (MethodRun& run : runs)
        if (run.record.method == "heuristic" && run.record.objective &&
            !run.record.gap)
            run.record.gap = compute_gap(*run.record.objective, *exact);
}

// ---------------------------------------------------------------------------
// generate

struct GenerateArgs {
    int n = 0;
    int m = 0;
    std::uint64_t seed = 0;
    std::vector<int> kappa_choices{1, 2, 3};
    std::optional<double> ell;
    std::string family;
    std::string scale = "full";
    std::string output;
};

int cmd_generate(const GenerateArgs& a, const CLI::App& cmd) {
    if (a.family.empty() && cmd.count("--n") == 0)
        throw CLI::ValidationError("generate",
                                   "either --n/--m or --family is required");

    if (a.family.empty()) {
        GeneratorConfig cfg;
        cfg.seed = a.seed;
        cfg.kappa_choices = a.kappa_choices;
        cfg.ell = a.ell;
        const std::string stem = fs::path(a.output).stem().string();
        const Instance inst = generate_uniform(a.n, a.m, cfg, stem);
        save_instance(inst, a.output);
        return 0;
    }

    const SuiteScale scale =
        a.scale == "small" ? SuiteScale::Small : SuiteScale::Full;
    const std::vector<Instance> suite = make_suite(a.family, a.seed, scale);

    fs::create_directories(a.output);
    ordered_json manifest;
    manifest["suite"] = a.family;
    manifest["scale"] = a.scale;
    manifest["base_seed"] = a.seed;
    manifest["count"] = suite.size();
    ordered_json list = ordered_json::array();
    for (const Instance& inst : suite) {
        const std::string file = inst.name + ".json";
        save_instance(inst, (fs::path(a.output) / file).string());
        ordered_json e;
        e["name"] = inst.name;
        e["file"] = file;
        e["n"] = inst.n();
        e["m"] = inst.m;
        e["seed"] = *inst.seed;
        list.push_back(std::move(e));
    }
    manifest["instances"] = std::move(list);
    std::ofstream out(fs::path(a.output) / "manifest.json");
    if (!out) throw IoError("cannot open for writing: " + a.output);
    out << manifest.dump(2) << '\n';
    if (!out) throw IoError("write failed: " + a.output);
    return 0;
}

// ---------------------------------------------------------------------------
// solve

struct SolveArgs {
    std::string instance_path;
    std::string method;
    RunSettings settings;
    std::string solution_out;
    std::string record_out;
};

void append_record(const std::string& path, const RunRecord& record) {
    const bool fresh = !fs::exists(path) || fs::file_size(path) == 0;
    std::ofstream out(path, std::ios::app);
    if (!out) throw IoError("cannot open for writing: " + path);
    if (fresh) out << csv_header();
    out << to_csv_row(record);
    if (!out) throw IoError("write failed: " + path);
}

int cmd_solve(const SolveArgs& a) {
    Instance inst = load_instance(a.instance_path);
    if (inst.name.empty()) inst.name = fs::path(a.instance_path).stem().string();

    const MethodRun run = run_method(inst, a.method, a.settings);
    if (!a.solution_out.empty() && run.solution)
        save_solution(*run.solution, a.solution_out);
    if (!a.record_out.empty()) append_record(a.record_out, run.record);
    std::cout << csv_header() << to_csv_row(run.record);
    return 0;
}

// ---------------------------------------------------------------------------
// benchmark

struct BenchmarkArgs {
    std::string suite_dir;
    std::string methods = "heuristic,gmc-ip";
    RunSettings settings;
    std::string output;
    int jobs = 1;
};

std::vector<std::string> split_methods(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ','))
        if (!cur.empty()) out.push_back(cur);
    if (out.empty())
        throw CLI::ValidationError("benchmark", "--methods must name at least one method");
    for (const std::string& m : out)
        if (m != "heuristic" && m != "gmc-ip" && m != "dgmc-ip")
            throw CLI::ValidationError("benchmark", "unknown method '" + m + "'");
    return out;
}

int cmd_benchmark(const BenchmarkArgs& a) {
    const fs::path dir(a.suite_dir);
    const fs::path manifest_path = dir / "manifest.json";
    std::ifstream min(manifest_path);
    if (!min) throw IoError("cannot open: " + manifest_path.string());
    ordered_json manifest;
    try {
        min >> manifest;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(manifest_path.string() + ": " + e.what());
    }
    std::vector<std::string> files;
    try {
        for (const auto& e : manifest.at("instances"))
            files.push_back(e.at("file").get<std::string>());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(manifest_path.string() + ": " + e.what());
    }
    if (files.empty()) throw ValidationError("suite has no instances: " + a.suite_dir);

    const std::vector<std::string> methods = split_methods(a.methods);
    std::vector<Instance> instances;
    instances.reserve(files.size());
    for (const std::string& f : files)
        instances.push_back(load_instance((dir / f).string()));

    // one work unit per instance; rows come out in manifest order whatever
    // the completion order
    std::vector<std::vector<MethodRun>> results(instances.size());
    auto work = [&](std::size_t idx) {
        std::vector<MethodRun>& runs = results[idx];
        for (const std::string& method : methods) {
            try {
                runs.push_back(run_method(instances[idx], method, a.settings));
            } catch (const Error& e) {
                MethodRun failed;
                failed.record.instance = instances[idx].name;
                failed.record.n = instances[idx].n();
                failed.record.m = instances[idx].m;
                failed.record.method = method;
                failed.record.status = "error";
                failed.record.seed = static_cast<std::int64_t>(a.settings.seed);
                (void)e;
                runs.push_back(std::move(failed));
            }
        }
        anchor_heuristic_gaps(runs);
    };

    const int jobs = std::max(1, a.jobs);
    if (jobs == 1 || instances.size() <= 1) {
        for (std::size_t i = 0; i < instances.size(); ++i) work(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        const int width = std::min<std::size_t>(jobs, instances.size());
        pool.reserve(width);
        for (int t = 0; t < width; ++t)
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= instances.size()) return;
                    work(i);
                }
            });
        for (std::thread& t : pool) t.join();
    }

    std::ostringstream csv;
    csv << csv_header();
    for (const auto& runs : results)
        for (const MethodRun& run : runs) csv << to_csv_row(run.record);

    if (a.output.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream out(a.output);
        if (!out) throw IoError("cannot open for writing: " + a.output);
        out << csv.str();
        if (!out) throw IoError("write failed: " + a.output);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// render

struct RenderArgs {
    std::string instance_path;
    std::string solution_path;
    std::string output;
};

int cmd_render(const RenderArgs& a) {
    const Instance inst = load_instance(a.instance_path);
    const Solution sol = load_solution(a.solution_path);
    render_svg_file(inst, sol, a.output);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Minimum-area disk covers with coverage multiplicities and center "
        "separation.\n"};
    app.require_subcommand(1);
    app.footer(kCsvColumnDoc);

    GenerateArgs gen;
    CLI::App* generate =
        app.add_subcommand("generate", "Write a random instance or a whole suite");
    generate->add_option("--n", gen.n, "Number of points")
        ->check(CLI::PositiveNumber);
    generate->add_option("--m", gen.m, "Disk budget")->check(CLI::PositiveNumber);
    generate->add_option("--seed", gen.seed, "Generator seed")
        ->capture_default_str();
    generate->add_option("--kappa", gen.kappa_choices,
                         "Coverage requirement choices, drawn uniformly")
        ->delimiter(',');
    generate->add_option("--ell", gen.ell, "Store a separation distance");
    CLI::Option* family =
        generate
            ->add_option("--family", gen.family,
                         "Suite family instead of a single instance")
            ->check(CLI::IsMember({"uni_sm", "uni_lg", "uni_fix_n"}));
    generate->add_option("--scale", gen.scale, "Suite sizes: full, or small (n capped at 60)")
        ->check(CLI::IsMember({"full", "small"}))
        ->capture_default_str();
    generate->add_option("-o,--output", gen.output,
                         "Instance file, or suite directory with --family")
        ->required();
    family->excludes("--n", "--m", "--kappa", "--ell");

    SolveArgs solve_args;
    CLI::App* solve = app.add_subcommand("solve", "Solve one instance file");
    solve->add_option("instance", solve_args.instance_path, "Instance JSON file")
        ->required();
    solve->add_option("--method", solve_args.method, "heuristic, gmc-ip or dgmc-ip")
        ->check(CLI::IsMember({"heuristic", "gmc-ip", "dgmc-ip"}))
        ->required();
    add_run_flags(solve, solve_args.settings);
    solve->add_option("-o,--output", solve_args.solution_out, "Solution JSON file");
    solve->add_option("--record", solve_args.record_out,
                      "Append the run's CSV row to this file");

    BenchmarkArgs bench;
    CLI::App* benchmark = app.add_subcommand(
        "benchmark", "Run methods over a generated suite and emit one CSV");
    benchmark->add_option("--suite", bench.suite_dir, "Suite directory with manifest.json")
        ->required();
    benchmark->add_option("--methods", bench.methods, "Comma-separated method list")
        ->capture_default_str();
    benchmark->add_option("--jobs", bench.jobs, "Parallel instance workers")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_run_flags(benchmark, bench.settings);
    benchmark->add_option("-o,--output", bench.output, "CSV file (default: stdout)");
    benchmark->footer(kCsvColumnDoc);

    RenderArgs render;
    CLI::App* render_cmd =
        app.add_subcommand("render", "Draw an instance and its solution as SVG");
    render_cmd->add_option("--instance", render.instance_path, "Instance JSON file")
        ->required();
    render_cmd->add_option("--solution", render.solution_path, "Solution JSON file")
        ->required();
    render_cmd->add_option("-o,--output", render.output, "SVG file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(generate)) return cmd_generate(gen, *generate);
        if (app.got_subcommand(solve)) return cmd_solve(solve_args);
        if (app.got_subcommand(benchmark)) return cmd_benchmark(bench);
        if (app.got_subcommand(render_cmd)) return cmd_render(render);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
