#ifndef DCOVER_BENCH_HPP
#define DCOVER_BENCH_HPP

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace dcover {

inline constexpr const char* kBenchCsvVersion = "disk-cover-bench v1";

// One benchmark run, one CSV row.
struct RunRecord {
    std::string instance;
    int n = 0;
    int m = 0;
    std::optional<double> ell;
    std::string method;
    std::optional<double> objective;    // absent: no cover produced
    std::optional<double> lower_bound;  // absent for heuristic rows
    std::optional<double> gap;
    double wall_ms = 0.0;
    std::string status;                 // optimal / feasible / infeasible / error
    std::optional<std::int64_t> seed;
};

// Relative optimality gap (alg - ref) / alg, with the 0/0 cover reading 0
// (both methods found a free cover; there is nothing between them). The
// reference must be a valid lower bound on the algorithm's objective; a
// sub-tolerance shortfall is rounded up to a gap of 0, a larger one rejected.
inline double compute_gap(double alg, double ref) {
    if (alg < ref - 1e-6) {
        std::ostringstream os;
        os << "gap: objective " << alg << " is below the reference bound " << ref;
        throw ValidationError(os.str());
    }
    if (alg <= 0.0) return 0.0;
    const double g = (alg - ref) / alg;
    return g < 0.0 ? 0.0 : g;
}

namespace detail {

inline std::string csv_num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline void csv_guard(const std::string& field) {
    if (field.find_first_of(",\"\n\r") != std::string::npos)
        throw ValidationError("csv field may not contain commas, quotes or newlines: " +
                              field);
}

} // namespace detail

inline std::string csv_header() {
    std::string s = "# ";
    s += kBenchCsvVersion;
    s += "\ninstance,n,m,ell,method,objective,lower_bound,gap,wall_ms,status,seed\n";
    return s;
}

inline std::string to_csv_row(const RunRecord& r) {
    detail::csv_guard(r.instance);
    detail::csv_guard(r.method);
    detail::csv_guard(r.status);
    std::ostringstream out;
    out << r.instance << ',' << r.n << ',' << r.m << ',';
    if (r.ell) out << detail::csv_num(*r.ell);
    out << ',' << r.method << ',';
    if (r.objective) out << detail::csv_num(*r.objective);
    out << ',';
    if (r.lower_bound) out << detail::csv_num(*r.lower_bound);
    out << ',';
    if (r.gap) out << detail::csv_num(*r.gap);
    out << ',' << detail::csv_num(r.wall_ms) << ',' << r.status << ',';
    if (r.seed) out << *r.seed;
    out << '\n';
    return out.str();
}

inline std::vector<RunRecord> parse_csv(const std::string& text) {
    std::vector<RunRecord> rows;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool saw_columns = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields;
        std::string cur;
        for (char c : line) {
            if (c == ',') { fields.push_back(cur); cur.clear(); }
            else cur.push_back(c);
        }
        fields.push_back(cur);
        if (!saw_columns) {
            if (fields.size() != 11 || fields[0] != "instance") {
                std::ostringstream os;
                os << "line " << lineno << ": expected column header";
                throw ParseError(os.str());
            }
            saw_columns = true;
            continue;
        }
        if (fields.size() != 11) {
            std::ostringstream os;
            os << "line " << lineno << ": expected 11 fields, got " << fields.size();
            throw ParseError(os.str());
        }
        auto num = [&](const std::string& s, const char* what) {
            try {
                std::size_t used = 0;
                const double v = std::stod(s, &used);
                if (used != s.size()) throw std::invalid_argument(s);
                return v;
            } catch (const std::exception&) {
                std::ostringstream os;
                os << "line " << lineno << ": bad " << what << " '" << s << "'";
                throw ParseError(os.str());
            }
        };
        RunRecord r;
        r.instance = fields[0];
        r.n = static_cast<int>(num(fields[1], "n"));
        r.m = static_cast<int>(num(fields[2], "m"));
        if (!fields[3].empty()) r.ell = num(fields[3], "ell");
        r.method = fields[4];
        if (!fields[5].empty()) r.objective = num(fields[5], "objective");
        if (!fields[6].empty()) r.lower_bound = num(fields[6], "lower_bound");
        if (!fields[7].empty()) r.gap = num(fields[7], "gap");
        r.wall_ms = num(fields[8], "wall_ms");
        r.status = fields[9];
        if (!fields[10].empty())
            r.seed = static_cast<std::int64_t>(num(fields[10], "seed"));
        rows.push_back(std::move(r));
    }
    if (!saw_columns) throw ParseError("line 1: missing column header");
    return rows;
}

} // namespace dcover

#endif
