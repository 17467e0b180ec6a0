#ifndef DCOVER_LP_IO_HPP
#define DCOVER_LP_IO_HPP

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cover_model.hpp"
#include "errors.hpp"

namespace dcover {

namespace detail {

inline std::string fmt17(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace detail

// Serialize the model in LP text format (CPLEX dialect): objective, coverage
// rows, the cardinality row, pack rows, integer bounds. A warm-start
// selection, when given, rides along as a comment block — it is advisory
// input for whoever consumes the file, not part of the model.
inline std::string export_lp(const CoverModel& model,
                             const std::vector<std::pair<int, int>>* warm = nullptr) {
    const int nc = model.n_vars();
    std::ostringstream out;
    out << "\\ disk cover model: " << model.n_points() << " points, " << nc
        << " candidates, budget " << model.budget << "\n";
    out << "\\ rows: " << model.n_points() << " cover, 1 cardinality, "
        << model.packs.size() << " pack\n";
    if (warm && !warm->empty()) {
        out << "\\ warm start (advisory, not part of the model):\n\\  ";
        for (const auto& [i, cnt] : *warm) out << " x" << i << "=" << cnt;
        out << "\n";
    }
    out << "Minimize\n obj:";
    for (int i = 0; i < nc; ++i) {
        out << (i == 0 ? " " : " + ") << detail::fmt17(model.cost[i]) << " x" << i;
        if (i % 6 == 5 && i + 1 < nc) out << "\n     ";
    }
    out << "\nSubject To\n";
    for (int j = 0; j < model.n_points(); ++j) {
        out << " cover" << j << ":";
        const auto& adj = model.point_adj[j];
        for (std::size_t t = 0; t < adj.size(); ++t) {
            out << (t == 0 ? " " : " + ") << "x" << adj[t];
            if (t % 12 == 11 && t + 1 < adj.size()) out << "\n     ";
        }
        out << " >= " << model.kappa[j] << "\n";
    }
    out << " card:";
    for (int i = 0; i < nc; ++i) {
        out << (i == 0 ? " " : " + ") << "x" << i;
        if (i % 12 == 11 && i + 1 < nc) out << "\n     ";
    }
    out << " <= " << model.budget << "\n";
    for (const PackRow& row : model.packs) {
        out << " " << row.name << ":";
        for (std::size_t t = 0; t < row.vars.size(); ++t) {
            out << (t == 0 ? " " : " + ") << "x" << row.vars[t];
            if (t % 12 == 11 && t + 1 < row.vars.size()) out << "\n     ";
        }
        out << " <= 1\n";
    }
    out << "Bounds\n";
    for (int i = 0; i < nc; ++i)
        out << " 0 <= x" << i << " <= " << model.ub[i] << "\n";
    out << "Generals\n";
    for (int i = 0; i < nc; ++i) {
        out << (i % 16 == 0 ? (i == 0 ? " " : "\n ") : " ") << "x" << i;
    }
    out << "\nEnd\n";
    return out.str();
}

inline void export_lp_file(const CoverModel& model, const std::string& path,
                           const std::vector<std::pair<int, int>>* warm = nullptr) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << export_lp(model, warm);
    if (!out) throw IoError("write failed: " + path);
}

// Parse a variable assignment listing ("x3=1 x17=2", flexible whitespace,
// one or many per line, comments starting with '\', '#' or '//') and check
// it against every model row. Returns per-candidate copy counts.
inline std::vector<int> import_solution_text(const CoverModel& model,
                                             const std::string& text) {
    std::vector<int> counts(model.n_vars(), 0);
    std::vector<char> seen(model.n_vars(), 0);
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string flat;
        for (char c : line) {
            if (c == '\\' || c == '#') break;  // rest of the line is comment
            if (flat.size() >= 1 && c == '/' && flat.back() == '/') {
                flat.pop_back();
                break;
            }
            if (!std::isspace(static_cast<unsigned char>(c))) flat.push_back(c);
        }
        std::size_t pos = 0;
        auto fail = [&](const std::string& why) {
            std::ostringstream os;
            os << "line " << lineno << ": " << why;
            throw ParseError(os.str());
        };
        while (pos < flat.size()) {
            if (flat[pos] != 'x') fail("expected variable name starting with 'x'");
            std::size_t q = pos + 1;
            while (q < flat.size() && std::isdigit(static_cast<unsigned char>(flat[q]))) ++q;
            if (q == pos + 1) fail("expected digits after 'x'");
            const int var = std::stoi(flat.substr(pos + 1, q - pos - 1));
            if (var < 0 || var >= model.n_vars()) {
                std::ostringstream os;
                os << "unknown variable x" << var;
                fail(os.str());
            }
            if (q >= flat.size() || flat[q] != '=') fail("expected '=' after variable name");
            ++q;
            std::size_t r = q;
            while (r < flat.size() && (std::isdigit(static_cast<unsigned char>(flat[r])) ||
                                       flat[r] == '.' || flat[r] == '-' || flat[r] == '+' ||
                                       flat[r] == 'e' || flat[r] == 'E'))
                ++r;
            if (r == q) fail("expected a value after '='");
            double value = 0.0;
            try {
                value = std::stod(flat.substr(q, r - q));
            } catch (const std::exception&) {
                fail("malformed value");
            }
            const double rounded = std::round(value);
            if (std::abs(value - rounded) > 1e-6 || rounded < 0) {
                std::ostringstream os;
                os << "x" << var << " must be a nonnegative integer, got "
                   << flat.substr(q, r - q);
                fail(os.str());
            }
            if (seen[var]) {
                std::ostringstream os;
                os << "duplicate assignment for x" << var;
                fail(os.str());
            }
            seen[var] = 1;
            counts[var] = static_cast<int>(rounded);
            pos = r;
        }
    }

    for (int i = 0; i < model.n_vars(); ++i)
        if (counts[i] > model.ub[i]) {
            std::ostringstream os;
            os << "bound violated: x" << i << " = " << counts[i] << " exceeds "
               << model.ub[i];
            throw ValidationError(os.str());
        }
    std::vector<long long> cov(model.n_points(), 0);
    long long units = 0;
    for (int i = 0; i < model.n_vars(); ++i) {
        units += counts[i];
        if (counts[i] > 0)
            for (int j : model.covers[i]) cov[j] += counts[i];
    }
    for (int j = 0; j < model.n_points(); ++j)
        if (cov[j] < model.kappa[j]) {
            std::ostringstream os;
            os << "row cover" << j << " violated: " << cov[j] << " < " << model.kappa[j];
            throw ValidationError(os.str());
        }
    if (units > model.budget) {
        std::ostringstream os;
        os << "row card violated: " << units << " > " << model.budget;
        throw ValidationError(os.str());
    }
    for (const PackRow& row : model.packs) {
        int used = 0;
        for (int v : row.vars) used += counts[v];
        if (used > 1) {
            std::ostringstream os;
            os << "row " << row.name << " violated: " << used << " > 1";
            throw ValidationError(os.str());
        }
    }
    return counts;
}

inline std::vector<int> import_solution_file(const CoverModel& model,
                                             const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return import_solution_text(model, buf.str());
}

} // namespace dcover

#endif
