#ifndef DCOVER_SVG_HPP
#define DCOVER_SVG_HPP

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "errors.hpp"
#include "instance.hpp"
#include "solution.hpp"

namespace dcover {

namespace detail {

inline std::string fmt6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

} // namespace detail

// Hand-emitted SVG picture of an instance and a solution drawn over it:
// filled circles for disks (dots for the radius-0 ones), black point markers
// with their coverage requirement, and dashed near-pair segments annotated
// with the center distance when a separation requirement is in play.
inline std::string render_svg(const Instance& inst, const Solution& sol) {
    inst.validate();
    if (!sol.instance_name.empty() && !inst.name.empty() &&
        sol.instance_name != inst.name)
        throw ValidationError("solution belongs to instance '" + sol.instance_name +
                              "', not '" + inst.name + "'");

    double xmin = inst.points[0].x, xmax = xmin;
    double ymin = inst.points[0].y, ymax = ymin;
    for (const Point& p : inst.points) {
        xmin = std::min(xmin, p.x); xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y); ymax = std::max(ymax, p.y);
    }
    for (const Disk& d : sol.disks) {
        xmin = std::min(xmin, d.center.x - d.radius);
        xmax = std::max(xmax, d.center.x + d.radius);
        ymin = std::min(ymin, d.center.y - d.radius);
        ymax = std::max(ymax, d.center.y + d.radius);
    }
    const double span = std::max({xmax - xmin, ymax - ymin, 1e-9});
    const double pad = 0.05 * span;
    xmin -= pad; xmax += pad; ymin -= pad; ymax += pad;

    const double width = 840.0;
    const double k = width / (xmax - xmin);
    const double height = (ymax - ymin) * k;
    auto X = [&](double x) { return (x - xmin) * k; };
    auto Y = [&](double y) { return height - (y - ymin) * k; };

    std::ostringstream out;
    using detail::fmt6;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << fmt6(width)
        << " " << fmt6(height + 28) << "\" font-family=\"sans-serif\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << fmt6(width) << "\" height=\""
        << fmt6(height + 28) << "\" fill=\"#ffffff\"/>\n";
    out << "<text x=\"8\" y=\"" << fmt6(height + 19)
        << "\" font-size=\"13\" fill=\"#333\">" << inst.name
        << (inst.name.empty() ? "" : " \xc2\xb7 ") << sol.method << " \xc2\xb7 objective "
        << fmt6(sol.objective);
    if (inst.ell) out << " \xc2\xb7 min separation " << fmt6(*inst.ell);
    out << "</text>\n";

    for (const Disk& d : sol.disks) {
        if (d.radius > 1e-9) {
            out << "<circle class=\"disk\" cx=\"" << fmt6(X(d.center.x)) << "\" cy=\""
                << fmt6(Y(d.center.y)) << "\" r=\"" << fmt6(d.radius * k)
                << "\" fill=\"#4a90d9\" fill-opacity=\"0.14\" stroke=\"#2a6db5\" "
                   "stroke-width=\"1.4\"/>\n";
        } else {
            // radius-0 disk: a small fixed-size dot marker
            out << "<circle class=\"disk zero\" cx=\"" << fmt6(X(d.center.x))
                << "\" cy=\"" << fmt6(Y(d.center.y))
                << "\" r=\"3.2\" fill=\"#2a6db5\" stroke=\"none\"/>\n";
        }
    }

    if (inst.ell) {
        const double ell = *inst.ell;
        for (std::size_t i = 0; i < sol.disks.size(); ++i)
            for (std::size_t j = i + 1; j < sol.disks.size(); ++j) {
                const Point a = sol.disks[i].center, b = sol.disks[j].center;
                const double d = dist(a, b);
                if (d >= 1.5 * ell) continue;
                out << "<line x1=\"" << fmt6(X(a.x)) << "\" y1=\"" << fmt6(Y(a.y))
                    << "\" x2=\"" << fmt6(X(b.x)) << "\" y2=\"" << fmt6(Y(b.y))
                    << "\" stroke=\"#999\" stroke-width=\"0.8\" "
                       "stroke-dasharray=\"4 3\"/>\n";
                char label[32];
                std::snprintf(label, sizeof label, "%.2f", d);
                out << "<text x=\"" << fmt6((X(a.x) + X(b.x)) / 2.0 + 3) << "\" y=\""
                    << fmt6((Y(a.y) + Y(b.y)) / 2.0 - 3)
                    << "\" font-size=\"10\" fill=\"#777\">" << label << "</text>\n";
            }
    }

    for (int j = 0; j < inst.n(); ++j) {
        const Point& p = inst.points[j];
        out << "<circle class=\"pt\" cx=\"" << fmt6(X(p.x)) << "\" cy=\""
            << fmt6(Y(p.y)) << "\" r=\"2.4\" fill=\"#1a1a1a\"/>\n";
        out << "<text x=\"" << fmt6(X(p.x) + 4) << "\" y=\"" << fmt6(Y(p.y) - 4)
            << "\" font-size=\"10\" fill=\"#b03a2e\">" << inst.kappa[j]
            << "</text>\n";
    }

    out << "</svg>\n";
    return out.str();
}

inline void render_svg_file(const Instance& inst, const Solution& sol,
                            const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << render_svg(inst, sol);
    if (!out) throw IoError("write failed: " + path);
}

} // namespace dcover

#endif
