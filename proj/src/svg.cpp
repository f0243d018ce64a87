#include "lifeline/svg.hpp"

#include <algorithm>
#include <ostream>

#include "lifeline/verify.hpp"

namespace lifeline {

void write_svg(std::ostream& out, const Params& p, const Configuration& cf, std::size_t round) {
    double minx = p.base.x, maxx = p.base.x, miny = p.base.y, maxy = p.base.y;
    for (const RobotState& s : cf.robots) {
        if (!s.info.alive || !s.info.launched) {
            continue;
        }
        minx = std::min(minx, s.loc.x);
        maxx = std::max(maxx, s.loc.x);
        miny = std::min(miny, s.loc.y);
        maxy = std::max(maxy, s.loc.y);
    }
    const double margin = p.Dmax + p.D;
    minx -= margin;
    miny -= margin;
    const double w = maxx - minx + margin;
    const double h = maxy - miny + margin;
    const double dot = p.D * 0.25;

    // SVG y grows downwards; flip so that the picture matches the plane.
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << minx << ' ' << -(miny + h) << ' ' << w
        << ' ' << h << "\" width=\"800\" height=\"" << std::max(100.0, 800.0 * h / w) << "\">\n";
    out << "<title>round " << round << "</title>\n";
    out << "<g transform=\"scale(1,-1)\">\n";

    for (const RobotState& s : cf.robots) {
        if (s.info.alive && s.info.launched) {
            out << "<circle cx=\"" << s.loc.x << "\" cy=\"" << s.loc.y << "\" r=\"" << p.Dmax
                << "\" fill=\"none\" stroke=\"#bbb\" stroke-width=\"" << dot * 0.2
                << "\" stroke-dasharray=\"" << dot << "\"/>\n";
        }
    }

    if (auto path = visibility_path(p, cf)) {
        out << "<polyline fill=\"none\" stroke=\"#1f5fd6\" stroke-width=\"" << dot * 0.6 << "\" points=\""
            << p.base.x << ',' << p.base.y;
        for (Ident id : *path) {
            out << ' ' << cf[id].loc.x << ',' << cf[id].loc.y;
        }
        out << "\"/>\n";
    }

    out << "<rect x=\"" << p.base.x - 2 * dot << "\" y=\"" << p.base.y - 2 * dot << "\" width=\"" << 4 * dot
        << "\" height=\"" << 4 * dot << "\" fill=\"black\"/>\n";

    for (const RobotState& s : cf.robots) {
        if (!s.info.launched) {
            continue;
        }
        const char* colour = s.info.ident == kCompanion ? "#1f5fd6"
                           : !s.info.alive            ? "#ccc"
                           : s.info.light             ? "#d62728"
                                                      : "black";
        out << "<circle cx=\"" << s.loc.x << "\" cy=\"" << s.loc.y << "\" r=\"" << dot << "\" fill=\"" << colour
            << "\"><title>" << s.info.ident << "</title></circle>\n";
    }
    out << "</g>\n</svg>\n";
}

}  // namespace lifeline
