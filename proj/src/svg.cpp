#include "outdeg1/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <unordered_set>

namespace outdeg1::svg {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

// Parameter at which a ray leaves the window (the germ sits inside).
double ray_exit(const Window& w, const Point2& o, const Point2& d) {
    double t = kInf;
    if (d.x > 0) t = std::min(t, (w.hi.x - o.x) / d.x);
    if (d.x < 0) t = std::min(t, (w.lo.x - o.x) / d.x);
    if (d.y > 0) t = std::min(t, (w.hi.y - o.y) / d.y);
    if (d.y < 0) t = std::min(t, (w.lo.y - o.y) / d.y);
    return std::isfinite(t) ? std::max(t, 0.0) : 0.0;
}

}  // namespace

std::string render(const Configuration& config, const SegmentSolution* segment,
                   const NavigationSolution* navigation) {
    const Window& w = config.window;
    const double span = std::max(w.width(), w.height());
    const double scale = 760.0 / span;
    const double pad = 20.0;
    const double cw = pad * 2 + w.width() * scale;
    const double ch = pad * 2 + w.height() * scale;

    auto X = [&](double x) { return pad + (x - w.lo.x) * scale; };
    auto Y = [&](double y) { return pad + (w.hi.y - y) * scale; };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(cw) +
           "\" height=\"" + num(ch) + "\">\n";
    out +=
        "<style>\n"
        ".frame { fill: none; stroke: #444; stroke-width: 1; }\n"
        ".germ { fill: #1f3552; }\n"
        ".seg { stroke: #2b6cb0; stroke-width: 1.4; }\n"
        ".loop { stroke: #c53030; stroke-width: 2.2; }\n"
        ".ray { stroke: #a0aec0; stroke-width: 1; stroke-dasharray: 5 4; }\n"
        "</style>\n";
    out += "<rect class=\"frame\" x=\"" + num(X(w.lo.x)) + "\" y=\"" + num(Y(w.hi.y)) +
           "\" width=\"" + num(w.width() * scale) + "\" height=\"" + num(w.height() * scale) +
           "\"/>\n";

    // Loop membership for stroke classes.
    std::unordered_set<int> in_loop;
    OutdegreeGraph g;
    if (segment) g = OutdegreeGraph::from_segment(config, *segment);
    if (navigation) g = OutdegreeGraph::from_navigation(config, *navigation);
    if (segment || navigation) {
        for (const auto& comp : clusters(g).components) {
            for (int v : comp.loop) in_loop.insert(v);
        }
    }

    auto line = [&](const Point2& a, const Point2& b, const char* cls) {
        out += "<line class=\"" + std::string(cls) + "\" x1=\"" + num(X(a.x)) + "\" y1=\"" +
               num(Y(a.y)) + "\" x2=\"" + num(X(b.x)) + "\" y2=\"" + num(Y(b.y)) + "\"/>\n";
    };

    for (const auto& p : config.points) {
        const char* cls = in_loop.count(p.id) ? "loop" : "seg";
        if (segment && p.id < static_cast<int>(segment->size())) {
            const auto& e = segment->entries[p.id];
            if (e.target) {
                line(p.germ, e.impact, cls);
            } else {
                const Point2 d = p.dir().vec();
                line(p.germ, p.germ + d * ray_exit(w, p.germ, d), "ray");
            }
        } else if (navigation && p.id < static_cast<int>(navigation->size())) {
            const auto& e = navigation->entries[p.id];
            if (e.target) {
                line(p.germ, config.points[*e.target].germ, cls);
            } else {
                const Point2 d = p.dir().vec();
                line(p.germ, p.germ + d * ray_exit(w, p.germ, d), "ray");
            }
        }
    }
    for (const auto& p : config.points) {
        out += "<circle class=\"germ\" cx=\"" + num(X(p.germ.x)) + "\" cy=\"" +
               num(Y(p.germ.y)) + "\" r=\"2.5\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace outdeg1::svg
