#include "outdeg1/process.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace outdeg1 {

namespace {
struct PointHash {
    size_t operator()(const Point2& p) const {
        auto h = std::hash<double>();
        return h(p.x) * 0x9e3779b97f4a7c15ULL ^ h(p.y);
    }
};
}  // namespace

void Configuration::check() const {
    if (!window.valid()) throw std::invalid_argument("invalid window");
    std::unordered_set<Point2, PointHash> seen;
    for (size_t i = 0; i < points.size(); ++i) {
        const auto& p = points[i];
        if (p.id != static_cast<int>(i)) throw std::invalid_argument("ids must be 0..n-1");
        if (!(p.mark >= 0.0 && p.mark < 1.0)) throw std::invalid_argument("mark outside [0,1)");
        if (!window.contains(p.germ)) throw std::invalid_argument("germ outside window");
        if (!seen.insert(p.germ).second) throw std::invalid_argument("coincident germs");
    }
}

Configuration sample_ppp(const Window& window, double intensity, const RngSpec& rng) {
    if (!window.valid()) throw std::invalid_argument("sample_ppp: invalid window");
    if (!(intensity > 0.0) || !std::isfinite(intensity)) {
        throw std::invalid_argument("sample_ppp: intensity must be positive and finite");
    }
    CounterRng gen(rng);
    const uint64_t n = gen.poisson(intensity * window.area());

    Configuration config;
    config.window = window;
    config.points.reserve(n);
    for (uint64_t i = 0; i < n; ++i) {
        MarkedPoint p;
        p.id = static_cast<int>(i);
        p.germ.x = gen.uniform(window.lo.x, window.hi.x);
        p.germ.y = gen.uniform(window.lo.y, window.hi.y);
        p.mark = gen.uniform01();
        config.points.push_back(p);
    }
    return config;
}

std::pair<Configuration, MarkedPoint> add_typical(const Configuration& config,
                                                  const Point2& at, const RngSpec& rng) {
    if (!config.window.strictly_contains(at)) {
        throw std::invalid_argument("add_typical: location not strictly inside window");
    }
    for (const auto& p : config.points) {
        if (p.germ == at) throw std::invalid_argument("add_typical: coincident germ");
    }
    CounterRng gen(rng);
    MarkedPoint fresh;
    fresh.id = static_cast<int>(config.points.size());
    fresh.germ = at;
    fresh.mark = gen.uniform01();

    Configuration out = config;
    out.points.push_back(fresh);
    return {std::move(out), fresh};
}

Configuration translate(const Configuration& config, const Point2& v) {
    Configuration out = config;
    out.window = config.window.translated(v);
    for (auto& p : out.points) p.germ = p.germ + v;
    return out;
}

}  // namespace outdeg1
