#include "outdeg1/navigation_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace outdeg1 {

namespace {

void check_epsilon(double epsilon) {
    if (!(epsilon > 0.0 && epsilon <= kPi)) {
        throw std::invalid_argument("navigation: epsilon must be in (0, pi]");
    }
}

struct Best {
    double d{kInf};
    int id{-1};
    bool tie{false};

    void offer(double d_cand, int id_cand) {
        if (d_cand < d) {
            d = d_cand;
            id = id_cand;
            tie = false;
        } else if (d_cand == d && id >= 0) {
            tie = true;
            id = std::min(id, id_cand);
        }
    }
};

double germ_dist(const Point2& a, const Point2& b) {
    const double dx = b.x - a.x, dy = b.y - a.y;
    return std::sqrt(dx * dx + dy * dy);
}

}  // namespace

NavigationSolution solve_navigation_reference(const Configuration& config, double epsilon) {
    check_epsilon(epsilon);
    const int n = static_cast<int>(config.size());
    NavigationSolution sol;
    sol.entries.resize(n);

    for (int i = 0; i < n; ++i) {
        const auto& src = config.points[i];
        Best best;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            const auto& cand = config.points[j];
            if (!point_in_cone(src.germ, src.dir(), epsilon, cand.germ)) continue;
            best.offer(germ_dist(src.germ, cand.germ), j);
        }
        auto& e = sol.entries[i];
        if (best.id >= 0) {
            e.target = best.id;
            e.dist = best.d;
            e.degenerate = best.tie;
        }
    }
    return sol;
}

NavigationSolution solve_navigation(const Configuration& config, double epsilon) {
    check_epsilon(epsilon);
    const int n = static_cast<int>(config.size());
    NavigationSolution sol;
    sol.entries.resize(n);
    if (n < 2) return sol;

    // Cell side ~ intensity^{-1/2} for O(1) expected occupancy.
    const double w = config.window.width(), h = config.window.height();
    const double lambda = n / config.window.area();
    const double cell = std::clamp(1.0 / std::sqrt(lambda), std::max(w, h) / 2048.0,
                                   std::max(w, h));
    const int nx = std::max(1, static_cast<int>(std::ceil(w / cell)));
    const int ny = std::max(1, static_cast<int>(std::ceil(h / cell)));
    const int max_ring = std::max(nx, ny);

    std::vector<std::vector<int>> buckets(static_cast<size_t>(nx) * ny);
    auto cell_of = [&](const Point2& p) {
        const int gx = std::clamp(static_cast<int>(std::floor((p.x - config.window.lo.x) / cell)), 0, nx - 1);
        const int gy = std::clamp(static_cast<int>(std::floor((p.y - config.window.lo.y) / cell)), 0, ny - 1);
        return std::pair(gx, gy);
    };
    for (const auto& p : config.points) {
        const auto [gx, gy] = cell_of(p.germ);
        buckets[static_cast<size_t>(gx) * ny + gy].push_back(p.id);
    }

    for (int i = 0; i < n; ++i) {
        const auto& src = config.points[i];
        const auto [cx, cy] = cell_of(src.germ);
        Best best;

        for (int ring = 0; ring <= max_ring; ++ring) {
            // A germ in a ring-k cell is at least (k-1)*cell away; once that
            // exceeds the best distance no farther ring can matter (ties at
            // exactly best included, hence the non-strict bound).
            if (best.id >= 0 && (ring - 1) * cell > best.d) break;
            for (int gx = cx - ring; gx <= cx + ring; ++gx) {
                for (int gy = cy - ring; gy <= cy + ring; ++gy) {
                    if (std::max(std::abs(gx - cx), std::abs(gy - cy)) != ring) continue;
                    if (gx < 0 || gx >= nx || gy < 0 || gy >= ny) continue;
                    for (int j : buckets[static_cast<size_t>(gx) * ny + gy]) {
                        if (j == i) continue;
                        const auto& cand = config.points[j];
                        if (!point_in_cone(src.germ, src.dir(), epsilon, cand.germ)) continue;
                        best.offer(germ_dist(src.germ, cand.germ), j);
                    }
                }
            }
        }

        auto& e = sol.entries[i];
        if (best.id >= 0) {
            e.target = best.id;
            e.dist = best.d;
            e.degenerate = best.tie;
        }
    }
    return sol;
}

}  // namespace outdeg1
