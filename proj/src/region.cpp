#include "outdeg1/region.hpp"

#include <algorithm>
#include <cmath>

namespace outdeg1 {

bool Region::contains(const Point2& p, double tol) const {
    return std::visit(
        [&](const auto& s) -> bool {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Window>) {
                return p.x >= s.lo.x - tol && p.x <= s.hi.x + tol &&
                       p.y >= s.lo.y - tol && p.y <= s.hi.y + tol;
            } else if constexpr (std::is_same_v<T, Disk>) {
                return dist(p, s.center) <= s.radius + tol;
            } else if constexpr (std::is_same_v<T, Hexagon>) {
                return s.contains(p, tol);
            } else {
                return s.contains(p, tol);
            }
        },
        shape_);
}

bool Region::ball_inside(const Point2& c, double r) const {
    return std::visit(
        [&](const auto& s) -> bool {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Window>) {
                return c.x - r >= s.lo.x && c.x + r <= s.hi.x &&
                       c.y - r >= s.lo.y && c.y + r <= s.hi.y;
            } else if constexpr (std::is_same_v<T, Disk>) {
                return dist(c, s.center) + r <= s.radius;
            } else if constexpr (std::is_same_v<T, Hexagon>) {
                return s.boundary_clearance(c) >= r;
            } else {
                // Inside iff nothing of the complement comes within r.
                if (!s.contains(c)) return false;
                return s.complement_distance(c, r + 1.0) >= r;
            }
        },
        shape_);
}

double Region::diameter_bound() const {
    return std::visit(
        [](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Window>) {
                return s.diameter();
            } else if constexpr (std::is_same_v<T, Disk>) {
                return 2.0 * s.radius;
            } else if constexpr (std::is_same_v<T, Hexagon>) {
                return 2.0 * s.circumradius();
            } else {
                double best = 0.0;
                for (const auto& c : s.cells) {
                    best = std::max(best, c.center().norm() + 1.0);
                }
                return 2.0 * best;
            }
        },
        shape_);
}

}  // namespace outdeg1
