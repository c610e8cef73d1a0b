#include "outdeg1/geometry.hpp"

#include <algorithm>

namespace outdeg1 {

RayIntersection ray_intersection(const Ray& r1, const Ray& r2) {
    const Point2 d1 = r1.dir.vec();
    const Point2 d2 = r2.dir.vec();
    const Point2 w = r2.origin - r1.origin;

    const double denom = d1.cross(d2);
    const double scale = 1.0 + w.norm();

    RayIntersection out;
    if (std::abs(denom) < 1e-12) {
        // Parallel or anti-parallel. Check for a shared line.
        if (std::abs(d1.cross(w)) < 1e-12 * scale) {
            // Same supporting line. Same heading always overlaps; opposite
            // headings overlap iff the origins face each other.
            const double head = d1.dot(d2);
            if (head > 0.0 || d1.dot(w) > 0.0) {
                out.kind = RayIntersection::Kind::kCollinear;
                return out;
            }
        }
        return out;  // kNone
    }

    const double a = w.cross(d2) / denom;
    const double b = w.cross(d1) / denom;
    if (a < 0.0 || b < 0.0) return out;

    out.kind = RayIntersection::Kind::kHit;
    out.a = a;
    out.b = b;
    out.point = r1.at(a);
    return out;
}

bool point_in_cone(const Point2& apex, Direction dir, double half_angle, const Point2& q) {
    const Point2 v = q - apex;
    if (v.x == 0.0 && v.y == 0.0) return false;
    double delta = std::atan2(v.y, v.x) - dir.radians();
    // Reduce to (-pi, pi].
    delta = std::remainder(delta, kTwoPi);
    return std::abs(delta) < half_angle;
}

double point_segment_dist(const Point2& p, const Point2& a, const Point2& b) {
    const Point2 ab = b - a;
    const double len2 = ab.norm2();
    if (len2 == 0.0) return dist(p, a);
    const double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
    return dist(p, a + ab * t);
}

double point_ray_dist(const Point2& p, const Ray& r) {
    const Point2 d = r.dir.vec();
    const double t = std::max(0.0, (p - r.origin).dot(d));
    return dist(p, r.origin + d * t);
}

std::optional<Point2> segment_intersection(const Point2& p1, const Point2& q1,
                                           const Point2& p2, const Point2& q2,
                                           double tol) {
    const Point2 d1 = q1 - p1;
    const Point2 d2 = q2 - p2;
    const double denom = d1.cross(d2);
    const double scale = std::max({1.0, d1.norm(), d2.norm()});

    if (std::abs(denom) > 1e-14 * scale * scale) {
        const Point2 w = p2 - p1;
        const double s = w.cross(d2) / denom;
        const double t = w.cross(d1) / denom;
        const double slack1 = tol / std::max(d1.norm(), 1e-300);
        const double slack2 = tol / std::max(d2.norm(), 1e-300);
        if (s >= -slack1 && s <= 1.0 + slack1 && t >= -slack2 && t <= 1.0 + slack2) {
            return p1 + d1 * std::clamp(s, 0.0, 1.0);
        }
        return std::nullopt;
    }

    // Near-parallel: fall back to endpoint-distance checks.
    if (point_segment_dist(p1, p2, q2) <= tol) return p1;
    if (point_segment_dist(q1, p2, q2) <= tol) return q1;
    if (point_segment_dist(p2, p1, q1) <= tol) return p2;
    if (point_segment_dist(q2, p1, q1) <= tol) return q2;
    return std::nullopt;
}

}  // namespace outdeg1
