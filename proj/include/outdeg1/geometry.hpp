#pragma once

#include <cmath>
#include <limits>
#include <optional>

namespace outdeg1 {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Planar point / vector with double components.
struct Point2 {
    double x{0.0};
    double y{0.0};

    constexpr Point2() = default;
    constexpr Point2(double px, double py) : x(px), y(py) {}

    constexpr Point2 operator+(const Point2& r) const { return {x + r.x, y + r.y}; }
    constexpr Point2 operator-(const Point2& r) const { return {x - r.x, y - r.y}; }
    constexpr Point2 operator*(double s) const { return {x * s, y * s}; }
    friend constexpr Point2 operator*(double s, const Point2& v) { return {v.x * s, v.y * s}; }

    constexpr double dot(const Point2& r) const { return x * r.x + y * r.y; }
    /// z-component of the 3D cross product; sign gives orientation.
    constexpr double cross(const Point2& r) const { return x * r.y - y * r.x; }
    double norm() const { return std::sqrt(x * x + y * y); }
    constexpr double norm2() const { return x * x + y * y; }

    constexpr bool operator==(const Point2& r) const = default;
};

inline double dist(const Point2& a, const Point2& b) { return (a - b).norm(); }
inline constexpr double dist2(const Point2& a, const Point2& b) { return (a - b).norm2(); }

/// A direction stored as a fraction of a full turn, u in [0,1).
/// The unit vector is (cos 2*pi*u, sin 2*pi*u).
struct Direction {
    double u{0.0};

    constexpr Direction() = default;
    explicit constexpr Direction(double turns) : u(turns) {}

    /// Wraps an arbitrary turn count into [0,1).
    static Direction wrapped(double turns) {
        double f = turns - std::floor(turns);
        if (f >= 1.0) f = 0.0;  // guard against floor rounding at the seam
        return Direction(f);
    }
    static Direction from_radians(double ang) { return wrapped(ang / kTwoPi); }

    double radians() const { return kTwoPi * u; }
    Point2 vec() const { return {std::cos(kTwoPi * u), std::sin(kTwoPi * u)}; }
};

/// Semi-infinite ray: origin + t * dir.vec(), t >= 0.
struct Ray {
    Point2 origin;
    Direction dir;

    Point2 at(double t) const { return origin + dir.vec() * t; }
};

/// Axis-aligned rectangle, lo strictly below hi in both coordinates.
struct Window {
    Point2 lo;
    Point2 hi;

    bool valid() const {
        return std::isfinite(lo.x) && std::isfinite(lo.y) && std::isfinite(hi.x) &&
               std::isfinite(hi.y) && lo.x < hi.x && lo.y < hi.y;
    }
    double width() const { return hi.x - lo.x; }
    double height() const { return hi.y - lo.y; }
    double area() const { return width() * height(); }
    double diameter() const { return std::hypot(width(), height()); }
    Point2 center() const { return {(lo.x + hi.x) / 2, (lo.y + hi.y) / 2}; }
    bool contains(const Point2& p) const {
        return p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y;
    }
    bool strictly_contains(const Point2& p) const {
        return p.x > lo.x && p.x < hi.x && p.y > lo.y && p.y < hi.y;
    }
    Window translated(const Point2& v) const { return {lo + v, hi + v}; }
};

/// Result of intersecting two rays.
///
/// kHit: unique point p = r1(a) = r2(b) with a,b >= 0.
/// kNone: parallel, anti-parallel disjoint, or lines crossing at a negative
///        parameter on either ray.
/// kCollinear: rays share a line and overlap on more than a point; reported
///        as its own outcome so callers can flag the degeneracy.
struct RayIntersection {
    enum class Kind { kNone, kHit, kCollinear };
    Kind kind{Kind::kNone};
    Point2 point;
    double a{0.0};
    double b{0.0};

    explicit operator bool() const { return kind == Kind::kHit; }
};

/// Intersects two rays with distinct origins. Parallel/collinear detection
/// uses a cross-product threshold of 1e-12 relative to the operand norms;
/// exact degeneracy has measure zero under a PPP, the threshold only guards
/// float noise.
RayIntersection ray_intersection(const Ray& r1, const Ray& r2);

/// Strict cone membership: true iff the angle between (q - apex) and the
/// direction vector is strictly less than half_angle. The cone is open and
/// punctured, so the apex itself is never a member.
bool point_in_cone(const Point2& apex, Direction dir, double half_angle, const Point2& q);

/// Distance from p to the closed segment [a, b].
double point_segment_dist(const Point2& p, const Point2& a, const Point2& b);

/// Distance from p to the ray origin + t*dir, t >= 0.
double point_ray_dist(const Point2& p, const Ray& r);

/// Intersection point of two closed segments, if any. Collinear overlaps
/// return the midpoint of the shared part. `tol` fattens the segments by a
/// hair so touching within tol counts as a hit.
std::optional<Point2> segment_intersection(const Point2& p1, const Point2& q1,
                                           const Point2& p2, const Point2& q2,
                                           double tol = 1e-12);

}  // namespace outdeg1
