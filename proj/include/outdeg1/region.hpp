#pragma once

#include <variant>

#include "outdeg1/hex.hpp"

namespace outdeg1 {

/// Circular disk region.
struct Disk {
    Point2 center;
    double radius{1.0};
};

/// Bounded region for local ("partial") solves: a rectangle, a disk, a
/// single hexagon, or a union of tessellation hexagons.
class Region {
  public:
    Region(Window w) : shape_(w) {}
    Region(Disk d) : shape_(d) {}
    Region(Hexagon h) : shape_(h) {}
    Region(HexComplexRegion h) : shape_(std::move(h)) {}

    bool contains(const Point2& p, double tol = 0.0) const;

    /// True iff the open ball B(c, r) is inside the region.
    bool ball_inside(const Point2& c, double r) const;

    /// Upper bound on the region's diameter (bisection bracket).
    double diameter_bound() const;

  private:
    std::variant<Window, Disk, Hexagon, HexComplexRegion> shape_;
};

}  // namespace outdeg1
