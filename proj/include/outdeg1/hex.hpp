#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "outdeg1/geometry.hpp"

namespace outdeg1 {

/// Cell of the hexagonal tessellation induced by the triangular lattice
///   Pi = { a*i + b*j },  i = (sqrt3*cos(pi/6), sqrt3*sin(pi/6)) = (3/2, sqrt3/2),
///                        j = (0, sqrt3).
/// Each cell is the Voronoi cell of its lattice center: a regular hexagon of
/// circumradius 1 (lattice spacing sqrt3). Callers rescale configurations
/// rather than the lattice.
struct HexCell {
    int a{0};
    int b{0};

    constexpr bool operator==(const HexCell&) const = default;
    constexpr bool operator<(const HexCell& r) const {
        return a != r.a ? a < r.a : b < r.b;
    }

    Point2 center() const;

    /// Triangular-lattice graph distance to another cell.
    int lattice_dist(const HexCell& r) const;
};

struct HexCellHash {
    size_t operator()(const HexCell& c) const {
        return std::hash<int64_t>()((int64_t(c.a) << 32) ^ uint32_t(c.b));
    }
};

/// The 6 lattice neighbors of a cell, in axial order.
extern const std::array<HexCell, 6> kHexNeighbors;

/// Cell whose center is nearest to p; ties broken toward the
/// lexicographically smallest (a, b).
HexCell hex_locate(const Point2& p);

/// All cells at lattice graph distance <= n from z (the hexagonal complex
/// H^n(z)); |H^n| = 1 + 3n(n+1). Cells come out sorted by (a, b).
std::vector<HexCell> hex_complex(const HexCell& z, int n);

/// The ring C_n(z) = H^n \ H^{n-1}; 6n cells, sorted by (a, b).
std::vector<HexCell> hex_ring(const HexCell& z, int n);

/// Closed regular hexagon: `scale * H(0) + center` where H(0) has
/// circumradius 1 and vertices at angles k*60 degrees.
struct Hexagon {
    Point2 center;
    double scale{1.0};

    static Hexagon cell(const HexCell& c) { return {c.center(), 1.0}; }

    double circumradius() const { return scale; }
    double inradius() const;
    std::array<Point2, 6> vertices() const;

    bool contains(const Point2& p, double tol = 0.0) const;
    /// Signed boundary clearance: positive inside, negative outside (for
    /// outside points this is the half-plane deficit, a lower bound on the
    /// true distance; exact for inside points).
    double boundary_clearance(const Point2& p) const;
    /// Euclidean distance from p to the closed hexagon (0 if inside).
    double distance(const Point2& p) const;
    bool intersects_segment(const Point2& a, const Point2& b, double tol = 0.0) const;
};

/// Translated hexagonal complex H^n(0) + offset, kept as its cell set.
struct HexComplexRegion {
    std::vector<HexCell> cells;  // sorted
    Point2 offset;

    static HexComplexRegion around(const Point2& eta, int n) {
        return {hex_complex(HexCell{0, 0}, n), eta};
    }

    bool member(const HexCell& c) const;
    bool contains(const Point2& p, double tol = 0.0) const;
    /// Distance from p to the closed complement (union of non-member cells).
    /// Scans lattice cells within `reach` of p; returns reach when no
    /// non-member hexagon comes closer.
    double complement_distance(const Point2& p, double reach) const;
    bool intersects_segment(const Point2& a, const Point2& b, double tol = 0.0) const;
};

}  // namespace outdeg1
