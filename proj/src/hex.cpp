#include "outdeg1/hex.hpp"

#include <algorithm>
#include <cmath>

namespace outdeg1 {

namespace {
constexpr double kSqrt3 = 1.7320508075688772;
// Basis: i = (3/2, sqrt3/2), j = (0, sqrt3).
constexpr double kIx = 1.5, kIy = kSqrt3 / 2.0;
constexpr double kJy = kSqrt3;
}  // namespace

const std::array<HexCell, 6> kHexNeighbors = {
    HexCell{1, 0}, HexCell{0, 1}, HexCell{-1, 1},
    HexCell{-1, 0}, HexCell{0, -1}, HexCell{1, -1}};

Point2 HexCell::center() const {
    return {kIx * a, kIy * a + kJy * b};
}

int HexCell::lattice_dist(const HexCell& r) const {
    const int da = r.a - a;
    const int db = r.b - b;
    return (std::abs(da) + std::abs(db) + std::abs(da + db)) / 2;
}

HexCell hex_locate(const Point2& p) {
    // Invert the basis, then scan a small candidate block. The nearest
    // center lies within circumradius 1, which bounds the index offsets.
    const double af = p.x / kIx;
    const double bf = (p.y - kIy * af) / kJy;
    const int a0 = static_cast<int>(std::floor(af));
    const int b0 = static_cast<int>(std::floor(bf));

    HexCell best{a0, b0};
    double best_d2 = dist2(p, best.center());
    for (int a = a0 - 1; a <= a0 + 2; ++a) {
        for (int b = b0 - 2; b <= b0 + 3; ++b) {
            const HexCell c{a, b};
            const double d2 = dist2(p, c.center());
            if (d2 < best_d2 - 1e-12 * (1.0 + best_d2)) {
                best = c;
                best_d2 = d2;
            } else if (std::abs(d2 - best_d2) <= 1e-12 * (1.0 + best_d2) && c < best) {
                best = c;
            }
        }
    }
    return best;
}

std::vector<HexCell> hex_complex(const HexCell& z, int n) {
    std::vector<HexCell> out;
    out.reserve(1 + 3 * n * (n + 1));
    for (int da = -n; da <= n; ++da) {
        for (int db = -n; db <= n; ++db) {
            if ((std::abs(da) + std::abs(db) + std::abs(da + db)) / 2 <= n) {
                out.push_back({z.a + da, z.b + db});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<HexCell> hex_ring(const HexCell& z, int n) {
    std::vector<HexCell> out;
    for (int da = -n; da <= n; ++da) {
        for (int db = -n; db <= n; ++db) {
            if ((std::abs(da) + std::abs(db) + std::abs(da + db)) / 2 == n) {
                out.push_back({z.a + da, z.b + db});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

double Hexagon::inradius() const { return scale * kSqrt3 / 2.0; }

std::array<Point2, 6> Hexagon::vertices() const {
    std::array<Point2, 6> v;
    for (int k = 0; k < 6; ++k) {
        const double ang = k * kPi / 3.0;
        v[k] = center + Point2{scale * std::cos(ang), scale * std::sin(ang)};
    }
    return v;
}

double Hexagon::boundary_clearance(const Point2& p) const {
    // Intersection of 6 half-planes with normals at 30 + 60k degrees.
    const Point2 d = p - center;
    const double r_in = inradius();
    double m = r_in - (d.x * std::cos(kPi / 6.0) + d.y * std::sin(kPi / 6.0));
    for (int k = 1; k < 6; ++k) {
        const double ang = kPi / 6.0 + k * kPi / 3.0;
        m = std::min(m, r_in - (d.x * std::cos(ang) + d.y * std::sin(ang)));
    }
    return m;
}

bool Hexagon::contains(const Point2& p, double tol) const {
    return boundary_clearance(p) >= -tol;
}

double Hexagon::distance(const Point2& p) const {
    if (boundary_clearance(p) >= 0.0) return 0.0;
    const auto v = vertices();
    double d = point_segment_dist(p, v[5], v[0]);
    for (int k = 0; k + 1 < 6; ++k) {
        d = std::min(d, point_segment_dist(p, v[k], v[k + 1]));
    }
    return d;
}

bool Hexagon::intersects_segment(const Point2& a, const Point2& b, double tol) const {
    if (contains(a, tol) || contains(b, tol)) return true;
    const auto v = vertices();
    for (int k = 0; k < 6; ++k) {
        if (segment_intersection(a, b, v[k], v[(k + 1) % 6], tol)) return true;
    }
    return false;
}

bool HexComplexRegion::member(const HexCell& c) const {
    return std::binary_search(cells.begin(), cells.end(), c);
}

bool HexComplexRegion::contains(const Point2& p, double tol) const {
    const Point2 q = p - offset;
    const HexCell z = hex_locate(q);
    if (member(z)) return true;
    if (tol <= 0.0) return false;
    for (const auto& d : kHexNeighbors) {
        const HexCell c{z.a + d.a, z.b + d.b};
        if (member(c) && Hexagon::cell(c).contains(q, tol)) return true;
    }
    return false;
}

double HexComplexRegion::complement_distance(const Point2& p, double reach) const {
    const Point2 q = p - offset;
    // Any hexagon within `reach` of q has its center within reach + 1.
    const double r = reach + 1.0 + kSqrt3;
    const int a_lo = static_cast<int>(std::floor((q.x - r) / kIx));
    const int a_hi = static_cast<int>(std::ceil((q.x + r) / kIx));
    double best = reach;
    for (int a = a_lo; a <= a_hi; ++a) {
        const double rest = q.y - kIy * a;
        const int b_lo = static_cast<int>(std::floor((rest - r) / kJy));
        const int b_hi = static_cast<int>(std::ceil((rest + r) / kJy));
        for (int b = b_lo; b <= b_hi; ++b) {
            const HexCell c{a, b};
            if (member(c)) continue;
            best = std::min(best, Hexagon::cell(c).distance(q));
        }
    }
    return best;
}

bool HexComplexRegion::intersects_segment(const Point2& a, const Point2& b, double tol) const {
    const Point2 qa = a - offset;
    const Point2 qb = b - offset;
    for (const auto& c : cells) {
        if (Hexagon::cell(c).intersects_segment(qa, qb, tol)) return true;
    }
    return false;
}

}  // namespace outdeg1
