#pragma once

#include <cstdint>
#include <vector>

#include "outdeg1/geometry.hpp"
#include "outdeg1/rng.hpp"

namespace outdeg1 {

/// Germ position plus a mark in [0,1). The mark encodes the growth /
/// navigation direction 2*pi*u.
struct MarkedPoint {
    int id{0};
    Point2 germ;
    double mark{0.0};

    Direction dir() const { return Direction(mark); }
};

/// A finite marked configuration inside a sampling window. Ids are 0..n-1,
/// all germs lie in the window and no two germs coincide (coincidence would
/// hide RNG bugs, so it is rejected rather than perturbed).
struct Configuration {
    std::vector<MarkedPoint> points;
    Window window;

    size_t size() const { return points.size(); }

    /// Validates the structural invariants; throws std::invalid_argument.
    void check() const;
};

/// Samples a marked Poisson point process on the window: point count
/// Poisson(intensity * area), germs i.i.d. uniform, marks i.i.d. uniform in
/// [0,1). Deterministic given rng.
///
/// Only the uniform mark law ships; a different distribution would plug in
/// at the single mark-draw site here (and in add_typical) without touching
/// any solver.
Configuration sample_ppp(const Window& window, double intensity, const RngSpec& rng);

/// Palm-style insertion of a typical point at a fixed location with a fresh
/// uniform mark. Existing ids are unchanged; the new point gets id n.
/// Throws on a coincident germ or a location outside the open window.
std::pair<Configuration, MarkedPoint> add_typical(const Configuration& config,
                                                  const Point2& at, const RngSpec& rng);

/// Shifts every germ (and the window) by v; marks and ids unchanged.
Configuration translate(const Configuration& config, const Point2& v);

}  // namespace outdeg1
