#pragma once

#include <optional>
#include <vector>

#include "outdeg1/process.hpp"

namespace outdeg1 {

/// Per-point outcome of the cone-navigation graph: the nearest germ strictly
/// inside the point's cone of half-angle epsilon, or censored when the cone
/// holds no germ within the window.
struct NavigationSolution {
    struct Entry {
        std::optional<int> target;
        double dist{0.0};          // germ distance, valid iff target is set
        bool degenerate{false};    // exact distance tie, broken toward smaller id
    };

    std::vector<Entry> entries;

    size_t size() const { return entries.size(); }
    bool censored(int i) const { return !entries[i].target.has_value(); }
};

/// Grid-accelerated solver (uniform cells of side ~ intensity^{-1/2},
/// expanding ring by ring). Must match the linear-scan reference exactly,
/// tie handling included.
NavigationSolution solve_navigation(const Configuration& config, double epsilon);

/// Definitional O(n^2) oracle twin.
NavigationSolution solve_navigation_reference(const Configuration& config, double epsilon);

}  // namespace outdeg1
