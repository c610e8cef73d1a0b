#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "outdeg1/assumptions.hpp"
#include "outdeg1/graph.hpp"

namespace outdeg1 {

/// Per-unit-cell loop counts: for every determined vertex, its loop's
/// center of mass is located in a half-open unit cell [z-1/2, z+1/2)^2.
/// Counting is restricted to cells fully inside the margin-shrunk window,
/// which keeps the mass-transport bound a fair finite-window test.
struct QCellCounts {
    std::map<std::pair<int, int>, int> counts;  // nonzero cells only
    int cell_count{0};                          // all cells in the core grid
    double mean{0.0};                           // estimator of E[#Q_0]
    int counted_vertices{0};
};

/// Throws when the margin leaves no complete unit cell.
QCellCounts q_cell_counts(const Configuration& config, const ClusterDecomposition& dec,
                          double core_margin);

/// Histogram of determined component sizes; undetermined components are
/// excluded and reported via the out-parameter.
std::map<int, int> cluster_size_distribution(const ClusterDecomposition& dec,
                                             int* undetermined = nullptr);

/// One simulation replicate's summary row.
struct RunSummary {
    int replicate{0};
    double side{0.0};
    double intensity{0.0};
    int n_points{0};
    int n_censored{0};
    int n_components{0};
    int n_determined{0};
    int max_cluster{0};       // largest determined component
    double mean_cluster{0.0}; // mean determined component size
    double q0_estimate{0.0};  // 0 when no complete core cell fits
    std::map<int, int> loop_size_histogram;
    uint64_t master_seed{0};
    uint64_t stream{0};
};

/// Everything one replicate produces; the CLI picks what to serialize.
struct ReplicateResult {
    Configuration config;
    SegmentSolution segment;      // filled for the segment model
    NavigationSolution navigation;  // filled for the navigation model
    OutdegreeGraph graph;
    ClusterDecomposition decomposition;
    RunSummary summary;
    bool degenerate{false};
};

/// Samples a PPP on [0, side]^2 and solves it with the chosen model.
/// core_margin_frac shrinks the q0 counting region away from the boundary.
ReplicateResult run_replicate(Model model, double epsilon, double intensity, double side,
                              const RngSpec& rng, int replicate_index,
                              double core_margin_frac = 0.2);

/// Expanding-window percolation diagnostic.
struct PercolationPoint {
    double side{0.0};
    double mean_largest_fraction{0.0};   // largest determined cluster's core share
    double mean_censored_fraction{0.0};  // censored points / all points
};

std::vector<PercolationPoint> percolation_curve(Model model, double epsilon, double intensity,
                                                const std::vector<double>& sides,
                                                int replicates, const RngSpec& rng);

}  // namespace outdeg1
