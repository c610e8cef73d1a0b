#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "outdeg1/assumptions.hpp"
#include "outdeg1/graph.hpp"
#include "outdeg1/stats.hpp"

namespace outdeg1::io {

/// Configuration document, schema "outdeg1-config v1": a JSON object with
/// fields window {lo, hi} and points [{id, x, y, mark}]. Used by the CLI
/// for both input and output; doubles round-trip exactly.
std::string write_config(const Configuration& config);
Configuration read_config(const std::string& text);

void save_text(const std::string& path, const std::string& text);
std::string load_text(const std::string& path);

/// Segment solution CSV, header
/// id,target_id,impact_x,impact_y,stop_len,degenerate ; censored rows carry
/// the word "censored" in target_id and empty numeric fields.
std::string write_segment_csv(const SegmentSolution& sol);
SegmentSolution read_segment_csv(const std::string& text);

/// Navigation solution CSV, header id,target_id,dist,degenerate.
std::string write_navigation_csv(const NavigationSolution& sol);
NavigationSolution read_navigation_csv(const std::string& text);

/// Cluster CSV, header vertex,component,in_loop,loop_size ; undetermined
/// components carry "undetermined" in loop_size.
std::string write_cluster_csv(const ClusterDecomposition& dec);

/// RunSummary CSV with the fixed header
/// replicate,side,intensity,n_points,n_censored,n_components,n_determined,
/// max_cluster,mean_cluster,q0_estimate.
std::string write_run_summary_csv(const std::vector<RunSummary>& rows);

/// Shield report document, schema "outdeg1-shieldreport v1".
std::string write_shield_report(const ShieldReport& rep, uint64_t seed,
                                int chord_resolution);

/// Loop-check report document, schema "outdeg1-loopreport v1".
struct LoopCheckAggregate {
    std::string model;
    int anchors_requested{0};
    int anchors_checked{0};
    int pass_i{0};
    int pass_ii{0};
    int pass_iii{0};
    int pass_backward{0};
    int pass_all{0};
    int degenerate{0};

    double pass_fraction() const {
        return anchors_checked > 0 ? double(pass_all) / anchors_checked : 1.0;
    }
};
std::string write_loopcheck_report(const LoopCheckAggregate& agg, uint64_t seed);

/// Fixed-format double for CSV cells: shortest representation that
/// round-trips, stable across runs.
std::string format_double(double v);

}  // namespace outdeg1::io
