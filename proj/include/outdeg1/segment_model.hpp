#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "outdeg1/process.hpp"
#include "outdeg1/region.hpp"

namespace outdeg1 {

/// Thrown when a solver cannot settle a configuration (cyclic exact ties,
/// relaxation that fails to reach a fixed point within the sweep cap).
class DegeneracyError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Per-point outcome of the line-segment stopping dynamics. A point is
/// censored when the finite window leaves its stopping segment undetermined;
/// censored fields are jointly unset (target absent, stop_len infinite).
struct SegmentSolution {
    struct Entry {
        std::optional<int> target;   // stopping point id
        Point2 impact;               // valid iff target is set
        double stop_len{kInf};       // infinite iff censored
        bool degenerate{false};      // exact-tie or collinear-pair marker
    };

    std::vector<Entry> entries;

    size_t size() const { return entries.size(); }
    bool censored(int i) const { return !entries[i].target.has_value(); }
    bool any_degenerate() const {
        for (const auto& e : entries)
            if (e.degenerate) return true;
        return false;
    }
};

/// Reference solver: Gauss-Seidel relaxation of
///   stop_len(i) = min over j of { a(i,j) : b(i,j) <= a(i,j), b(i,j) <= stop_len(j) }
/// from the all-censored state, sweeping points in id order until a full
/// sweep changes nothing. Throws DegeneracyError after n+1 sweeps.
SegmentSolution solve_fixed_point(const Configuration& config);

/// Event-driven solver with spatial-grid pruning of distant pairs; output
/// contract identical to solve_fixed_point. Candidate events (i stopped by
/// j at p, time a, requires b <= a) are processed in increasing a; an event
/// fires iff i is unstopped and j is unstopped or stopped with
/// stop_len(j) >= b. A pair at germ distance d cannot produce an event
/// before d/2, which is what makes the distance-band pruning exact.
SegmentSolution solve_event_driven(const Configuration& config);

/// Locally determined partial segments for a bounded region (the
/// sigma-algebra-measurable part of the dynamics).
struct PartialSegments {
    struct Entry {
        int id{0};                  // id in the source configuration
        double reach{0.0};          // r(x, Lambda): decision-ball radius
        Point2 frontier;            // f_Lambda(phi, x)
        bool decided{false};        // true impact determined inside Lambda
        std::optional<int> target;  // valid iff decided
        double stop_len{kInf};      // capped stop length (== reach if undecided)
    };

    std::vector<Entry> entries;
};

/// Computes r(x,Lambda) per point by bisection (1e-9 absolute) on the
/// ball-inside-region predicate, then runs the capped fixed-point
/// relaxation over the points inside the region only. decided(x) is true
/// iff the capped relaxation stops x strictly before r(x,Lambda).
PartialSegments partial_solve(const Configuration& config, const Region& region);

}  // namespace outdeg1
