#pragma once

#include <vector>

#include "outdeg1/graph.hpp"
#include "outdeg1/hex.hpp"
#include "outdeg1/navigation_model.hpp"
#include "outdeg1/process.hpp"
#include "outdeg1/segment_model.hpp"

namespace outdeg1 {

enum class Model { kSegment, kNavigation };

/// Open ball in the k-fold marked product space (R^2 x [0,1])^k, Euclidean
/// on the flattened (x, y, mark) coordinates. The center tuple is itself a
/// member.
struct ProductBall {
    std::vector<MarkedPoint> center;  // k marked points; ids are ignored
    double radius{0.0};

    int k() const { return static_cast<int>(center.size()); }
};

/// A constructive loop-break: adding any tuple from the ball to the
/// configuration reroutes the anchor's forward branch into a fresh loop
/// without shrinking its backward set. k = 3 for the segment model, k = 1
/// for navigation.
struct LoopBreakWitness {
    int anchor{-1};
    std::vector<MarkedPoint> added;  // the ball center, with ids n..n+k-1
    ProductBall ball;
};

/// Builds the three-point witness near the anchor's impact point: an empty
/// stretch of the anchor's segment free of incoming impacts, a ball around
/// its midpoint that meets no other realized segment, and a small pinwheel
/// triangle of mutually stopping segments straddling the ball center.
/// Throws DegeneracyError when the anchor is censored or float-coincident
/// impacts leave no room.
LoopBreakWitness construct_segment_loop_break(const Configuration& config,
                                              const SegmentSolution& solution, int x);

/// Builds the one-point witness inside the anchor's stopped cone: a point
/// closer than every existing germ whose own cone looks back at the anchor,
/// so re-solving yields a mutual 2-loop.
LoopBreakWitness construct_navigation_loop_break(const Configuration& config,
                                                 const NavigationSolution& solution, int x,
                                                 double epsilon);

struct KLoopingReport {
    bool cond_i{false};         // For(x, aug) lands in {x} u added, on a loop
    bool cond_ii{false};        // added points share x's component, forwards contained
    bool cond_iii{false};       // rerouted points target Back(x, aug) n ({x} u added)
    bool backward_preserved{false};  // #Back grew or stayed
    bool backward_superset{false};   // Back(x, base) is a subset of Back(x, aug)
    bool degenerate{false};          // solver flagged ties on the augmented solve
    int back_before{0};
    int back_after{0};

    bool all() const { return cond_i && cond_ii && cond_iii && backward_preserved; }
};

/// Solves the base and augmented configurations with the chosen model and
/// checks the three loop-assumption conditions plus backward preservation.
/// `epsilon` is only read for the navigation model.
KLoopingReport verify_k_looping(const Configuration& config, int x,
                                const std::vector<MarkedPoint>& added, Model model,
                                double epsilon = 0.0);

struct AlmostLoopingParams {
    double r{0.0};
    double R{0.0};  // r < R
    int K{0};
    ProductBall ball;  // A, germ coordinates relative to the anchor
    int samples{0};
};

struct AlmostLoopingReport {
    bool count_ok{false};             // germ count in B(x, R) <= K
    double fraction_passing{0.0};     // sampled tuples satisfying (ii-a) and (ii-b)
    int samples{0};
};

/// Checks the ball-count condition exactly and approximates the
/// for-all-tuples condition by sampling `params.samples` tuples from the
/// ball (the universal quantifier ranges over a continuum; a fraction
/// below 1.0 is reported, never hidden).
AlmostLoopingReport verify_almost_looping(const Configuration& config, int x,
                                          const AlmostLoopingParams& params, Model model,
                                          double epsilon, const RngSpec& rng);

struct ShieldCheck {
    bool barrier_found{false};  // sufficient: winding circuit of partial segments
    bool chord_pass{false};     // sampled necessary condition over boundary chords
};

/// Checks whether the hexagon is an epsilon-shield for the configuration:
/// the locally determined partial segments must block every straight chord
/// from outside the hexagon into its epsilon-scaled core. barrier_found is
/// proof (a connected circuit of segments winding once around the center
/// inside the annulus); chord_pass alone is sampled evidence.
ShieldCheck is_epsilon_shield(const Configuration& config, const Hexagon& hex,
                              double epsilon, int chord_resolution);

struct ShieldReport {
    double epsilon{0.0};
    double intensity{0.0};
    int trials{0};
    int successes{0};
    double p_hat{0.0};
    double ci_lo{0.0};  // Wilson 95% interval
    double ci_hi{0.0};
};

/// Monte Carlo estimate of p_epsilon over independent PPP restrictions to
/// the canonical hexagon H(0); success means barrier_found. Bit-exact
/// reproducible under a fixed RngSpec.
ShieldReport estimate_p_epsilon(double epsilon, double intensity, int trials,
                                const RngSpec& rng, int chord_resolution = 24);

/// Wilson 95% binomial interval.
std::pair<double, double> wilson_ci(int successes, int trials);

struct MShieldedCheck {
    bool club{false};   // no outside segment meets H^m(eta)
    bool spade{false};  // every inside segment's impact stays in H^2m(eta)
};

/// Geometric test of the m-shielded property against the realized segment
/// set (1e-9 slack). Censored segments count as infinite rays for club and
/// as violations of spade when they originate inside H^m(eta).
MShieldedCheck check_m_shielded(const Configuration& config, const SegmentSolution& solution,
                                const Point2& eta, int m);

/// Navigation shield event: [-m, m]^2 split into (2*floor(sqrt(m)))^2
/// congruent subsquares, true iff every subsquare holds a germ. The config
/// window must contain [-m, m]^2.
bool check_navigation_shield_event(const Configuration& config, int m);

/// Convenience: solve with the chosen model and return the functional graph.
OutdegreeGraph solve_graph(const Configuration& config, Model model, double epsilon,
                           bool* degenerate = nullptr);

}  // namespace outdeg1
