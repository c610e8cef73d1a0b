#include "outdeg1/assumptions.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace outdeg1 {

namespace {

constexpr double kDegToTurn = 1.0 / 360.0;

Point2 unit(double radians) { return {std::cos(radians), std::sin(radians)}; }

// Realized extent of a segment; censored points get a long ray surrogate.
Point2 realized_end(const Configuration& config, const SegmentSolution& sol, int i,
                    double far_len) {
    if (sol.entries[i].target) return sol.entries[i].impact;
    return config.points[i].germ + config.points[i].dir().vec() * far_len;
}

// Appends the tuple with fresh ids and widens the window to keep the germ
// invariant; the window plays no role in the dynamics.
Configuration augment(const Configuration& config, const std::vector<MarkedPoint>& added) {
    Configuration aug = config;
    for (auto p : added) {
        p.id = static_cast<int>(aug.points.size());
        aug.window.lo.x = std::min(aug.window.lo.x, p.germ.x - 1e-6);
        aug.window.lo.y = std::min(aug.window.lo.y, p.germ.y - 1e-6);
        aug.window.hi.x = std::max(aug.window.hi.x, p.germ.x + 1e-6);
        aug.window.hi.y = std::max(aug.window.hi.y, p.germ.y + 1e-6);
        aug.points.push_back(p);
    }
    return aug;
}

}  // namespace

OutdegreeGraph solve_graph(const Configuration& config, Model model, double epsilon,
                           bool* degenerate) {
    if (model == Model::kSegment) {
        const auto sol = solve_event_driven(config);
        if (degenerate) *degenerate = sol.any_degenerate();
        return OutdegreeGraph::from_segment(config, sol);
    }
    const auto sol = solve_navigation(config, epsilon);
    if (degenerate) {
        *degenerate = false;
        for (const auto& e : sol.entries) *degenerate |= e.degenerate;
    }
    return OutdegreeGraph::from_navigation(config, sol);
}

LoopBreakWitness construct_segment_loop_break(const Configuration& config,
                                              const SegmentSolution& solution, int x) {
    const int n = static_cast<int>(config.size());
    if (x < 0 || x >= n) throw std::invalid_argument("loop break: bad anchor id");
    const auto& ex = solution.entries[x];
    if (!ex.target) throw DegeneracyError("loop break: anchor is censored");

    const Point2 xi = config.points[x].germ;
    const Point2 u = config.points[x].dir().vec();
    const Point2 hg = ex.impact;
    const double s = ex.stop_len;

    // Condition (4): a stretch [hg - r*u; hg] of the anchor's segment free of
    // impacts from the points it stops.
    double t_max = 0.0;
    for (int y = 0; y < n; ++y) {
        if (y == x) continue;
        const auto& ey = solution.entries[y];
        if (ey.target && *ey.target == x) {
            t_max = std::max(t_max, dist(xi, ey.impact));
        }
    }
    const double r = 0.5 * (s - t_max);
    if (!(r > 1e-9 * (1.0 + s))) {
        throw DegeneracyError("loop break: impacts crowd the anchor's endpoint");
    }
    const Point2 w = hg - u * (r / 2.0);
    const double xi_w = dist(xi, w);

    // Conditions (5) and (6): shrink the ball until it clears every other
    // realized segment and stays out of the anchor's truncated growth.
    const double far_len = config.window.diameter() * 2.0 + s + 10.0;
    double r_prime = std::min(r / 4.0, xi_w / 3.0);
    for (int y = 0; y < n; ++y) {
        if (y == x) continue;
        const double d =
            point_segment_dist(w, config.points[y].germ, realized_end(config, solution, y, far_len));
        r_prime = std::min(r_prime, d / 2.0);
    }
    if (!(r_prime > 1e-9)) {
        throw DegeneracyError("loop break: no clear ball near the anchor's segment");
    }

    // Pinwheel triangle: germs on a circle of radius r'/2 around w, each ray
    // tilted past the chord toward the next germ so it crosses the next
    // ray's forward portion (tilt 150 deg reaches the germ exactly; a bit
    // more gives a robust interior hit). The three segment tips then pairwise
    // connect, so the triangle boundary is covered by the segments and the
    // anchor's ray through w cannot miss it.
    const double rho = r_prime / 2.0;
    const double theta0 = std::atan2(u.y, u.x) + 1.0;

    double best_seam = -1.0;
    double best_tilt = 160.0;
    for (double tilt : {160.0, 156.0, 164.0, 158.0, 162.0, 161.0, 159.0, 163.0, 157.0}) {
        double seam = 1.0;
        for (int i = 0; i < 3; ++i) {
            const double turns = (theta0 + i * (kTwoPi / 3.0)) / kTwoPi + tilt * kDegToTurn;
            const double m = Direction::wrapped(turns).u;
            seam = std::min(seam, std::min(m, 1.0 - m));
        }
        if (seam > best_seam) {
            best_seam = seam;
            best_tilt = tilt;
        }
    }

    LoopBreakWitness wit;
    wit.anchor = x;
    for (int i = 0; i < 3; ++i) {
        const double ang = theta0 + i * (kTwoPi / 3.0);
        MarkedPoint p;
        p.id = n + i;
        p.germ = w + unit(ang) * rho;
        p.mark = Direction::wrapped(ang / kTwoPi + best_tilt * kDegToTurn).u;
        wit.added.push_back(p);
    }
    wit.ball.center = wit.added;
    wit.ball.radius = std::min({r_prime / 40.0, 0.002, best_seam / 3.0});
    if (!(wit.ball.radius > 1e-12)) {
        throw DegeneracyError("loop break: ball radius collapsed");
    }
    return wit;
}

LoopBreakWitness construct_navigation_loop_break(const Configuration& config,
                                                 const NavigationSolution& solution, int x,
                                                 double epsilon) {
    const int n = static_cast<int>(config.size());
    if (x < 0 || x >= n) throw std::invalid_argument("loop break: bad anchor id");
    const Point2 xi = config.points[x].germ;
    const double axis = config.points[x].dir().radians();

    const auto& ex = solution.entries[x];
    const double d_target = ex.target ? ex.dist : kInf;
    double d_nn = kInf;
    for (int y = 0; y < n; ++y) {
        if (y != x) d_nn = std::min(d_nn, dist(xi, config.points[y].germ));
    }

    // Placement distance: inside the stopped cone and closer than every
    // germ, with room to spare for the ball.
    const double delta = std::isfinite(d_nn) ? 0.4 * d_nn : 1.0;
    if (!(delta > 1e-9)) throw DegeneracyError("loop break: anchor huddled against a germ");

    // Tilt the placement off the axis when the backward-looking mark would
    // land on the mark-space seam.
    double best_quality = -1.0;
    double best_tilt = 0.0;
    for (double f : {0.0, 0.1, -0.1, 0.2, -0.2, 0.3, -0.3}) {
        const double tilt = f * std::min(epsilon, 1.0);
        const double back = Direction::from_radians(axis + tilt + kPi).u;
        const double seam = std::min(back, 1.0 - back);
        const double quality = std::min(seam, 0.25 * (epsilon - std::abs(tilt)));
        if (quality > best_quality) {
            best_quality = quality;
            best_tilt = tilt;
        }
    }

    MarkedPoint y;
    y.id = n;
    y.germ = xi + unit(axis + best_tilt) * delta;
    y.mark = Direction::from_radians(axis + best_tilt + kPi).u;

    const double ang_room = epsilon - std::abs(best_tilt);
    const double seam = std::min(y.mark, 1.0 - y.mark);
    double radius = std::min({0.05 * delta, delta * ang_room / 8.0,
                              epsilon / (4.0 * kPi + 8.0 / delta), 0.5 * seam, 0.02});
    if (std::isfinite(d_target)) radius = std::min(radius, 0.1 * (d_target - delta));
    if (!(radius > 1e-12)) throw DegeneracyError("loop break: ball radius collapsed");

    LoopBreakWitness wit;
    wit.anchor = x;
    wit.added = {y};
    wit.ball.center = wit.added;
    wit.ball.radius = radius;
    return wit;
}

namespace {

bool orbit_in_set(const OutdegreeGraph& g, int v, const std::unordered_set<int>& allowed,
                  bool require_loop) {
    const auto fr = forward(g, v);
    if (require_loop && fr.censored()) return false;
    for (int w : fr.path) {
        if (!allowed.count(w)) return false;
    }
    return true;
}

}  // namespace

KLoopingReport verify_k_looping(const Configuration& config, int x,
                                const std::vector<MarkedPoint>& added, Model model,
                                double epsilon) {
    const int n = static_cast<int>(config.size());
    KLoopingReport rep;

    bool deg_base = false, deg_aug = false;
    const auto g_base = solve_graph(config, model, epsilon, &deg_base);
    const auto aug = augment(config, added);
    const auto g_aug = solve_graph(aug, model, epsilon, &deg_aug);
    rep.degenerate = deg_aug;

    std::unordered_set<int> allowed{x};
    for (size_t i = 0; i < added.size(); ++i) allowed.insert(n + static_cast<int>(i));

    rep.cond_i = orbit_in_set(g_aug, x, allowed, /*require_loop=*/true);

    const auto dec = clusters(g_aug);
    rep.cond_ii = true;
    for (size_t i = 0; i < added.size(); ++i) {
        const int a = n + static_cast<int>(i);
        rep.cond_ii &= dec.component_of[a] == dec.component_of[x];
        rep.cond_ii &= orbit_in_set(g_aug, a, allowed, /*require_loop=*/true);
    }

    const auto back_aug = backward(g_aug, x);
    const std::unordered_set<int> back_aug_set(back_aug.begin(), back_aug.end());

    rep.cond_iii = true;
    for (int y = 0; y < n; ++y) {
        if (y == x) continue;
        if (g_base.out[y] == g_aug.out[y]) continue;
        const auto& t = g_aug.out[y];
        rep.cond_iii &= t.has_value() && allowed.count(*t) && back_aug_set.count(*t);
    }

    const auto back_base = backward(g_base, x);
    rep.back_before = static_cast<int>(back_base.size());
    rep.back_after = static_cast<int>(back_aug.size());
    rep.backward_preserved = rep.back_after >= rep.back_before;
    rep.backward_superset = std::all_of(back_base.begin(), back_base.end(),
                                        [&](int v) { return back_aug_set.count(v) > 0; });
    return rep;
}

namespace {

// Uniform tuple from an open product ball, rejection from the bounding cube.
std::vector<MarkedPoint> sample_tuple(const ProductBall& ball, const Point2& shift,
                                      CounterRng& gen) {
    const int k = ball.k();
    std::vector<double> d(3 * k);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        double norm2 = 0.0;
        for (auto& v : d) {
            v = gen.uniform(-ball.radius, ball.radius);
            norm2 += v * v;
        }
        if (norm2 >= ball.radius * ball.radius) continue;
        bool marks_ok = true;
        for (int i = 0; i < k; ++i) {
            const double m = ball.center[i].mark + d[3 * i + 2];
            marks_ok &= (m >= 0.0 && m < 1.0);
        }
        if (!marks_ok) continue;
        std::vector<MarkedPoint> tuple(ball.center.begin(), ball.center.end());
        for (int i = 0; i < k; ++i) {
            tuple[i].germ = tuple[i].germ + Point2{d[3 * i], d[3 * i + 1]} + shift;
            tuple[i].mark += d[3 * i + 2];
        }
        return tuple;
    }
    throw DegeneracyError("product ball sampling failed (ball leaves the mark space?)");
}

}  // namespace

AlmostLoopingReport verify_almost_looping(const Configuration& config, int x,
                                          const AlmostLoopingParams& params, Model model,
                                          double epsilon, const RngSpec& rng) {
    if (!(params.r < params.R)) throw std::invalid_argument("almost looping: need r < R");
    for (const auto& p : params.ball.center) {
        if (p.germ.norm() + params.ball.radius > params.r) {
            throw std::invalid_argument("almost looping: ball leaves B(0, r)^k");
        }
    }
    const Point2 xi = config.points[x].germ;

    AlmostLoopingReport rep;
    rep.samples = params.samples;

    int count = 0;
    for (const auto& p : config.points) {
        if (dist(p.germ, xi) < params.R) ++count;
    }
    rep.count_ok = count <= params.K;

    const auto g_base = solve_graph(config, model, epsilon, nullptr);
    const int back_before = static_cast<int>(backward(g_base, x).size());

    const int n = static_cast<int>(config.size());
    std::unordered_set<int> allowed{x};
    for (int i = 0; i < params.ball.k(); ++i) allowed.insert(n + i);

    CounterRng gen(rng);
    int pass = 0;
    for (int s = 0; s < params.samples; ++s) {
        const auto tuple = sample_tuple(params.ball, xi, gen);
        const auto aug = augment(config, tuple);
        const auto g_aug = solve_graph(aug, model, epsilon, nullptr);
        const bool ii_a = orbit_in_set(g_aug, x, allowed, /*require_loop=*/true);
        const bool ii_b =
            static_cast<int>(backward(g_aug, x).size()) >= back_before;
        if (ii_a && ii_b) ++pass;
    }
    rep.fraction_passing = params.samples > 0 ? double(pass) / params.samples : 0.0;
    return rep;
}

namespace {

// Points spread along a hexagon boundary, `count` of them.
std::vector<Point2> boundary_points(const Hexagon& hex, int count) {
    const auto v = hex.vertices();
    std::vector<Point2> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        const double t = 6.0 * i / count;
        const int e = std::min(5, static_cast<int>(t));
        const double f = t - e;
        const Point2 a = v[e], b = v[(e + 1) % 6];
        out.push_back(a + (b - a) * f);
    }
    return out;
}

struct Piece {
    Point2 a, b;
};

// Removes the part of [a, b] inside the (convex) core hexagon.
void clip_outside(const Point2& a, const Point2& b, const Hexagon& core,
                  std::vector<Piece>& out) {
    const Point2 d = b - a;
    double t_in = 0.0, t_out = 1.0;
    bool crosses = true;
    for (int k = 0; k < 6 && crosses; ++k) {
        const double ang = kPi / 6.0 + k * kPi / 3.0;
        const Point2 nrm{std::cos(ang), std::sin(ang)};
        const double f0 = (a - core.center).dot(nrm) - core.inradius();
        const double f1 = (b - core.center).dot(nrm) - core.inradius();
        if (f0 <= 0.0 && f1 <= 0.0) continue;      // inside this half-plane
        if (f0 > 0.0 && f1 > 0.0) {                // fully outside the core
            crosses = false;
            break;
        }
        const double t = f0 / (f0 - f1);
        if (f0 > 0.0) {
            t_in = std::max(t_in, t);
        } else {
            t_out = std::min(t_out, t);
        }
    }
    if (!crosses || t_in >= t_out) {
        out.push_back({a, b});
        return;
    }
    if (t_in > 1e-12) out.push_back({a, a + d * t_in});
    if (t_out < 1.0 - 1e-12) out.push_back({a + d * t_out, b});
}

// Winding number of the closed polyline around c (exact for polylines whose
// edges avoid c).
double winding(const std::vector<Point2>& poly, const Point2& c) {
    if (poly.size() < 3) return 0.0;
    double total = 0.0;
    for (size_t i = 0; i < poly.size(); ++i) {
        const Point2 p = poly[i] - c;
        const Point2 q = poly[(i + 1) % poly.size()] - c;
        total += std::remainder(std::atan2(q.y, q.x) - std::atan2(p.y, p.x), kTwoPi);
    }
    return total / kTwoPi;
}

// Searches the piece-intersection graph for a circuit winding once around
// `center`. Fundamental cycles of a few differently-rooted DFS forests.
bool find_winding_circuit(const std::vector<Piece>& pieces,
                          const std::vector<std::vector<std::pair<int, Point2>>>& adj,
                          const Point2& center) {
    const int n = static_cast<int>(pieces.size());
    for (int attempt = 0; attempt < 4; ++attempt) {
        std::vector<int> parent(n, -2), depth(n, 0), order;
        std::vector<Point2> parent_meet(n);
        for (int seed = 0; seed < n; ++seed) {
            const int root = (seed + attempt * (n / 4 + 1)) % n;
            if (parent[root] != -2) continue;
            parent[root] = -1;
            order.push_back(root);
            std::vector<int> stack{root};
            while (!stack.empty()) {
                const int u = stack.back();
                stack.pop_back();
                for (const auto& [v, meet] : adj[u]) {
                    if (parent[v] != -2) continue;
                    parent[v] = u;
                    parent_meet[v] = meet;
                    depth[v] = depth[u] + 1;
                    stack.push_back(v);
                }
            }
        }
        // Each non-tree edge closes one fundamental cycle.
        for (int u = 0; u < n; ++u) {
            for (const auto& [v, meet] : adj[u]) {
                if (v < u || parent[u] == v || parent[v] == u) continue;
                std::vector<Point2> left{meet}, right;
                int a = u, b = v;
                while (depth[a] > depth[b]) {
                    left.push_back(parent_meet[a]);
                    a = parent[a];
                }
                while (depth[b] > depth[a]) {
                    right.push_back(parent_meet[b]);
                    b = parent[b];
                }
                while (a != b) {
                    left.push_back(parent_meet[a]);
                    right.push_back(parent_meet[b]);
                    a = parent[a];
                    b = parent[b];
                }
                left.insert(left.end(), right.rbegin(), right.rend());
                if (std::abs(winding(left, center)) >= 1.0 - 1e-6) return true;
            }
        }
    }
    return false;
}

}  // namespace

ShieldCheck is_epsilon_shield(const Configuration& config, const Hexagon& hex,
                              double epsilon, int chord_resolution) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw std::invalid_argument("epsilon shield: epsilon must be in (0,1)");
    }
    if (chord_resolution < 8) {
        throw std::invalid_argument("epsilon shield: chord_resolution must be >= 8");
    }

    const auto partial = partial_solve(config, Region(hex));
    std::vector<Piece> segments;
    for (const auto& e : partial.entries) {
        const Point2 germ = config.points[e.id].germ;
        if (dist(germ, e.frontier) > 1e-12) segments.push_back({germ, e.frontier});
    }

    const Hexagon core{hex.center, hex.scale * epsilon};
    ShieldCheck check;

    // Sampled necessary condition: every chord from the outer boundary to
    // the core boundary must meet a partial segment.
    check.chord_pass = true;
    const auto outer = boundary_points(hex, chord_resolution);
    const auto inner = boundary_points(core, chord_resolution);
    for (const auto& a : outer) {
        for (const auto& b : inner) {
            bool blocked = false;
            for (const auto& s : segments) {
                if (segment_intersection(a, b, s.a, s.b, 1e-9)) {
                    blocked = true;
                    break;
                }
            }
            if (!blocked) {
                check.chord_pass = false;
                break;
            }
        }
        if (!check.chord_pass) break;
    }

    // Sufficient condition: a circuit of pairwise-touching clipped segments
    // winding once around the center inside the annulus.
    std::vector<Piece> pieces;
    for (const auto& s : segments) clip_outside(s.a, s.b, core, pieces);
    const int m = static_cast<int>(pieces.size());
    std::vector<std::vector<std::pair<int, Point2>>> adj(m);
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            const auto meet =
                segment_intersection(pieces[i].a, pieces[i].b, pieces[j].a, pieces[j].b, 1e-9);
            if (meet) {
                adj[i].push_back({j, *meet});
                adj[j].push_back({i, *meet});
            }
        }
    }
    check.barrier_found = m > 2 && find_winding_circuit(pieces, adj, hex.center);
    return check;
}

ShieldReport estimate_p_epsilon(double epsilon, double intensity, int trials,
                                const RngSpec& rng, int chord_resolution) {
    if (trials < 1) throw std::invalid_argument("estimate_p_epsilon: trials must be >= 1");
    if (!(intensity > 0.0)) throw std::invalid_argument("estimate_p_epsilon: bad intensity");

    const Hexagon hex{{0.0, 0.0}, 1.0};
    const double hex_area = 3.0 * std::sqrt(3.0) / 2.0;
    const Window box{{-1.0, -1.0}, {1.0, 1.0}};

    ShieldReport rep;
    rep.epsilon = epsilon;
    rep.intensity = intensity;
    rep.trials = trials;

    for (int t = 0; t < trials; ++t) {
        CounterRng gen(rng.substream(static_cast<uint64_t>(t)));
        const uint64_t n = gen.poisson(intensity * hex_area);
        Configuration config;
        config.window = box;
        for (uint64_t i = 0; i < n; ++i) {
            Point2 p;
            do {
                p.x = gen.uniform(box.lo.x, box.hi.x);
                p.y = gen.uniform(box.lo.y, box.hi.y);
            } while (!hex.contains(p));
            config.points.push_back({static_cast<int>(i), p, gen.uniform01()});
        }
        if (is_epsilon_shield(config, hex, epsilon, chord_resolution).barrier_found) {
            ++rep.successes;
        }
    }

    rep.p_hat = double(rep.successes) / trials;
    std::tie(rep.ci_lo, rep.ci_hi) = wilson_ci(rep.successes, trials);
    return rep;
}

std::pair<double, double> wilson_ci(int successes, int trials) {
    const double z = 1.959963984540054;  // 95% normal quantile
    const double n = trials, p = double(successes) / trials;
    const double denom = 1.0 + z * z / n;
    const double mid = (p + z * z / (2.0 * n)) / denom;
    const double half = z / denom * std::sqrt(p * (1.0 - p) / n + z * z / (4.0 * n * n));
    return {std::max(0.0, mid - half), std::min(1.0, mid + half)};
}

MShieldedCheck check_m_shielded(const Configuration& config, const SegmentSolution& solution,
                                const Point2& eta, int m) {
    if (m < 1) throw std::invalid_argument("check_m_shielded: m must be >= 1");
    const auto inner = HexComplexRegion::around(eta, m);
    const auto outer = HexComplexRegion::around(eta, 2 * m);

    MShieldedCheck check;
    check.club = true;
    check.spade = true;
    const int n = static_cast<int>(config.size());
    for (int i = 0; i < n; ++i) {
        const Point2 germ = config.points[i].germ;
        const bool in_inner = inner.contains(germ);
        const bool in_outer = outer.contains(germ);
        if (!in_outer) {
            const double far_len = dist(germ, eta) + 4.0 * m + 10.0;
            const Point2 end = realized_end(config, solution, i, far_len);
            if (inner.intersects_segment(germ, end, 1e-9)) check.club = false;
        }
        if (in_inner) {
            const auto& e = solution.entries[i];
            if (!e.target || !outer.contains(e.impact, 1e-9)) check.spade = false;
        }
        if (!check.club && !check.spade) break;
    }
    return check;
}

bool check_navigation_shield_event(const Configuration& config, int m) {
    if (m < 1) throw std::invalid_argument("navigation shield event: m must be >= 1");
    const Window square{{-double(m), -double(m)}, {double(m), double(m)}};
    if (!(config.window.lo.x <= square.lo.x && config.window.lo.y <= square.lo.y &&
          config.window.hi.x >= square.hi.x && config.window.hi.y >= square.hi.y)) {
        throw std::invalid_argument("navigation shield event: window must contain [-m,m]^2");
    }
    const int k = 2 * static_cast<int>(std::floor(std::sqrt(double(m))));
    const double side = 2.0 * m / k;
    std::vector<bool> occupied(static_cast<size_t>(k) * k, false);
    for (const auto& p : config.points) {
        if (!square.contains(p.germ)) continue;
        const int gx = std::min(k - 1, static_cast<int>((p.germ.x + m) / side));
        const int gy = std::min(k - 1, static_cast<int>((p.germ.y + m) / side));
        occupied[static_cast<size_t>(gx) * k + gy] = true;
    }
    return std::all_of(occupied.begin(), occupied.end(), [](bool b) { return b; });
}

}  // namespace outdeg1
