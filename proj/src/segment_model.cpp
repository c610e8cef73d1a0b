#include "outdeg1/segment_model.hpp"

#include <algorithm>
#include <cmath>

namespace outdeg1 {

namespace {

struct Candidate {
    double a{kInf};
    double b{0.0};
    int j{-1};
    Point2 p;
    bool tie{false};
};

// Best currently-valid stopping event for point i against the given pool.
// `stop_len` holds the working estimates; `cap` (if finite) discards events
// at or beyond it. Ties on a are broken toward the smaller j and flagged.
template <typename Pool>
Candidate best_event(int i, const Pool& pool, const std::vector<Ray>& rays,
                     const std::vector<double>& stop_len, double cap,
                     std::vector<bool>& collinear_flag) {
    Candidate best;
    for (int j : pool) {
        if (j == i) continue;
        const auto hit = ray_intersection(rays[i], rays[j]);
        if (hit.kind == RayIntersection::Kind::kCollinear) {
            collinear_flag[i] = true;
            collinear_flag[j] = true;
            continue;
        }
        if (!hit) continue;
        if (hit.b > hit.a) continue;          // j's tip would arrive too late
        if (hit.b > stop_len[j]) continue;    // j never grows that far
        if (hit.a >= cap) continue;
        if (hit.a < best.a) {
            best = {hit.a, hit.b, j, hit.point, false};
        } else if (hit.a == best.a && best.j >= 0) {
            best.tie = true;
            if (j < best.j) {
                best.j = j;
                best.b = hit.b;
                best.p = hit.point;
            }
        }
    }
    return best;
}

struct AllOthers {
    int n;
    struct It {
        int v;
        int operator*() const { return v; }
        It& operator++() { ++v; return *this; }
        bool operator!=(const It& o) const { return v != o.v; }
    };
    It begin() const { return {0}; }
    It end() const { return {n}; }
};

std::vector<Ray> make_rays(const std::vector<MarkedPoint>& pts) {
    std::vector<Ray> rays;
    rays.reserve(pts.size());
    for (const auto& p : pts) rays.push_back({p.germ, p.dir()});
    return rays;
}

}  // namespace

SegmentSolution solve_fixed_point(const Configuration& config) {
    const int n = static_cast<int>(config.size());
    SegmentSolution sol;
    sol.entries.resize(n);
    if (n == 0) return sol;

    const auto rays = make_rays(config.points);
    std::vector<double> stop_len(n, kInf);
    std::vector<int> target(n, -1);
    std::vector<Point2> impact(n);
    std::vector<bool> flagged(n, false);

    bool converged = false;
    for (int sweep = 0; sweep <= n + 1 && !converged; ++sweep) {
        bool changed = false;
        for (int i = 0; i < n; ++i) {
            const auto best = best_event(i, AllOthers{n}, rays, stop_len, kInf, flagged);
            const double new_len = best.j >= 0 ? best.a : kInf;
            if (new_len != stop_len[i] || best.j != target[i]) {
                stop_len[i] = new_len;
                target[i] = best.j;
                impact[i] = best.p;
                changed = true;
            }
            if (best.tie || (best.j >= 0 && best.b == best.a)) flagged[i] = true;
            if (best.j >= 0 && best.b == best.a) flagged[best.j] = true;
        }
        converged = !changed;
    }
    if (!converged) {
        throw DegeneracyError("solve_fixed_point: no fixed point within sweep cap");
    }

    for (int i = 0; i < n; ++i) {
        auto& e = sol.entries[i];
        e.degenerate = flagged[i];
        if (target[i] >= 0) {
            e.target = target[i];
            e.impact = impact[i];
            e.stop_len = stop_len[i];
        }
    }
    return sol;
}

namespace {

struct Event {
    double a;  // event time == hitter's stop length
    double b;  // arc length on the target's ray
    int i;     // hitter (the point that stops)
    int j;     // target (the stopping segment)
    Point2 p;

    bool operator<(const Event& o) const {
        if (a != o.a) return a < o.a;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
};

// Uniform bucket grid over the window.
class GermGrid {
  public:
    GermGrid(const Configuration& config, double cell)
        : lo_(config.window.lo), cell_(cell) {
        nx_ = std::max(1, static_cast<int>(std::ceil(config.window.width() / cell_)));
        ny_ = std::max(1, static_cast<int>(std::ceil(config.window.height() / cell_)));
        buckets_.resize(static_cast<size_t>(nx_) * ny_);
        for (const auto& p : config.points) {
            buckets_[index_of(p.germ)].push_back(p.id);
        }
    }

    // Visits every point whose germ could lie within `radius` of q.
    template <typename F>
    void for_near(const Point2& q, double radius, F&& fn) const {
        const int cx = clampi(static_cast<int>(std::floor((q.x - lo_.x) / cell_)), nx_);
        const int cy = clampi(static_cast<int>(std::floor((q.y - lo_.y) / cell_)), ny_);
        const int r = static_cast<int>(std::ceil(radius / cell_)) + 1;
        for (int gx = std::max(0, cx - r); gx <= std::min(nx_ - 1, cx + r); ++gx) {
            for (int gy = std::max(0, cy - r); gy <= std::min(ny_ - 1, cy + r); ++gy) {
                for (int id : buckets_[static_cast<size_t>(gx) * ny_ + gy]) fn(id);
            }
        }
    }

  private:
    static int clampi(int v, int n) { return std::clamp(v, 0, n - 1); }
    size_t index_of(const Point2& p) const {
        const int gx = clampi(static_cast<int>(std::floor((p.x - lo_.x) / cell_)), nx_);
        const int gy = clampi(static_cast<int>(std::floor((p.y - lo_.y) / cell_)), ny_);
        return static_cast<size_t>(gx) * ny_ + gy;
    }

    Point2 lo_;
    double cell_;
    int nx_, ny_;
    std::vector<std::vector<int>> buckets_;
};

struct ReplayState {
    std::vector<double> stop_len;
    std::vector<int> target;
    std::vector<Point2> impact;
    std::vector<bool> flagged;
};

// Full replay of the accumulated event list in time order.
void replay(const std::vector<Event>& events, int n, ReplayState& st) {
    st.stop_len.assign(n, kInf);
    st.target.assign(n, -1);
    st.impact.assign(n, Point2{});
    for (const auto& ev : events) {
        const bool target_covers = st.target[ev.j] < 0 || st.stop_len[ev.j] >= ev.b;
        if (st.target[ev.i] >= 0) {
            // Already stopped; a distinct valid event at the exact same time
            // is a measure-zero tie worth flagging.
            if (ev.a == st.stop_len[ev.i] && ev.j != st.target[ev.i] && target_covers) {
                st.flagged[ev.i] = true;
            }
            continue;
        }
        if (!target_covers) continue;
        st.stop_len[ev.i] = ev.a;
        st.target[ev.i] = ev.j;
        st.impact[ev.i] = ev.p;
        if (ev.a == ev.b) {  // simultaneous tip arrival: mutual stop
            st.flagged[ev.i] = true;
            st.flagged[ev.j] = true;
        }
    }
}

}  // namespace

SegmentSolution solve_event_driven(const Configuration& config) {
    const int n = static_cast<int>(config.size());
    SegmentSolution sol;
    sol.entries.resize(n);
    if (n < 2) return sol;

    const auto rays = make_rays(config.points);
    const double diam = config.window.diameter();
    const double area = config.window.area();
    const double lambda = n / area;

    // First distance band; small configurations take one full-window round.
    double band_hi = n <= 256 ? 2.0 * diam
                              : std::min(std::max(4.0 / std::sqrt(lambda), 1e-6), 2.0 * diam);
    const double longest = std::max(config.window.width(), config.window.height());
    const double cell = std::clamp(band_hi, longest / 2048.0, longest);
    GermGrid grid(config, cell);

    std::vector<Event> events;
    std::vector<bool> active(n, true);
    ReplayState st;
    st.flagged.assign(n, false);

    double band_lo = 0.0;
    while (true) {
        // Collect candidate events for pairs whose distance falls in the
        // current band and that involve an active point.
        for (int i = 0; i < n; ++i) {
            if (!active[i]) continue;
            grid.for_near(config.points[i].germ, band_hi, [&](int j) {
                if (j == i || (active[j] && j < i)) return;
                const double d = dist(config.points[i].germ, config.points[j].germ);
                if (d <= band_lo || d > band_hi) return;
                const auto hit = ray_intersection(rays[i], rays[j]);
                if (hit.kind == RayIntersection::Kind::kCollinear) {
                    st.flagged[i] = true;
                    st.flagged[j] = true;
                    return;
                }
                if (!hit) return;
                if (hit.b <= hit.a) events.push_back({hit.a, hit.b, i, j, hit.point});
                if (hit.a <= hit.b) events.push_back({hit.b, hit.a, j, i, hit.point});
            });
        }
        std::sort(events.begin(), events.end());
        replay(events, n, st);

        if (band_hi >= diam) break;  // every pair involving an active point is in
        const double horizon = band_hi / 2.0;
        bool any_active = false;
        for (int i = 0; i < n; ++i) {
            active[i] = !(st.target[i] >= 0 && st.stop_len[i] <= horizon);
            any_active |= active[i];
        }
        if (!any_active) break;
        band_lo = band_hi;
        band_hi = std::min(2.0 * band_hi, diam);
    }

    for (int i = 0; i < n; ++i) {
        auto& e = sol.entries[i];
        e.degenerate = st.flagged[i];
        if (st.target[i] >= 0) {
            e.target = st.target[i];
            e.impact = st.impact[i];
            e.stop_len = st.stop_len[i];
        }
    }
    return sol;
}

namespace {

// sup { r >= 0 : B(germ + r*u, r) inside region }, bisected to 1e-9.
double decision_reach(const Region& region, const Point2& germ, const Point2& u) {
    double hi = region.diameter_bound() / 2.0 + 1.0;
    if (region.ball_inside(germ + u * hi, hi)) return hi;  // bounded regions never reach this
    double lo = 0.0;
    while (hi - lo > 1e-9) {
        const double mid = 0.5 * (lo + hi);
        if (region.ball_inside(germ + u * mid, mid)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

}  // namespace

PartialSegments partial_solve(const Configuration& config, const Region& region) {
    std::vector<int> ids;
    for (const auto& p : config.points) {
        if (region.contains(p.germ)) ids.push_back(p.id);
    }
    const int m = static_cast<int>(ids.size());

    PartialSegments out;
    out.entries.resize(m);
    if (m == 0) return out;

    std::vector<Ray> rays(m);
    std::vector<Point2> dirs(m);
    std::vector<double> reach(m);
    for (int k = 0; k < m; ++k) {
        const auto& p = config.points[ids[k]];
        rays[k] = {p.germ, p.dir()};
        dirs[k] = p.dir().vec();
        reach[k] = decision_reach(region, p.germ, dirs[k]);
    }

    // Capped relaxation: an undecided point is certified to grow at least to
    // its reach, so the cap doubles as the growth bound seen by others.
    std::vector<double> stop_len(reach);
    std::vector<int> target(m, -1);
    std::vector<Point2> impact(m);
    std::vector<bool> flagged(m, false);

    struct Indices {
        int n;
        struct It {
            int v;
            int operator*() const { return v; }
            It& operator++() { ++v; return *this; }
            bool operator!=(const It& o) const { return v != o.v; }
        };
        It begin() const { return {0}; }
        It end() const { return {n}; }
    };

    bool converged = false;
    for (int sweep = 0; sweep <= m + 1 && !converged; ++sweep) {
        bool changed = false;
        for (int i = 0; i < m; ++i) {
            const auto best = best_event(i, Indices{m}, rays, stop_len, reach[i], flagged);
            const double new_len = best.j >= 0 ? best.a : reach[i];
            const int new_target = best.j;
            if (new_len != stop_len[i] || new_target != target[i]) {
                stop_len[i] = new_len;
                target[i] = new_target;
                impact[i] = best.p;
                changed = true;
            }
            if (best.tie) flagged[i] = true;
        }
        converged = !changed;
    }
    if (!converged) {
        throw DegeneracyError("partial_solve: no fixed point within sweep cap");
    }

    for (int k = 0; k < m; ++k) {
        auto& e = out.entries[k];
        e.id = ids[k];
        e.reach = reach[k];
        e.decided = target[k] >= 0 && stop_len[k] < reach[k];
        e.stop_len = stop_len[k];
        if (e.decided) {
            e.target = ids[target[k]];
            e.frontier = impact[k];
        } else {
            e.frontier = rays[k].origin + dirs[k] * reach[k];
        }
    }
    return out;
}

}  // namespace outdeg1
