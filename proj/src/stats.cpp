#include "outdeg1/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace outdeg1 {

QCellCounts q_cell_counts(const Configuration& config, const ClusterDecomposition& dec,
                          double core_margin) {
    if (core_margin < 0.0) throw std::invalid_argument("q_cell_counts: negative margin");
    const Window& w = config.window;
    const double lx = w.lo.x + core_margin, hx = w.hi.x - core_margin;
    const double ly = w.lo.y + core_margin, hy = w.hi.y - core_margin;
    if (!(lx < hx && ly < hy)) throw std::invalid_argument("q_cell_counts: empty core");

    // Unit cells [z-1/2, z+1/2)^2 fully inside the core.
    const int zx_lo = static_cast<int>(std::ceil(lx + 0.5));
    const int zx_hi = static_cast<int>(std::floor(hx - 0.5));
    const int zy_lo = static_cast<int>(std::ceil(ly + 0.5));
    const int zy_hi = static_cast<int>(std::floor(hy - 0.5));
    if (zx_lo > zx_hi || zy_lo > zy_hi) {
        throw std::invalid_argument("q_cell_counts: no complete unit cell in core");
    }

    QCellCounts out;
    out.cell_count = (zx_hi - zx_lo + 1) * (zy_hi - zy_lo + 1);
    for (const auto& comp : dec.components) {
        if (!comp.determined()) continue;
        const int zx = static_cast<int>(std::floor(comp.loop_center.x + 0.5));
        const int zy = static_cast<int>(std::floor(comp.loop_center.y + 0.5));
        if (zx < zx_lo || zx > zx_hi || zy < zy_lo || zy > zy_hi) continue;
        out.counts[{zx, zy}] += static_cast<int>(comp.size());
        out.counted_vertices += static_cast<int>(comp.size());
    }
    out.mean = double(out.counted_vertices) / out.cell_count;
    return out;
}

std::map<int, int> cluster_size_distribution(const ClusterDecomposition& dec,
                                             int* undetermined) {
    std::map<int, int> hist;
    int undet = 0;
    for (const auto& comp : dec.components) {
        if (comp.determined()) {
            ++hist[static_cast<int>(comp.size())];
        } else {
            ++undet;
        }
    }
    if (undetermined) *undetermined = undet;
    return hist;
}

ReplicateResult run_replicate(Model model, double epsilon, double intensity, double side,
                              const RngSpec& rng, int replicate_index,
                              double core_margin_frac) {
    ReplicateResult res;
    res.config = sample_ppp(Window{{0.0, 0.0}, {side, side}}, intensity, rng);

    if (model == Model::kSegment) {
        res.segment = solve_event_driven(res.config);
        res.degenerate = res.segment.any_degenerate();
        res.graph = OutdegreeGraph::from_segment(res.config, res.segment);
    } else {
        res.navigation = solve_navigation(res.config, epsilon);
        for (const auto& e : res.navigation.entries) res.degenerate |= e.degenerate;
        res.graph = OutdegreeGraph::from_navigation(res.config, res.navigation);
    }
    res.decomposition = clusters(res.graph);

    auto& s = res.summary;
    s.replicate = replicate_index;
    s.side = side;
    s.intensity = intensity;
    s.master_seed = rng.master_seed;
    s.stream = rng.stream;
    s.n_points = static_cast<int>(res.config.size());
    for (const auto& o : res.graph.out) s.n_censored += !o.has_value();
    s.n_components = static_cast<int>(res.decomposition.components.size());
    s.n_determined = res.decomposition.determined_count();

    long total_det = 0;
    for (const auto& comp : res.decomposition.components) {
        if (!comp.determined()) continue;
        s.max_cluster = std::max(s.max_cluster, static_cast<int>(comp.size()));
        total_det += static_cast<long>(comp.size());
        ++s.loop_size_histogram[static_cast<int>(comp.loop.size())];
    }
    s.mean_cluster = s.n_determined > 0 ? double(total_det) / s.n_determined : 0.0;

    const double margin = core_margin_frac * side;
    try {
        s.q0_estimate = q_cell_counts(res.config, res.decomposition, margin).mean;
    } catch (const std::invalid_argument&) {
        s.q0_estimate = 0.0;  // window too small for a complete core cell
    }
    return res;
}

std::vector<PercolationPoint> percolation_curve(Model model, double epsilon, double intensity,
                                                const std::vector<double>& sides,
                                                int replicates, const RngSpec& rng) {
    for (size_t i = 1; i < sides.size(); ++i) {
        if (!(sides[i] > sides[i - 1])) {
            throw std::invalid_argument("percolation_curve: sides must increase");
        }
    }
    std::vector<PercolationPoint> curve;
    for (size_t si = 0; si < sides.size(); ++si) {
        const double side = sides[si];
        double sum_largest = 0.0, sum_censored = 0.0;
        for (int rep = 0; rep < replicates; ++rep) {
            const auto rng_rep = rng.substream(si * 1000003ULL + static_cast<uint64_t>(rep));
            const auto res = run_replicate(model, epsilon, intensity, side, rng_rep, rep);

            const double margin = 0.2 * side;
            const Window core{{margin, margin}, {side - margin, side - margin}};
            int core_points = 0;
            for (const auto& p : res.config.points) core_points += core.contains(p.germ);

            // Core share of the largest determined cluster, bounded in [0,1].
            std::vector<int> core_size(res.decomposition.components.size(), 0);
            for (const auto& p : res.config.points) {
                if (!core.contains(p.germ)) continue;
                const int c = res.decomposition.component_of[p.id];
                if (res.decomposition.components[c].determined()) ++core_size[c];
            }
            const int largest = core_size.empty()
                                    ? 0
                                    : *std::max_element(core_size.begin(), core_size.end());
            sum_largest += core_points > 0 ? double(largest) / core_points : 0.0;
            sum_censored += res.summary.n_points > 0
                                ? double(res.summary.n_censored) / res.summary.n_points
                                : 0.0;
        }
        curve.push_back({side, sum_largest / replicates, sum_censored / replicates});
    }
    return curve;
}

}  // namespace outdeg1
