// outdeg1: seeded, reproducible simulator for Poisson outdegree-one graphs
// (line-segment stopping model and cone navigation model).
//
// Exit codes: 0 success, 1 loopcheck pass fraction below threshold,
// 2 configuration / input error, 3 solver degeneracy under --strict.

#include <atomic>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "outdeg1/assumptions.hpp"
#include "outdeg1/io.hpp"
#include "outdeg1/stats.hpp"
#include "outdeg1/svg.hpp"

namespace {

using namespace outdeg1;

struct SimulateArgs {
    std::string model{"segment"};
    double intensity{1.0};
    double side{10.0};
    double epsilon{0.0};
    uint64_t seed{0};
    int replicates{1};
    int threads{1};
    bool strict{false};
    std::string out;
    std::string solutions_prefix;
    std::string configs_prefix;
    std::string clusters_prefix;
};

Model parse_model(const std::string& name, double epsilon) {
    if (name == "segment") return Model::kSegment;
    if (name == "navigation") {
        if (!(epsilon > 0.0 && epsilon <= kPi)) {
            throw std::invalid_argument("navigation model requires --epsilon in (0, pi]");
        }
        return Model::kNavigation;
    }
    throw std::invalid_argument("unknown model: " + name);
}

int cmd_simulate(const SimulateArgs& args) {
    const Model model = parse_model(args.model, args.epsilon);
    std::vector<RunSummary> rows(args.replicates);
    std::vector<bool> degenerate(args.replicates, false);

    std::atomic<int> next{0};
    auto worker = [&]() {
        while (true) {
            const int r = next.fetch_add(1);
            if (r >= args.replicates) break;
            const RngSpec rng{args.seed, static_cast<uint64_t>(r)};
            const auto res =
                run_replicate(model, args.epsilon, args.intensity, args.side, rng, r);
            rows[r] = res.summary;
            degenerate[r] = res.degenerate;
            if (!args.configs_prefix.empty()) {
                io::save_text(args.configs_prefix + std::to_string(r) + ".json",
                              io::write_config(res.config));
            }
            if (!args.solutions_prefix.empty()) {
                const std::string path = args.solutions_prefix + std::to_string(r) + ".csv";
                io::save_text(path, model == Model::kSegment
                                        ? io::write_segment_csv(res.segment)
                                        : io::write_navigation_csv(res.navigation));
            }
            if (!args.clusters_prefix.empty()) {
                io::save_text(args.clusters_prefix + std::to_string(r) + ".csv",
                              io::write_cluster_csv(res.decomposition));
            }
        }
    };

    const int nthreads = std::max(1, std::min(args.threads, args.replicates));
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    io::save_text(args.out, io::write_run_summary_csv(rows));
    if (args.strict) {
        for (bool d : degenerate) {
            if (d) {
                std::cerr << "solver degeneracy flagged under --strict\n";
                return 3;
            }
        }
    }
    return 0;
}

struct LoopCheckArgs {
    std::string model{"segment"};
    double intensity{1.0};
    double side{20.0};
    double epsilon{0.0};
    uint64_t seed{0};
    int replicates{10};
    int anchors{100};
    std::string out;
};

int cmd_loopcheck(const LoopCheckArgs& args) {
    const Model model = parse_model(args.model, args.epsilon);
    io::LoopCheckAggregate agg;
    agg.model = args.model;
    agg.anchors_requested = args.anchors;

    for (int r = 0; r < args.replicates && agg.anchors_checked < args.anchors; ++r) {
        const RngSpec rng{args.seed, static_cast<uint64_t>(r)};
        const auto res = run_replicate(model, args.epsilon, args.intensity, args.side, rng, r);

        std::vector<int> determined;
        for (int v = 0; v < static_cast<int>(res.graph.size()); ++v) {
            if (res.graph.out[v].has_value()) determined.push_back(v);
        }
        if (determined.empty()) continue;

        CounterRng pick(rng.substream(0x10c4));
        const int remaining_reps = args.replicates - r;
        const int quota =
            (args.anchors - agg.anchors_checked + remaining_reps - 1) / remaining_reps;
        for (int q = 0; q < quota && agg.anchors_checked < args.anchors; ++q) {
            const int x = determined[pick.below(determined.size())];
            ++agg.anchors_checked;
            try {
                const auto wit =
                    model == Model::kSegment
                        ? construct_segment_loop_break(res.config, res.segment, x)
                        : construct_navigation_loop_break(res.config, res.navigation, x,
                                                          args.epsilon);
                const auto rep =
                    verify_k_looping(res.config, x, wit.added, model, args.epsilon);
                agg.pass_i += rep.cond_i;
                agg.pass_ii += rep.cond_ii;
                agg.pass_iii += rep.cond_iii;
                agg.pass_backward += rep.backward_preserved;
                agg.pass_all += rep.all();
                agg.degenerate += rep.degenerate;
            } catch (const DegeneracyError&) {
                ++agg.degenerate;  // flagged, counted as a failure
            }
        }
    }

    const std::string report = io::write_loopcheck_report(agg, args.seed);
    if (args.out.empty()) {
        std::cout << report;
    } else {
        io::save_text(args.out, report);
    }
    return agg.pass_fraction() < 0.99 ? 1 : 0;
}

struct ShieldArgs {
    double epsilon{0.3};
    double intensity{10.0};
    int trials{100};
    int resolution{24};
    uint64_t seed{0};
    std::string out;
};

int cmd_shield(const ShieldArgs& args) {
    const auto rep = estimate_p_epsilon(args.epsilon, args.intensity, args.trials,
                                        RngSpec{args.seed, 0}, args.resolution);
    const std::string doc = io::write_shield_report(rep, args.seed, args.resolution);
    if (args.out.empty()) {
        std::cout << doc;
    } else {
        io::save_text(args.out, doc);
    }
    return 0;
}

struct RenderArgs {
    std::string input;
    std::string solution;
    std::string out;
};

int cmd_render(const RenderArgs& args) {
    const auto config = io::read_config(io::load_text(args.input));

    SegmentSolution seg;
    NavigationSolution nav;
    const SegmentSolution* seg_p = nullptr;
    const NavigationSolution* nav_p = nullptr;
    if (!args.solution.empty()) {
        const std::string text = io::load_text(args.solution);
        const auto header = text.substr(0, text.find('\n'));
        if (header.find("impact_x") != std::string::npos) {
            seg = io::read_segment_csv(text);
            if (seg.size() != config.size()) {
                throw std::invalid_argument("solution rows do not match configuration");
            }
            seg_p = &seg;
        } else {
            nav = io::read_navigation_csv(text);
            if (nav.size() != config.size()) {
                throw std::invalid_argument("solution rows do not match configuration");
            }
            nav_p = &nav;
        }
    }
    io::save_text(args.out, svg::render(config, seg_p, nav_p));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Poisson outdegree-one graph simulator (line-segment and navigation models)"};
    app.require_subcommand(1);

    SimulateArgs sim;
    auto* simulate = app.add_subcommand("simulate", "Sample, solve and summarize replicates");
    simulate->add_option("--model", sim.model, "segment | navigation");
    simulate->add_option("--intensity", sim.intensity, "PPP intensity")->check(CLI::PositiveNumber);
    simulate->add_option("--side", sim.side, "window side length")->check(CLI::PositiveNumber);
    simulate->add_option("--epsilon", sim.epsilon, "cone half-angle (navigation)");
    simulate->add_option("--seed", sim.seed, "master seed");
    simulate->add_option("--replicates", sim.replicates, "replicate count")
        ->check(CLI::PositiveNumber);
    simulate->add_option("--threads", sim.threads, "worker threads (replicates only)")
        ->check(CLI::PositiveNumber);
    simulate->add_option("--out", sim.out, "RunSummary CSV path")->required();
    simulate->add_option("--solutions", sim.solutions_prefix, "per-replicate solution CSV prefix");
    simulate->add_option("--configs", sim.configs_prefix, "per-replicate config JSON prefix");
    simulate->add_option("--clusters", sim.clusters_prefix, "per-replicate cluster CSV prefix");
    simulate->add_flag("--strict", sim.strict, "exit 3 on any solver degeneracy");

    LoopCheckArgs lc;
    auto* loopcheck =
        app.add_subcommand("loopcheck", "Construct and verify loop-break witnesses");
    loopcheck->add_option("--model", lc.model, "segment | navigation");
    loopcheck->add_option("--intensity", lc.intensity)->check(CLI::PositiveNumber);
    loopcheck->add_option("--side", lc.side)->check(CLI::PositiveNumber);
    loopcheck->add_option("--epsilon", lc.epsilon, "cone half-angle (navigation)");
    loopcheck->add_option("--seed", lc.seed);
    loopcheck->add_option("--replicates", lc.replicates)->check(CLI::PositiveNumber);
    loopcheck->add_option("--anchors", lc.anchors, "determined anchors to sample")
        ->check(CLI::NonNegativeNumber);
    loopcheck->add_option("--out", lc.out, "report path (stdout when omitted)");

    ShieldArgs sh;
    auto* shield = app.add_subcommand("shield", "Estimate the shield-hexagon probability");
    shield->add_option("--epsilon", sh.epsilon, "core scale in (0,1)")->required();
    shield->add_option("--intensity", sh.intensity)->required()->check(CLI::PositiveNumber);
    shield->add_option("--trials", sh.trials)->required()->check(CLI::PositiveNumber);
    shield->add_option("--seed", sh.seed);
    shield->add_option("--resolution", sh.resolution, "chord discretization")
        ->check(CLI::Range(8, 4096));
    shield->add_option("--out", sh.out, "report path (stdout when omitted)");

    RenderArgs rd;
    auto* render = app.add_subcommand("render", "Draw a configuration / solution as SVG");
    render->add_option("--input", rd.input, "config JSON document")->required();
    render->add_option("--solution", rd.solution, "solution CSV (segment or navigation)");
    render->add_option("--out", rd.out, "output SVG path")->required();

    try {
        app.parse(argc, argv);
        if (simulate->parsed()) return cmd_simulate(sim);
        if (loopcheck->parsed()) return cmd_loopcheck(lc);
        if (shield->parsed()) return cmd_shield(sh);
        if (render->parsed()) return cmd_render(rd);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    } catch (const DegeneracyError& e) {
        std::cerr << "degeneracy: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
