#include "outdeg1/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace outdeg1::io {

using nlohmann::json;

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string write_config(const Configuration& config) {
    json doc;
    doc["schema"] = "outdeg1-config v1";
    doc["window"] = {{"lo", {config.window.lo.x, config.window.lo.y}},
                     {"hi", {config.window.hi.x, config.window.hi.y}}};
    json pts = json::array();
    for (const auto& p : config.points) {
        pts.push_back({{"id", p.id}, {"x", p.germ.x}, {"y", p.germ.y}, {"mark", p.mark}});
    }
    doc["points"] = std::move(pts);
    return doc.dump(2) + "\n";
}

Configuration read_config(const std::string& text) {
    const json doc = json::parse(text);
    if (doc.value("schema", "") != "outdeg1-config v1") {
        throw std::invalid_argument("config document: unknown schema");
    }
    Configuration config;
    const auto& w = doc.at("window");
    config.window.lo = {w.at("lo").at(0).get<double>(), w.at("lo").at(1).get<double>()};
    config.window.hi = {w.at("hi").at(0).get<double>(), w.at("hi").at(1).get<double>()};
    for (const auto& p : doc.at("points")) {
        config.points.push_back({p.at("id").get<int>(),
                                 {p.at("x").get<double>(), p.at("y").get<double>()},
                                 p.at("mark").get<double>()});
    }
    config.check();
    return config;
}

void save_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << text;
}

std::string load_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string write_segment_csv(const SegmentSolution& sol) {
    std::string out = "id,target_id,impact_x,impact_y,stop_len,degenerate\n";
    for (size_t i = 0; i < sol.size(); ++i) {
        const auto& e = sol.entries[i];
        out += std::to_string(i) + ",";
        if (e.target) {
            out += std::to_string(*e.target) + "," + format_double(e.impact.x) + "," +
                   format_double(e.impact.y) + "," + format_double(e.stop_len);
        } else {
            out += "censored,,,";
        }
        out += e.degenerate ? ",1\n" : ",0\n";
    }
    return out;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

double parse_double(const std::string& s) {
    double v{};
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{}) throw std::invalid_argument("bad numeric field: " + s);
    return v;
}

}  // namespace

SegmentSolution read_segment_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) ||
        split_csv_line(line) !=
            std::vector<std::string>{"id", "target_id", "impact_x", "impact_y", "stop_len",
                                     "degenerate"}) {
        throw std::invalid_argument("segment csv: bad header");
    }
    SegmentSolution sol;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = split_csv_line(line);
        if (f.size() != 6) throw std::invalid_argument("segment csv: bad row");
        SegmentSolution::Entry e;
        if (f[1] != "censored") {
            e.target = static_cast<int>(parse_double(f[1]));
            e.impact = {parse_double(f[2]), parse_double(f[3])};
            e.stop_len = parse_double(f[4]);
        }
        e.degenerate = f[5] == "1";
        sol.entries.push_back(e);
    }
    return sol;
}

std::string write_navigation_csv(const NavigationSolution& sol) {
    std::string out = "id,target_id,dist,degenerate\n";
    for (size_t i = 0; i < sol.size(); ++i) {
        const auto& e = sol.entries[i];
        out += std::to_string(i) + ",";
        if (e.target) {
            out += std::to_string(*e.target) + "," + format_double(e.dist);
        } else {
            out += "censored,";
        }
        out += e.degenerate ? ",1\n" : ",0\n";
    }
    return out;
}

NavigationSolution read_navigation_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) ||
        split_csv_line(line) !=
            std::vector<std::string>{"id", "target_id", "dist", "degenerate"}) {
        throw std::invalid_argument("navigation csv: bad header");
    }
    NavigationSolution sol;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = split_csv_line(line);
        if (f.size() != 4) throw std::invalid_argument("navigation csv: bad row");
        NavigationSolution::Entry e;
        if (f[1] != "censored") {
            e.target = static_cast<int>(parse_double(f[1]));
            e.dist = parse_double(f[2]);
        }
        e.degenerate = f[3] == "1";
        sol.entries.push_back(e);
    }
    return sol;
}

std::string write_cluster_csv(const ClusterDecomposition& dec) {
    std::string out = "vertex,component,in_loop,loop_size\n";
    for (size_t v = 0; v < dec.component_of.size(); ++v) {
        const int c = dec.component_of[v];
        const auto& comp = dec.components[c];
        const bool in_loop =
            std::find(comp.loop.begin(), comp.loop.end(), static_cast<int>(v)) !=
            comp.loop.end();
        out += std::to_string(v) + "," + std::to_string(c) + "," + (in_loop ? "1" : "0") + ",";
        out += comp.determined() ? std::to_string(comp.loop.size()) : "undetermined";
        out += "\n";
    }
    return out;
}

std::string write_run_summary_csv(const std::vector<RunSummary>& rows) {
    std::string out =
        "replicate,side,intensity,n_points,n_censored,n_components,n_determined,"
        "max_cluster,mean_cluster,q0_estimate\n";
    for (const auto& r : rows) {
        out += std::to_string(r.replicate) + "," + format_double(r.side) + "," +
               format_double(r.intensity) + "," + std::to_string(r.n_points) + "," +
               std::to_string(r.n_censored) + "," + std::to_string(r.n_components) + "," +
               std::to_string(r.n_determined) + "," + std::to_string(r.max_cluster) + "," +
               format_double(r.mean_cluster) + "," + format_double(r.q0_estimate) + "\n";
    }
    return out;
}

std::string write_shield_report(const ShieldReport& rep, uint64_t seed,
                                int chord_resolution) {
    json doc;
    doc["schema"] = "outdeg1-shieldreport v1";
    doc["epsilon"] = rep.epsilon;
    doc["intensity"] = rep.intensity;
    doc["trials"] = rep.trials;
    doc["successes"] = rep.successes;
    doc["p_hat"] = rep.p_hat;
    doc["ci95"] = {rep.ci_lo, rep.ci_hi};
    doc["seed"] = seed;
    doc["chord_resolution"] = chord_resolution;
    return doc.dump(2) + "\n";
}

std::string write_loopcheck_report(const LoopCheckAggregate& agg, uint64_t seed) {
    json doc;
    doc["schema"] = "outdeg1-loopreport v1";
    doc["model"] = agg.model;
    doc["anchors_requested"] = agg.anchors_requested;
    doc["anchors_checked"] = agg.anchors_checked;
    doc["pass_i"] = agg.pass_i;
    doc["pass_ii"] = agg.pass_ii;
    doc["pass_iii"] = agg.pass_iii;
    doc["pass_backward"] = agg.pass_backward;
    doc["pass_all"] = agg.pass_all;
    doc["degenerate"] = agg.degenerate;
    doc["pass_fraction"] = agg.pass_fraction();
    doc["seed"] = seed;
    return doc.dump(2) + "\n";
}

}  // namespace outdeg1::io
