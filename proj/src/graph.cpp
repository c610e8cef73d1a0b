#include "outdeg1/graph.hpp"

#include <algorithm>
#include <numeric>

namespace outdeg1 {

OutdegreeGraph OutdegreeGraph::from_segment(const Configuration& config,
                                            const SegmentSolution& sol) {
    OutdegreeGraph g;
    g.out.resize(sol.size());
    g.germs.reserve(config.size());
    for (const auto& p : config.points) g.germs.push_back(p.germ);
    for (size_t i = 0; i < sol.size(); ++i) g.out[i] = sol.entries[i].target;
    return g;
}

OutdegreeGraph OutdegreeGraph::from_navigation(const Configuration& config,
                                               const NavigationSolution& sol) {
    OutdegreeGraph g;
    g.out.resize(sol.size());
    g.germs.reserve(config.size());
    for (const auto& p : config.points) g.germs.push_back(p.germ);
    for (size_t i = 0; i < sol.size(); ++i) g.out[i] = sol.entries[i].target;
    return g;
}

ForwardResult forward(const OutdegreeGraph& g, int v) {
    ForwardResult res;
    std::vector<int> pos(g.size(), -1);  // index in path, -1 if unvisited
    int cur = v;
    while (true) {
        pos[cur] = static_cast<int>(res.path.size());
        res.path.push_back(cur);
        if (!g.out[cur].has_value()) return res;  // censored terminal
        const int nxt = *g.out[cur];
        if (pos[nxt] >= 0) {
            res.loop.assign(res.path.begin() + pos[nxt], res.path.end());
            return res;
        }
        cur = nxt;
    }
}

std::vector<int> backward(const OutdegreeGraph& g, int v) {
    std::vector<std::vector<int>> rev(g.size());
    for (int i = 0; i < g.size(); ++i) {
        if (g.out[i].has_value()) rev[*g.out[i]].push_back(i);
    }
    std::vector<bool> seen(g.size(), false);
    std::vector<int> stack{v}, out;
    seen[v] = true;
    while (!stack.empty()) {
        const int cur = stack.back();
        stack.pop_back();
        out.push_back(cur);
        for (int w : rev[cur]) {
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};
}  // namespace

ClusterDecomposition clusters(const OutdegreeGraph& g) {
    const int n = g.size();
    ClusterDecomposition dec;
    dec.component_of.assign(n, -1);

    UnionFind uf(n);
    for (int v = 0; v < n; ++v) {
        if (g.out[v].has_value()) uf.unite(v, *g.out[v]);
    }

    // Compress component ids in order of smallest member.
    for (int v = 0; v < n; ++v) {
        const int root = uf.find(v);
        if (dec.component_of[root] < 0) {
            dec.component_of[root] = static_cast<int>(dec.components.size());
            dec.components.emplace_back();
        }
        const int c = dec.component_of[root];
        dec.component_of[v] = c;
        dec.components[c].vertices.push_back(v);
    }

    for (auto& comp : dec.components) {
        bool censored = false;
        for (int v : comp.vertices) censored |= !g.out[v].has_value();
        if (censored) continue;  // wholly undetermined

        const auto fr = forward(g, comp.vertices.front());
        comp.loop = fr.loop;
        // Canonical cycle start: smallest id, orientation preserved.
        const auto it = std::min_element(comp.loop.begin(), comp.loop.end());
        std::rotate(comp.loop.begin(), it, comp.loop.end());
        Point2 sum;
        for (int v : comp.loop) sum = sum + g.germs[v];
        comp.loop_center = sum * (1.0 / comp.loop.size());
    }
    return dec;
}

}  // namespace outdeg1
