#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "outdeg1/graph.hpp"
#include "outdeg1/rng.hpp"

using namespace outdeg1;

namespace {

OutdegreeGraph make_graph(int n, std::vector<std::pair<int, int>> edges) {
    OutdegreeGraph g;
    g.out.resize(n);
    g.germs.resize(n);
    for (int v = 0; v < n; ++v) g.germs[v] = {double(v), 0.0};
    for (auto [v, w] : edges) g.out[v] = w;
    return g;
}

}  // namespace

TEST_CASE("forward walks into a loop") {
    const auto g = make_graph(3, {{0, 1}, {1, 2}, {2, 1}});
    const auto fr = forward(g, 0);
    CHECK(fr.path == std::vector<int>{0, 1, 2});
    CHECK(fr.loop == std::vector<int>{1, 2});
}

TEST_CASE("forward hits a censored vertex") {
    const auto g = make_graph(2, {{0, 1}});
    const auto fr = forward(g, 0);
    CHECK(fr.path == std::vector<int>{0, 1});
    CHECK(fr.censored());
}

TEST_CASE("minimal two-loop") {
    const auto g = make_graph(2, {{0, 1}, {1, 0}});
    const auto fr = forward(g, 0);
    CHECK(fr.loop.size() == 2);
    CHECK(fr.path == std::vector<int>{0, 1});
}

TEST_CASE("backward examples") {
    const auto g = make_graph(3, {{0, 1}, {1, 2}, {2, 1}});
    CHECK(backward(g, 1) == std::vector<int>{0, 1, 2});
    const auto g2 = make_graph(3, {{1, 2}, {2, 1}});
    CHECK(backward(g2, 0) == std::vector<int>{0});
}

TEST_CASE("backward equals the forward-membership definition on random graphs") {
    for (uint64_t s = 0; s < 200; ++s) {
        CounterRng gen(RngSpec{404, s});
        const int n = 2 + static_cast<int>(gen.below(9));
        OutdegreeGraph g;
        g.out.resize(n);
        g.germs.resize(n, {0, 0});
        for (int v = 0; v < n; ++v) {
            if (gen.uniform01() < 0.15) continue;  // censored
            int w;
            do {
                w = static_cast<int>(gen.below(n));
            } while (w == v);
            g.out[v] = w;
        }
        for (int v = 0; v < n; ++v) {
            const auto back = backward(g, v);
            const std::set<int> back_set(back.begin(), back.end());
            for (int w = 0; w < n; ++w) {
                const auto fr = forward(g, w);
                const bool reaches =
                    std::find(fr.path.begin(), fr.path.end(), v) != fr.path.end();
                CHECK(back_set.count(w) == size_t(reaches));
            }
        }
    }
}

TEST_CASE("clusters: two two-loops") {
    const auto g = make_graph(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}});
    const auto dec = clusters(g);
    REQUIRE(dec.components.size() == 2);
    CHECK(dec.components[0].loop.size() == 2);
    CHECK(dec.components[1].loop.size() == 2);
    CHECK(dec.determined_count() == 2);
}

TEST_CASE("clusters: loop plus trees") {
    const auto g = make_graph(4, {{0, 1}, {1, 2}, {2, 1}, {3, 1}});
    const auto dec = clusters(g);
    REQUIRE(dec.components.size() == 1);
    const auto& comp = dec.components[0];
    CHECK(comp.vertices == std::vector<int>{0, 1, 2, 3});
    CHECK(comp.loop == std::vector<int>{1, 2});
    CHECK(comp.loop_center.x == doctest::Approx(1.5));
}

TEST_CASE("clusters: censored component is wholly undetermined") {
    const auto g = make_graph(4, {{0, 1}, {1, 2}, {2, 1}});  // 3 censored, isolated
    auto g2 = g;
    g2.out[3] = std::nullopt;
    const auto dec = clusters(g2);
    REQUIRE(dec.components.size() == 2);
    CHECK(dec.components[dec.component_of[0]].determined());
    CHECK_FALSE(dec.components[dec.component_of[3]].determined());

    // A censored vertex hanging off a looping component undoes the whole
    // component's determination.
    const auto g3 = make_graph(4, {{0, 1}, {1, 0}, {2, 0}});
    auto g4 = g3;
    g4.out[3] = 2;  // 3 -> 2 -> 0 <-> 1 but 2 is... all determined here
    SUBCASE("fully wired component is determined") {
        const auto d = clusters(g4);
        CHECK(d.components[d.component_of[3]].determined());
    }
    SUBCASE("cutting one out-edge undoes it") {
        g4.out[2] = std::nullopt;
        const auto d = clusters(g4);
        CHECK_FALSE(d.components[d.component_of[3]].determined());
    }
}

TEST_CASE("every determined component has exactly one loop reachable from all vertices") {
    for (uint64_t s = 0; s < 100; ++s) {
        CounterRng gen(RngSpec{505, s});
        const int n = 2 + static_cast<int>(gen.below(40));
        OutdegreeGraph g;
        g.out.resize(n);
        g.germs.resize(n, {0, 0});
        for (int v = 0; v < n; ++v) {
            if (gen.uniform01() < 0.1) continue;
            int w;
            do {
                w = static_cast<int>(gen.below(n));
            } while (w == v);
            g.out[v] = w;
        }
        const auto dec = clusters(g);
        for (const auto& comp : dec.components) {
            if (!comp.determined()) continue;
            REQUIRE(comp.loop.size() >= 2);
            const std::set<int> loop_set(comp.loop.begin(), comp.loop.end());
            for (int v : comp.vertices) {
                const auto fr = forward(g, v);
                REQUIRE_FALSE(fr.censored());
                const std::set<int> cyc(fr.loop.begin(), fr.loop.end());
                CHECK(cyc == loop_set);
            }
        }
    }
}

TEST_CASE("component and loop counts are invariant under relabeling") {
    CounterRng gen(RngSpec{606, 1});
    const int n = 30;
    OutdegreeGraph g;
    g.out.resize(n);
    g.germs.resize(n);
    for (int v = 0; v < n; ++v) {
        g.germs[v] = {gen.uniform(0, 10), gen.uniform(0, 10)};
        if (gen.uniform01() < 0.1) continue;
        int w;
        do {
            w = static_cast<int>(gen.below(n));
        } while (w == v);
        g.out[v] = w;
    }
    const auto base = clusters(g);

    // Permute labels by reversal.
    OutdegreeGraph h;
    h.out.resize(n);
    h.germs.resize(n);
    for (int v = 0; v < n; ++v) {
        h.germs[n - 1 - v] = g.germs[v];
        if (g.out[v]) h.out[n - 1 - v] = n - 1 - *g.out[v];
    }
    const auto perm = clusters(h);
    CHECK(base.components.size() == perm.components.size());
    CHECK(base.determined_count() == perm.determined_count());

    std::multiset<size_t> sizes_a, sizes_b;
    for (const auto& c : base.components) sizes_a.insert(c.size());
    for (const auto& c : perm.components) sizes_b.insert(c.size());
    CHECK(sizes_a == sizes_b);
}

TEST_CASE("clusters of the solved pinwheel: one determined component, 3-loop") {
    Configuration c;
    c.window = {{-10, -10}, {10, 10}};
    for (int i = 0; i < 3; ++i) {
        const double ang = i * (kTwoPi / 3.0);
        c.points.push_back({i,
                            {std::cos(ang), std::sin(ang)},
                            Direction::wrapped(ang / kTwoPi + 160.0 / 360.0).u});
    }
    const auto sol = solve_fixed_point(c);
    const auto g = OutdegreeGraph::from_segment(c, sol);
    const auto dec = clusters(g);
    REQUIRE(dec.components.size() == 1);
    CHECK(dec.components[0].determined());
    CHECK(dec.components[0].loop.size() == 3);
    // The loop center of mass of the symmetric pinwheel is the origin.
    CHECK(dec.components[0].loop_center.norm() <= 1e-12);
}
