#pragma once

#include <optional>
#include <vector>

#include "outdeg1/navigation_model.hpp"
#include "outdeg1/segment_model.hpp"

namespace outdeg1 {

/// Functional (outdegree-one) graph: per vertex an optional out-edge,
/// plus germ positions for loop center-of-mass computations. A missing
/// out-edge is a censored vertex (undetermined by the window).
struct OutdegreeGraph {
    std::vector<std::optional<int>> out;
    std::vector<Point2> germs;

    int size() const { return static_cast<int>(out.size()); }

    static OutdegreeGraph from_segment(const Configuration& config,
                                       const SegmentSolution& sol);
    static OutdegreeGraph from_navigation(const Configuration& config,
                                          const NavigationSolution& sol);
};

/// Forward orbit of a vertex: the distinct vertices visited by iterating
/// the out-map. The orbit ends either in a directed cycle or at a censored
/// vertex.
struct ForwardResult {
    std::vector<int> path;  // distinct visited vertices, starting at v
    std::vector<int> loop;  // the cycle, empty iff the walk hit a censored vertex

    bool censored() const { return loop.empty(); }
};

ForwardResult forward(const OutdegreeGraph& g, int v);

/// All vertices whose forward orbit passes through v (v included).
std::vector<int> backward(const OutdegreeGraph& g, int v);

/// Weak-connectivity decomposition. A component is determined iff no vertex
/// in it is censored; a determined component carries its unique loop (size
/// >= 2) and the loop germs' center of mass. Components with any censored
/// forward are wholly undetermined so that window truncation never
/// masquerades as a loop.
struct ClusterDecomposition {
    struct Component {
        std::vector<int> vertices;
        std::vector<int> loop;  // empty iff undetermined
        Point2 loop_center;     // valid iff determined

        bool determined() const { return !loop.empty(); }
        size_t size() const { return vertices.size(); }
    };

    std::vector<int> component_of;  // per vertex
    std::vector<Component> components;

    int determined_count() const {
        int c = 0;
        for (const auto& comp : components) c += comp.determined();
        return c;
    }
};

ClusterDecomposition clusters(const OutdegreeGraph& g);

}  // namespace outdeg1
