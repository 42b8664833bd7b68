#pragma once

// Shared fixture builders for the test binaries.

#include "pcov/hardness.hpp"
#include "pcov/io.hpp"
#include "pcov/pec.hpp"
#include "pcov/pvc.hpp"

#include <vector>

namespace pcov::testing {

struct PvcEdgeSpec {
    int u, v;
    long long profit;
    int group;
};

inline PvcInstance make_pvc(int n, const std::vector<long long>& weights,
                            const std::vector<PvcEdgeSpec>& edges,
                            const std::vector<long long>& thresholds) {
    PvcInstance inst;
    inst.graph.n = n;
    for (const auto& e : edges) {
        inst.graph.edges.push_back({e.u, e.v, Rational(1)});
        inst.edge_profits.emplace_back(e.profit);
        inst.edge_groups.push_back(e.group);
    }
    for (long long w : weights) inst.vertex_weights.emplace_back(w);
    for (long long t : thresholds) inst.thresholds.emplace_back(t);
    return inst;
}

struct PecEdgeSpec {
    int u, v;
    long long cost;
};

inline PecInstance make_pec(int n, const std::vector<PecEdgeSpec>& edges,
                            const std::vector<int>& vertex_groups,
                            const std::vector<long long>& requirements) {
    PecInstance inst;
    inst.graph.n = n;
    for (const auto& e : edges)
        inst.graph.edges.push_back({e.u, e.v, Rational(e.cost)});
    inst.vertex_groups = vertex_groups;
    inst.requirements = requirements;
    return inst;
}

// The worked example from the exact edge-cover write-up: three groups
// {b1,b2,b3}, {g1,g2}, {r1} with one unit required from each.
// Vertex ids: 0=b1 1=b2 2=b3 3=g1 4=g2 5=r1.
inline PecInstance worked_example_pec() {
    return make_pec(6,
                    {{0, 3, 11}, {3, 1, 2}, {1, 2, 5}, {3, 4, 7}, {2, 5, 6}, {1, 5, 3}},
                    {0, 0, 0, 1, 1, 2}, {1, 1, 1});
}

// Every labeled graph on n vertices as an edge subset of K_n, edge weights
// cycling through `weights` by within-subset index.
inline std::vector<WeightedGraph> all_graphs(int n, const std::vector<long long>& weights) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    const int m = static_cast<int>(pairs.size());
    std::vector<WeightedGraph> out;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        WeightedGraph g;
        g.n = n;
        int k = 0;
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1) {
                g.edges.push_back({pairs[i].first, pairs[i].second,
                                   Rational(weights[k % weights.size()])});
                ++k;
            }
        out.push_back(std::move(g));
    }
    return out;
}

} // namespace pcov::testing
