#pragma once

#include "pcov/rational.hpp"

#include <vector>

namespace pcov {

struct Edge {
    int u = 0;
    int v = 0;
    Rational weight{0};

    bool operator==(const Edge& o) const {
        return u == o.u && v == o.v && weight == o.weight;
    }
};

/// Undirected simple graph with non-negative rational edge weights.
/// Vertices are dense ids 0..n-1.
struct WeightedGraph {
    int n = 0;
    std::vector<Edge> edges;

    bool operator==(const WeightedGraph& o) const { return n == o.n && edges == o.edges; }
};

/// Checks the structural invariants: endpoints in range, no self-loops,
/// no duplicate unordered pairs, weights >= 0. Throws ValidationError
/// naming the first violating element.
void validate_graph(const WeightedGraph& g);

/// True iff vertex v has no incident edge.
bool is_isolated(const WeightedGraph& g, int v);

} // namespace pcov
