#pragma once

#include "pcov/graph.hpp"

#include <vector>

namespace pcov {

/// Weighted Prize-Collecting Partition Vertex Cover input: pick a
/// minimum-weight vertex set so that, in every edge group g, the total
/// profit of covered edges reaches thresholds[g]. The graph's own edge
/// weight field is unused here; profits live in edge_profits.
struct PvcInstance {
    WeightedGraph graph;
    std::vector<Rational> vertex_weights;
    std::vector<Rational> edge_profits; // parallel to graph.edges
    std::vector<int> edge_groups;       // parallel to graph.edges, ids in 0..omega-1
    std::vector<Rational> thresholds;   // one per group

    int group_count() const { return static_cast<int>(thresholds.size()); }

    bool operator==(const PvcInstance& o) const {
        return graph == o.graph && vertex_weights == o.vertex_weights &&
               edge_profits == o.edge_profits && edge_groups == o.edge_groups &&
               thresholds == o.thresholds;
    }
};

struct VertexSolution {
    std::vector<int> selected; // sorted vertex ids
    Rational total_weight{0};
    std::vector<Rational> per_group_profit;
    bool feasible = false;
};

/// Throws ValidationError (SelfLoop, DuplicateEdge, NegativeWeight,
/// MissingGroup, EmptyGroupPartition) naming the first violation.
void validate_pvc(const PvcInstance& instance);

/// Evaluates a vertex set: total weight, per-group covered profit and the
/// feasibility flag. Pure; throws ValidationError(UnknownVertex) on
/// out-of-range ids.
VertexSolution evaluate_vertex_solution(const PvcInstance& instance,
                                        const std::vector<int>& selected);

/// An instance is feasible iff selecting every vertex meets all thresholds.
bool pvc_feasible(const PvcInstance& instance);

} // namespace pcov
