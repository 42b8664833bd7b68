#pragma once

#include "pcov/graph.hpp"

#include <vector>

namespace pcov {

/// Weighted Partition Edge Cover input: pick a minimum-cost edge set so
/// that at least requirements[g] vertices of each vertex group are covered
/// (incident to a picked edge). Edge costs are the graph edge weights.
struct PecInstance {
    WeightedGraph graph;
    std::vector<int> vertex_groups;  // per vertex, ids in 0..omega-1
    std::vector<long long> requirements; // per group, non-negative

    int group_count() const { return static_cast<int>(requirements.size()); }

    bool operator==(const PecInstance& o) const {
        return graph == o.graph && vertex_groups == o.vertex_groups &&
               requirements == o.requirements;
    }
};

struct EdgeSolution {
    std::vector<int> selected; // sorted edge ids
    Rational total_cost{0};
    std::vector<long long> per_group_covered;
    bool feasible = false;
};

void validate_pec(const PecInstance& instance);

/// Evaluates an edge set: total cost, distinct covered vertices per group
/// and the feasibility flag. Throws ValidationError(UnknownEdge) on
/// out-of-range edge ids.
EdgeSolution evaluate_edge_solution(const PecInstance& instance,
                                    const std::vector<int>& selected);

} // namespace pcov
