#pragma once

#include "pcov/oracle.hpp"
#include "pcov/pec.hpp"

#include <array>
#include <optional>
#include <vector>

namespace pcov {

/// Partition edge cover reduced to budgeted matching: the base graph plus,
/// for each non-isolated vertex, a twin joined by an edge costing the
/// cheapest edge incident to the vertex. Twins form one extra group with
/// requirement zero. Isolated vertices are dropped; a requirement that
/// could only be met by covering one is reported as infeasible up front.
struct PecReduction {
    WbmInstance wbm;
    std::vector<int> wbm_id;        // original vertex -> wbm vertex id, -1 if isolated
    std::vector<int> original_id;   // wbm vertex -> original vertex id (twins too)
    std::vector<int> twin_edge;     // per wbm edge: -1 for original edges, else owner vertex
    std::vector<int> base_edge;     // per wbm edge: original edge id, -1 for twin edges
    std::vector<int> cheapest_edge; // per original vertex: cheapest incident edge id or -1
};

/// Throws ValidationError(IsolatedRequired) when some group requirement
/// exceeds its count of non-isolated vertices.
PecReduction reduce_pec_to_wbm(const PecInstance& instance);

/// Augmented matching graph: auxiliary sets of size |S_g| - r_g joined to
/// their group with weight M; original edges carry 2M - c(e). All weights
/// are exact integers after clearing cost denominators.
struct HGraph {
    long long big_m = 0;     // scaled; > sum of scaled costs
    long long cost_scale = 1; // common denominator cleared from costs
    int base_n = 0;
    int num_vertices = 0;
    std::vector<std::array<long long, 3>> edges; // (u, v, weight)
    std::vector<int> base_edge;                  // per H edge: wbm edge id or -1
};

HGraph build_h_graph(const WbmInstance& wbm);

/// Solves Weighted Budgeted Matching through the H-graph. nullopt when the
/// maximum H-matching weighs at most (n-1)*M, i.e. no feasible matching
/// exists. Otherwise the returned matching satisfies every group
/// requirement at minimum total cost.
std::optional<Matching> solve_wbm(const WbmInstance& wbm);

/// Exact Weighted Partition Edge Cover: reduce to WBM, solve via maximum
/// weight matching, recover the cover. Result is re-verified before return.
std::optional<EdgeSolution> solve_pec(const PecInstance& instance);

} // namespace pcov
