#pragma once

#include "pcov/matching.hpp"
#include "pcov/pec.hpp"
#include "pcov/pvc.hpp"

#include <optional>
#include <vector>

namespace pcov {

/// Weighted Budgeted Matching input: minimum-cost matching that matches at
/// least requirements[g] vertices from each vertex group.
struct WbmInstance {
    WeightedGraph graph;            // edge weights are costs
    std::vector<int> vertex_groups; // per vertex
    std::vector<long long> requirements;

    int group_count() const { return static_cast<int>(requirements.size()); }
};

/// Throws ValidationError unless 0 <= r_g <= |S_g| for every group.
void validate_wbm(const WbmInstance& instance);

namespace oracle {

/// Exhaustive 2^n reference solver; n <= 20 enforced (TooLarge).
/// Ties: lexicographically smallest vertex set. nullopt = infeasible.
std::optional<VertexSolution> brute_force_pvc(const PvcInstance& instance);

/// Exhaustive 2^m reference solver; m <= 20 enforced.
std::optional<EdgeSolution> brute_force_pec(const PecInstance& instance);

/// Enumerates all matchings; minimum-cost one meeting every group
/// requirement. m <= 20 enforced.
std::optional<Matching> brute_force_wbm(const WbmInstance& instance);

} // namespace oracle

} // namespace pcov
