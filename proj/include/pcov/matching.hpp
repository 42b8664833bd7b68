#pragma once

#include "pcov/graph.hpp"

#include <array>
#include <vector>

namespace pcov {

struct Matching {
    std::vector<int> edges;  // selected edge ids, sorted
    Rational weight{0};
    std::vector<int> mate;   // per vertex: partner id or -1
};

/// Exact maximum-weight matching on a general graph, primal-dual blossom
/// algorithm, O(n^3). Not restricted to maximum cardinality: the empty
/// matching is returned when all weights are zero. Rational weights are
/// scaled to a common denominator; all internal arithmetic is integral.
Matching max_weight_matching(const WeightedGraph& g);

/// Integer-weight core used directly by the edge-cover reduction.
/// Returns the mate vector (partner vertex id or -1).
std::vector<int> max_weight_matching_int(
    int n, const std::vector<std::array<long long, 3>>& edges);

/// Exhaustive oracle over all matchings; |E| <= 25 enforced (TooLarge).
/// Ties broken toward the lexicographically smallest edge-id set.
Matching brute_force_max_matching(const WeightedGraph& g);

} // namespace pcov
