#pragma once

#include "pcov/graph.hpp"

#include <vector>

namespace pcov {

struct KnapsackItem {
    Rational profit{0};
    Rational cost{0};

    bool operator==(const KnapsackItem& o) const {
        return profit == o.profit && cost == o.cost;
    }
};

/// Knapsack decision input: does some item subset reach profit target P
/// within budget C?
struct KnapsackInstance {
    std::vector<KnapsackItem> items;
    Rational profit_target{0}; // P
    Rational budget{0};        // C

    bool operator==(const KnapsackInstance& o) const {
        return items == o.items && profit_target == o.profit_target && budget == o.budget;
    }
};

void validate_knapsack(const KnapsackInstance& k);

/// Prize-collecting partition edge cover decision instance: pick edges of
/// total cost <= budget so each vertex group's covered profit reaches its
/// threshold.
struct WppecInstance {
    WeightedGraph graph; // edge weights are costs
    std::vector<Rational> vertex_profits;
    std::vector<int> vertex_groups;
    std::vector<Rational> thresholds;
    Rational budget{0};

    int group_count() const { return static_cast<int>(thresholds.size()); }

    bool operator==(const WppecInstance& o) const {
        return graph == o.graph && vertex_profits == o.vertex_profits &&
               vertex_groups == o.vertex_groups && thresholds == o.thresholds &&
               budget == o.budget;
    }
};

void validate_wppec(const WppecInstance& w);

/// N disjoint edges (b_i, r_i) of cost c_i; blue vertices carry the item
/// profits with threshold P, red vertices carry zero with threshold 0.
/// The decision answers coincide with the knapsack instance's.
WppecInstance knapsack_to_wppec(const KnapsackInstance& k);

/// Exhaustive decision procedures; size caps enforced with TooLarge.
bool decide_wppec_bruteforce(const WppecInstance& w); // |E| <= 20
bool decide_knapsack_bruteforce(const KnapsackInstance& k); // N <= 20

} // namespace pcov
