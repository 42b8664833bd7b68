#include "pcov/hardness.hpp"

#include "pcov/errors.hpp"

#include <string>

namespace pcov {

void validate_knapsack(const KnapsackInstance& k) {
    if (k.items.empty())
        throw ValidationError(ValidationKind::EmptyGroupPartition, "knapsack has no items");
    for (size_t i = 0; i < k.items.size(); ++i)
        if (k.items[i].profit < Rational(0) || k.items[i].cost < Rational(0))
            throw ValidationError(ValidationKind::NegativeWeight,
                                  "item " + std::to_string(i) + " has a negative value");
    if (k.profit_target < Rational(0) || k.budget < Rational(0))
        throw ValidationError(ValidationKind::NegativeWeight, "negative target or budget");
}

void validate_wppec(const WppecInstance& w) {
    validate_graph(w.graph);
    const size_t n = static_cast<size_t>(w.graph.n);
    if (w.vertex_profits.size() != n || w.vertex_groups.size() != n)
        throw ValidationError(ValidationKind::MissingGroup, "vertex arrays size != n");
    if (w.thresholds.empty())
        throw ValidationError(ValidationKind::EmptyGroupPartition, "no vertex groups declared");
    for (size_t v = 0; v < n; ++v) {
        if (w.vertex_profits[v] < Rational(0))
            throw ValidationError(ValidationKind::NegativeWeight,
                                  "vertex " + std::to_string(v) + " has negative profit");
        if (w.vertex_groups[v] < 0 || w.vertex_groups[v] >= w.group_count())
            throw ValidationError(ValidationKind::MissingGroup,
                                  "vertex " + std::to_string(v) + " has group id out of range");
    }
}

WppecInstance knapsack_to_wppec(const KnapsackInstance& k) {
    validate_knapsack(k);
    const int n = static_cast<int>(k.items.size());
    WppecInstance w;
    w.graph.n = 2 * n; // blue 0..n-1, red n..2n-1
    w.vertex_profits.assign(2 * n, Rational(0));
    w.vertex_groups.assign(2 * n, 1);
    for (int i = 0; i < n; ++i) {
        w.graph.edges.push_back({i, n + i, k.items[i].cost});
        w.vertex_profits[i] = k.items[i].profit;
        w.vertex_groups[i] = 0;
    }
    w.thresholds = {k.profit_target, Rational(0)};
    w.budget = k.budget;
    return w;
}

bool decide_wppec_bruteforce(const WppecInstance& w) {
    const int m = static_cast<int>(w.graph.edges.size());
    if (m > 20) throw TooLarge("decide_wppec_bruteforce: more than 20 edges");
    const int omega = w.group_count();
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        Rational cost{0};
        std::vector<char> covered(w.graph.n, 0);
        for (int e = 0; e < m; ++e) {
            if (!(mask & (1u << e))) continue;
            cost += w.graph.edges[e].weight;
            covered[w.graph.edges[e].u] = 1;
            covered[w.graph.edges[e].v] = 1;
        }
        if (cost > w.budget) continue;
        std::vector<Rational> profit(omega, Rational(0));
        for (int v = 0; v < w.graph.n; ++v)
            if (covered[v]) profit[w.vertex_groups[v]] += w.vertex_profits[v];
        bool ok = true;
        for (int g = 0; g < omega; ++g)
            if (profit[g] < w.thresholds[g]) ok = false;
        if (ok) return true;
    }
    return false;
}

bool decide_knapsack_bruteforce(const KnapsackInstance& k) {
    const int n = static_cast<int>(k.items.size());
    if (n > 20) throw TooLarge("decide_knapsack_bruteforce: more than 20 items");
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        Rational profit{0};
        Rational cost{0};
        for (int i = 0; i < n; ++i) {
            if (!(mask & (1u << i))) continue;
            profit += k.items[i].profit;
            cost += k.items[i].cost;
        }
        if (profit >= k.profit_target && cost <= k.budget) return true;
    }
    return false;
}

} // namespace pcov
