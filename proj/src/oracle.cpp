#include "pcov/oracle.hpp"

#include "pcov/errors.hpp"

#include <algorithm>
#include <functional>

namespace pcov {

void validate_wbm(const WbmInstance& instance) {
    validate_graph(instance.graph);
    if (instance.vertex_groups.size() != static_cast<size_t>(instance.graph.n))
        throw ValidationError(ValidationKind::MissingGroup, "vertex_groups size != n");
    if (instance.requirements.empty())
        throw ValidationError(ValidationKind::EmptyGroupPartition, "no groups declared");
    std::vector<long long> sizes(instance.group_count(), 0);
    for (int v = 0; v < instance.graph.n; ++v) {
        int g = instance.vertex_groups[v];
        if (g < 0 || g >= instance.group_count())
            throw ValidationError(ValidationKind::MissingGroup,
                                  "vertex " + std::to_string(v) + " has group id out of range");
        ++sizes[g];
    }
    for (int g = 0; g < instance.group_count(); ++g)
        if (instance.requirements[g] < 0 || instance.requirements[g] > sizes[g])
            throw ValidationError(ValidationKind::MissingGroup,
                                  "requirement of group " + std::to_string(g) +
                                      " outside [0, |S_g|]");
}

namespace oracle {

std::optional<VertexSolution> brute_force_pvc(const PvcInstance& instance) {
    const int n = instance.graph.n;
    if (n > 20) throw TooLarge("brute_force_pvc: more than 20 vertices");
    std::optional<VertexSolution> best;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> selected;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) selected.push_back(v);
        VertexSolution sol = evaluate_vertex_solution(instance, selected);
        if (!sol.feasible) continue;
        if (!best || sol.total_weight < best->total_weight ||
            (sol.total_weight == best->total_weight && sol.selected < best->selected))
            best = sol;
    }
    return best;
}

std::optional<EdgeSolution> brute_force_pec(const PecInstance& instance) {
    const int m = static_cast<int>(instance.graph.edges.size());
    if (m > 20) throw TooLarge("brute_force_pec: more than 20 edges");
    std::optional<EdgeSolution> best;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        std::vector<int> selected;
        for (int e = 0; e < m; ++e)
            if (mask & (1u << e)) selected.push_back(e);
        EdgeSolution sol = evaluate_edge_solution(instance, selected);
        if (!sol.feasible) continue;
        if (!best || sol.total_cost < best->total_cost ||
            (sol.total_cost == best->total_cost && sol.selected < best->selected))
            best = sol;
    }
    return best;
}

std::optional<Matching> brute_force_wbm(const WbmInstance& instance) {
    const WeightedGraph& g = instance.graph;
    const int m = static_cast<int>(g.edges.size());
    if (m > 20) throw TooLarge("brute_force_wbm: more than 20 edges");

    std::vector<char> used(g.n, 0);
    std::vector<int> current;
    Rational current_cost{0};
    std::optional<std::vector<int>> best;
    Rational best_cost{0};

    auto consider = [&]() {
        std::vector<long long> matched(instance.group_count(), 0);
        for (int v = 0; v < g.n; ++v)
            if (used[v]) ++matched[instance.vertex_groups[v]];
        for (int grp = 0; grp < instance.group_count(); ++grp)
            if (matched[grp] < instance.requirements[grp]) return;
        if (!best || current_cost < best_cost ||
            (current_cost == best_cost && current < *best)) {
            best = current;
            best_cost = current_cost;
        }
    };

    std::function<void(int)> rec = [&](int k) {
        if (k == m) {
            consider();
            return;
        }
        rec(k + 1);
        const Edge& e = g.edges[k];
        if (!used[e.u] && !used[e.v]) {
            used[e.u] = used[e.v] = 1;
            current.push_back(k);
            current_cost += e.weight;
            rec(k + 1);
            current_cost -= e.weight;
            current.pop_back();
            used[e.u] = used[e.v] = 0;
        }
    };
    rec(0);

    if (!best) return std::nullopt;
    Matching result;
    result.edges = *best;
    std::sort(result.edges.begin(), result.edges.end());
    result.weight = best_cost;
    result.mate.assign(g.n, -1);
    for (int k : result.edges) {
        result.mate[g.edges[k].u] = g.edges[k].v;
        result.mate[g.edges[k].v] = g.edges[k].u;
    }
    return result;
}

} // namespace oracle

} // namespace pcov
