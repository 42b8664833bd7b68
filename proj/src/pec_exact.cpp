#include "pcov/pec_exact.hpp"

#include "pcov/errors.hpp"
#include "pcov/matching.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace pcov {

namespace {

long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

} // namespace

PecReduction reduce_pec_to_wbm(const PecInstance& instance) {
    const WeightedGraph& g = instance.graph;
    const int n = g.n;
    const int omega = instance.group_count();

    PecReduction red;
    red.cheapest_edge.assign(n, -1);
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        for (int v : {g.edges[e].u, g.edges[e].v}) {
            int& best = red.cheapest_edge[v];
            if (best == -1 || g.edges[e].weight < g.edges[best].weight) best = e;
        }
    }

    std::vector<long long> coverable(omega, 0);
    for (int v = 0; v < n; ++v)
        if (red.cheapest_edge[v] != -1) ++coverable[instance.vertex_groups[v]];
    for (int grp = 0; grp < omega; ++grp)
        if (instance.requirements[grp] > coverable[grp])
            throw ValidationError(ValidationKind::IsolatedRequired,
                                  "group " + std::to_string(grp) + " requires " +
                                      std::to_string(instance.requirements[grp]) +
                                      " covered vertices but only " +
                                      std::to_string(coverable[grp]) + " are coverable");

    red.wbm_id.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        if (red.cheapest_edge[v] == -1) continue;
        red.wbm_id[v] = static_cast<int>(red.original_id.size());
        red.original_id.push_back(v);
    }
    const int noniso = static_cast<int>(red.original_id.size());

    WbmInstance& wbm = red.wbm;
    wbm.graph.n = 2 * noniso; // originals then twins
    wbm.vertex_groups.assign(2 * noniso, omega);
    for (int i = 0; i < noniso; ++i)
        wbm.vertex_groups[i] = instance.vertex_groups[red.original_id[i]];
    wbm.requirements = instance.requirements;
    wbm.requirements.push_back(0); // twin group

    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        wbm.graph.edges.push_back(
            {red.wbm_id[g.edges[e].u], red.wbm_id[g.edges[e].v], g.edges[e].weight});
        red.base_edge.push_back(e);
        red.twin_edge.push_back(-1);
    }
    for (int i = 0; i < noniso; ++i) {
        int v = red.original_id[i];
        wbm.graph.edges.push_back({i, noniso + i, g.edges[red.cheapest_edge[v]].weight});
        red.base_edge.push_back(-1);
        red.twin_edge.push_back(v);
    }
    return red;
}

HGraph build_h_graph(const WbmInstance& wbm) {
    const WeightedGraph& g = wbm.graph;
    HGraph h;
    h.base_n = g.n;
    h.cost_scale = 1;
    for (const Edge& e : g.edges) h.cost_scale = lcm_ll(h.cost_scale, e.weight.denominator());
    long long total = 0;
    std::vector<long long> scaled(g.edges.size());
    for (size_t k = 0; k < g.edges.size(); ++k) {
        scaled[k] = g.edges[k].weight.numerator() *
                    (h.cost_scale / g.edges[k].weight.denominator());
        total += scaled[k];
    }
    h.big_m = total + 1;

    for (size_t k = 0; k < g.edges.size(); ++k) {
        h.edges.push_back({g.edges[k].u, g.edges[k].v, 2 * h.big_m - scaled[k]});
        h.base_edge.push_back(static_cast<int>(k));
    }
    std::vector<std::vector<int>> members(wbm.group_count());
    for (int v = 0; v < g.n; ++v) members[wbm.vertex_groups[v]].push_back(v);
    h.num_vertices = g.n;
    for (int grp = 0; grp < wbm.group_count(); ++grp) {
        const long long aux_count =
            static_cast<long long>(members[grp].size()) - wbm.requirements[grp];
        for (long long a = 0; a < aux_count; ++a) {
            const int aux = h.num_vertices++;
            for (int v : members[grp]) {
                h.edges.push_back({v, aux, h.big_m});
                h.base_edge.push_back(-1);
            }
        }
    }
    return h;
}

std::optional<Matching> solve_wbm(const WbmInstance& wbm) {
    validate_wbm(wbm);
    HGraph h = build_h_graph(wbm);
    std::vector<int> mate = max_weight_matching_int(h.num_vertices, h.edges);

    long long weight = 0;
    std::vector<int> selected;
    for (size_t k = 0; k < h.edges.size(); ++k) {
        const auto& e = h.edges[k];
        if (mate[e[0]] == static_cast<int>(e[1])) {
            weight += e[2];
            if (h.base_edge[k] >= 0) selected.push_back(h.base_edge[k]);
        }
    }
    if (weight <= (static_cast<long long>(h.base_n) - 1) * h.big_m) return std::nullopt;

    Matching result;
    result.edges = selected;
    std::sort(result.edges.begin(), result.edges.end());
    result.mate.assign(wbm.graph.n, -1);
    long long scaled_cost = 0;
    for (int k : result.edges) {
        const Edge& e = wbm.graph.edges[k];
        result.weight += e.weight;
        result.mate[e.u] = e.v;
        result.mate[e.v] = e.u;
        scaled_cost += e.weight.numerator() * (h.cost_scale / e.weight.denominator());
    }
    // nM - weight(M_H) recovers the matching cost exactly.
    assert(scaled_cost ==
           static_cast<long long>(h.base_n) * h.big_m - weight);
    (void)scaled_cost;
    return result;
}

std::optional<EdgeSolution> solve_pec(const PecInstance& instance) {
    validate_pec(instance);
    PecReduction red;
    try {
        red = reduce_pec_to_wbm(instance);
    } catch (const ValidationError& e) {
        if (e.kind == ValidationKind::IsolatedRequired) return std::nullopt;
        throw;
    }
    std::optional<Matching> matching = solve_wbm(red.wbm);
    if (!matching) return std::nullopt;

    std::vector<int> cover;
    for (int k : matching->edges) {
        if (red.base_edge[k] >= 0) cover.push_back(red.base_edge[k]);
        else cover.push_back(red.cheapest_edge[red.twin_edge[k]]);
    }
    std::sort(cover.begin(), cover.end());
    cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
    EdgeSolution sol = evaluate_edge_solution(instance, cover);
    assert(sol.feasible);
    return sol;
}

} // namespace pcov
