#include "pcov/pvc_bicriteria.hpp"

#include "pcov/errors.hpp"
#include "pcov/lp.hpp"
#include "pcov/pvc_two_approx.hpp"

namespace pcov {

std::vector<int> threshold_round(const std::vector<double>& y_star, double epsilon) {
    std::vector<int> selected;
    for (size_t v = 0; v < y_star.size(); ++v)
        if (y_star[v] >= epsilon - lp::kFracTol) selected.push_back(static_cast<int>(v));
    return selected;
}

BiCriteriaResult solve_bicriteria(const PvcInstance& instance, double epsilon) {
    if (!(epsilon > 0.0) || !(epsilon < 0.5))
        throw InvalidEpsilon("epsilon must lie in (0, 1/2), got " + std::to_string(epsilon));

    // Full relaxation: a pipeline guess with nothing guessed or removed.
    Guess null_guess;
    null_guess.removed.assign(instance.graph.n, 0);
    RestrictedLp relaxation = build_restricted_lp(instance, null_guess);
    lp::LpSolution sol = lp::solve_lp(relaxation.model);
    if (sol.status != lp::LpStatus::Optimal) throw Error("LP infeasible: instance has no solution");

    std::vector<double> y_star(instance.graph.n, 0.0);
    for (int v = 0; v < instance.graph.n; ++v) y_star[v] = sol.values[relaxation.y_var[v]];

    BiCriteriaResult result;
    result.epsilon = epsilon;
    result.lp_value = sol.objective_value;
    result.cost_bound = sol.objective_value / epsilon;
    result.selected = threshold_round(y_star, epsilon);

    VertexSolution eval = evaluate_vertex_solution(instance, result.selected);
    result.total_weight = eval.total_weight;
    result.per_group_coverage = eval.per_group_profit;
    result.cost_bound_ok = to_double(eval.total_weight) <= result.cost_bound + lp::kObjTol;
    result.coverage_bound_ok = true;
    for (int g = 0; g < instance.group_count(); ++g) {
        double required = (1.0 - 2.0 * epsilon) * to_double(instance.thresholds[g]);
        if (to_double(eval.per_group_profit[g]) < required - lp::kObjTol)
            result.coverage_bound_ok = false;
    }
    return result;
}

} // namespace pcov
