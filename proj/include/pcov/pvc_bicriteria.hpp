#pragma once

#include "pcov/pvc.hpp"

#include <vector>

namespace pcov {

/// Threshold rounding of the plain LP relaxation: S = {v : y*_v >= eps}.
/// Guarantees cost(S) <= O_LP/eps and per-group coverage >= (1-2eps)*rho_g.
struct BiCriteriaResult {
    double epsilon = 0.0;
    std::vector<int> selected; // sorted vertex ids
    double lp_value = 0.0;     // O_LP
    double cost_bound = 0.0;   // O_LP / eps
    Rational total_weight{0};
    std::vector<Rational> per_group_coverage;
    bool cost_bound_ok = false;
    bool coverage_bound_ok = false;
};

/// Requires 0 < eps < 1/2 (InvalidEpsilon otherwise); throws
/// Error("LP infeasible") when the instance itself is infeasible.
BiCriteriaResult solve_bicriteria(const PvcInstance& instance, double epsilon);

/// Thresholds a cached LP solution vector; used for epsilon sweeps so that
/// all sweep points share one optimal solution.
std::vector<int> threshold_round(const std::vector<double>& y_star, double epsilon);

} // namespace pcov
