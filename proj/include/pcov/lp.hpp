#pragma once

#include <string>
#include <vector>

namespace pcov::lp {

// Tolerances shared with the rounding layers. Values within kFracTol of a
// bound are snapped to it before any downstream rounding looks at them.
inline constexpr double kFeasTol = 1e-9;
inline constexpr double kFracTol = 1e-9;
inline constexpr double kObjTol = 1e-7;

enum class Sense { Minimize, Maximize };
enum class Relation { LessEqual, GreaterEqual, Equal };

struct Constraint {
    std::vector<double> coeffs; // dense, one per variable
    Relation rel = Relation::LessEqual;
    double rhs = 0.0;
};

struct LpModel {
    Sense sense = Sense::Minimize;
    std::vector<double> objective;
    std::vector<Constraint> constraints;
    std::vector<double> lower; // per variable, finite
    std::vector<double> upper; // per variable, finite, >= lower
    std::vector<std::string> names; // optional, diagnostics only

    int num_vars() const { return static_cast<int>(objective.size()); }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    std::vector<double> values;
    double objective_value = 0.0;
    std::vector<int> basis; // structural variables that ended basic
};

/// Bounded-variable primal simplex with Bland's anti-cycling rule over a
/// dense tableau. Always returns a basic (extreme-point) solution: the
/// number of variables strictly inside their bounds never exceeds the
/// number of constraint rows. Deterministic. Throws NumericalFailure if
/// the pivot cap of 50*(vars+rows) is hit.
LpSolution solve_lp(const LpModel& model);

/// Plain-text listing of a model for debugging.
std::string format_lp(const LpModel& model);

/// Test hook: count of variables strictly inside their bounds beyond
/// kFracTol.
int count_interior_vars(const LpModel& model, const LpSolution& sol);

} // namespace pcov::lp
