#pragma once

#include "pcov/lp.hpp"
#include "pcov/pvc.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace pcov {

/// One enumeration item: either a hypothesized set of the omega heaviest
/// vertices of an optimal solution (size == omega), or a directly tested
/// complete-solution candidate (size < omega).
struct Guess {
    std::vector<int> guessed;     // ascending vertex ids
    bool complete_candidate = false;
    std::vector<char> removed;    // per vertex; only meaningful for pipeline guesses
};

/// All subsets of size <= omega in deterministic order (size ascending,
/// lexicographic within a size). Size-omega subsets become pipeline
/// guesses; smaller ones are complete-solution candidates. A non-guessed
/// vertex is removed when it is strictly heavier than the lightest guessed
/// vertex; equal weights are kept.
std::vector<Guess> enumerate_guesses(const PvcInstance& instance);

/// Restricted LP for one guess, plus variable maps back to the instance.
struct RestrictedLp {
    lp::LpModel model;
    std::vector<int> y_var; // per vertex, -1 when removed
    std::vector<int> x_var; // per edge, -1 when both endpoints removed
};

RestrictedLp build_restricted_lp(const PvcInstance& instance, const Guess& guess);

/// Fractional solution with every edge's coverage concentrated on one
/// endpoint: x~_e equals y~_phi(e) exactly.
struct PhiSolution {
    std::vector<double> x_tilde; // per edge (0 for excluded edges)
    std::vector<double> y_tilde; // per vertex (0 for removed)
    std::vector<int> phi;        // per edge: chosen endpoint, -1 for excluded
};

PhiSolution phi_transform(const PvcInstance& instance, const Guess& guess,
                          const RestrictedLp& restricted, const lp::LpSolution& sol);

struct SparseLp {
    lp::LpModel model;
    std::vector<int> z_var; // per vertex, -1 when removed
    std::vector<std::vector<double>> group_profit_by_vertex; // [group][vertex]
    double cost_cap = 0.0;
};

SparseLp build_sparse_lp(const PvcInstance& instance, const Guess& guess,
                         const PhiSolution& phi);

struct SparseRounded {
    std::vector<double> z_hat;  // per vertex (removed -> 0)
    std::vector<int> v_one;     // z == 1
    std::vector<int> v_frac;    // z strictly inside (0,1)
    std::vector<char> z_star;   // per vertex, 1 on v_one + v_frac
};

/// Throws NonBasicSolution when more than omega variables are fractional.
SparseRounded round_sparse(const PvcInstance& instance, const SparseLp& sparse,
                           const lp::LpSolution& sol);

/// Per-guess diagnostics for the pipeline invariants.
struct GuessTrace {
    std::vector<int> guessed;
    double o_lp = 0.0;             // restricted LP optimum (modified weights)
    double cost_y_tilde = 0.0;     // sum of w'(v) * y~_v
    bool phi_exact = false;        // x~_e == y~_phi(e) bit-exact on every edge
    double min_group_margin = 0.0; // min_g sum p(e) x~_e - rho_g
    double sparse_objective = 0.0;
    double rho1 = 0.0;
    int fractional_count = 0;
    int omega = 0;
};

using TraceObserver = std::function<void(const GuessTrace&)>;

/// The full 2-approximation: enumerate guesses, run the restricted-LP
/// -> phi -> sparse-LP -> rounding pipeline per guess, return the feasible
/// candidate of minimum original weight. nullopt when even S = V misses a
/// threshold. The observer (if set) fires once per executed pipeline guess.
std::optional<VertexSolution> solve_two_approx(const PvcInstance& instance, int jobs = 1,
                                               const TraceObserver& observer = nullptr);

} // namespace pcov
