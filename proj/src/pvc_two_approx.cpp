#include "pcov/pvc_two_approx.hpp"

#include "pcov/errors.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <thread>

namespace pcov {

namespace {

std::vector<char> removal_mask(const PvcInstance& instance, const std::vector<int>& guessed) {
    const int n = instance.graph.n;
    std::vector<char> removed(n, 0);
    if (guessed.empty()) return removed;
    // Lightest guessed vertex under the (weight, id) order.
    int lightest = guessed[0];
    for (int v : guessed) {
        if (instance.vertex_weights[v] < instance.vertex_weights[lightest] ||
            (instance.vertex_weights[v] == instance.vertex_weights[lightest] && v < lightest))
            lightest = v;
    }
    std::vector<char> in_guess(n, 0);
    for (int v : guessed) in_guess[v] = 1;
    for (int v = 0; v < n; ++v)
        if (!in_guess[v] && instance.vertex_weights[v] > instance.vertex_weights[lightest])
            removed[v] = 1;
    return removed;
}

void subsets_of_size(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> current;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(current.size()) == k) {
            out.push_back(current);
            return;
        }
        for (int v = start; v <= n - (k - static_cast<int>(current.size())); ++v) {
            current.push_back(v);
            rec(v + 1);
            current.pop_back();
        }
    };
    rec(0);
}

struct Candidate {
    VertexSolution solution;
    bool valid = false;
};

void keep_better(Candidate& best, const VertexSolution& sol) {
    if (!best.valid || sol.total_weight < best.solution.total_weight ||
        (sol.total_weight == best.solution.total_weight &&
         sol.selected < best.solution.selected)) {
        best.solution = sol;
        best.valid = true;
    }
}

} // namespace

std::vector<Guess> enumerate_guesses(const PvcInstance& instance) {
    const int n = instance.graph.n;
    const int omega = instance.group_count();
    std::vector<Guess> result;
    for (int k = 0; k <= std::min(omega, n); ++k) {
        std::vector<std::vector<int>> subsets;
        subsets_of_size(n, k, subsets);
        for (auto& s : subsets) {
            Guess g;
            g.guessed = std::move(s);
            g.complete_candidate = (k < omega);
            if (!g.complete_candidate) g.removed = removal_mask(instance, g.guessed);
            result.push_back(std::move(g));
        }
    }
    return result;
}

RestrictedLp build_restricted_lp(const PvcInstance& instance, const Guess& guess) {
    const int n = instance.graph.n;
    const int m = static_cast<int>(instance.graph.edges.size());
    const int omega = instance.group_count();
    std::vector<char> in_guess(n, 0);
    for (int v : guess.guessed) in_guess[v] = 1;

    RestrictedLp r;
    r.y_var.assign(n, -1);
    r.x_var.assign(m, -1);
    lp::LpModel& model = r.model;
    for (int v = 0; v < n; ++v) {
        if (guess.removed[v]) continue;
        r.y_var[v] = model.num_vars();
        model.objective.push_back(in_guess[v] ? 0.0 : to_double(instance.vertex_weights[v]));
        model.lower.push_back(in_guess[v] ? 1.0 : 0.0);
        model.upper.push_back(1.0);
        model.names.push_back("y" + std::to_string(v));
    }
    for (int e = 0; e < m; ++e) {
        const Edge& edge = instance.graph.edges[e];
        if (guess.removed[edge.u] && guess.removed[edge.v]) continue;
        r.x_var[e] = model.num_vars();
        model.objective.push_back(0.0);
        model.lower.push_back(0.0);
        model.upper.push_back(1.0);
        model.names.push_back("x" + std::to_string(e));
    }
    model.sense = lp::Sense::Minimize;

    for (int g = 0; g < omega; ++g) {
        lp::Constraint c;
        c.coeffs.assign(model.num_vars(), 0.0);
        c.rel = lp::Relation::GreaterEqual;
        c.rhs = to_double(instance.thresholds[g]);
        for (int e = 0; e < m; ++e)
            if (instance.edge_groups[e] == g && r.x_var[e] >= 0)
                c.coeffs[r.x_var[e]] += to_double(instance.edge_profits[e]);
        model.constraints.push_back(std::move(c));
    }
    for (int e = 0; e < m; ++e) {
        if (r.x_var[e] < 0) continue;
        const Edge& edge = instance.graph.edges[e];
        lp::Constraint c;
        c.coeffs.assign(model.num_vars(), 0.0);
        c.rel = lp::Relation::LessEqual;
        c.rhs = 0.0;
        c.coeffs[r.x_var[e]] = 1.0;
        if (r.y_var[edge.u] >= 0) c.coeffs[r.y_var[edge.u]] -= 1.0;
        if (r.y_var[edge.v] >= 0) c.coeffs[r.y_var[edge.v]] -= 1.0;
        model.constraints.push_back(std::move(c));
    }
    return r;
}

PhiSolution phi_transform(const PvcInstance& instance, const Guess& guess,
                          const RestrictedLp& restricted, const lp::LpSolution& sol) {
    const int n = instance.graph.n;
    const int m = static_cast<int>(instance.graph.edges.size());
    PhiSolution phi;
    phi.y_tilde.assign(n, 0.0);
    phi.x_tilde.assign(m, 0.0);
    phi.phi.assign(m, -1);

    std::vector<double> y_prime(n, 0.0);
    for (int v = 0; v < n; ++v)
        if (restricted.y_var[v] >= 0) {
            y_prime[v] = sol.values[restricted.y_var[v]];
            phi.y_tilde[v] = std::min(1.0, 2.0 * y_prime[v]);
        }
    for (int e = 0; e < m; ++e) {
        if (restricted.x_var[e] < 0) continue;
        const Edge& edge = instance.graph.edges[e];
        int lo = std::min(edge.u, edge.v);
        int hi = std::max(edge.u, edge.v);
        int pick;
        if (guess.removed[lo]) pick = hi;
        else if (guess.removed[hi]) pick = lo;
        else pick = (y_prime[hi] > y_prime[lo]) ? hi : lo; // tie: lower id
        phi.phi[e] = pick;
        phi.x_tilde[e] = phi.y_tilde[pick];
    }
    return phi;
}

SparseLp build_sparse_lp(const PvcInstance& instance, const Guess& guess,
                         const PhiSolution& phi) {
    const int n = instance.graph.n;
    const int m = static_cast<int>(instance.graph.edges.size());
    const int omega = instance.group_count();
    std::vector<char> in_guess(n, 0);
    for (int v : guess.guessed) in_guess[v] = 1;

    SparseLp s;
    s.group_profit_by_vertex.assign(omega, std::vector<double>(n, 0.0));
    for (int e = 0; e < m; ++e)
        if (phi.phi[e] >= 0)
            s.group_profit_by_vertex[instance.edge_groups[e]][phi.phi[e]] +=
                to_double(instance.edge_profits[e]);

    auto modified_weight = [&](int v) {
        return in_guess[v] ? 0.0 : to_double(instance.vertex_weights[v]);
    };
    s.cost_cap = 0.0;
    for (int v = 0; v < n; ++v)
        if (!guess.removed[v]) s.cost_cap += modified_weight(v) * phi.y_tilde[v];

    lp::LpModel& model = s.model;
    model.sense = lp::Sense::Maximize;
    s.z_var.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        if (guess.removed[v]) continue;
        s.z_var[v] = model.num_vars();
        model.objective.push_back(s.group_profit_by_vertex[0][v]);
        model.lower.push_back(0.0);
        model.upper.push_back(1.0);
        model.names.push_back("z" + std::to_string(v));
    }
    for (int g = 1; g < omega; ++g) {
        lp::Constraint c;
        c.coeffs.assign(model.num_vars(), 0.0);
        c.rel = lp::Relation::GreaterEqual;
        c.rhs = to_double(instance.thresholds[g]);
        for (int v = 0; v < n; ++v)
            if (s.z_var[v] >= 0) c.coeffs[s.z_var[v]] = s.group_profit_by_vertex[g][v];
        model.constraints.push_back(std::move(c));
    }
    {
        lp::Constraint c;
        c.coeffs.assign(model.num_vars(), 0.0);
        c.rel = lp::Relation::LessEqual;
        c.rhs = s.cost_cap;
        for (int v = 0; v < n; ++v)
            if (s.z_var[v] >= 0) c.coeffs[s.z_var[v]] = modified_weight(v);
        model.constraints.push_back(std::move(c));
    }
    return s;
}

SparseRounded round_sparse(const PvcInstance& instance, const SparseLp& sparse,
                           const lp::LpSolution& sol) {
    const int n = instance.graph.n;
    const int omega = instance.group_count();
    SparseRounded r;
    r.z_hat.assign(n, 0.0);
    r.z_star.assign(n, 0);
    for (int v = 0; v < n; ++v) {
        if (sparse.z_var[v] < 0) continue;
        double z = sol.values[sparse.z_var[v]];
        r.z_hat[v] = z;
        if (z >= 1.0) {
            r.v_one.push_back(v);
            r.z_star[v] = 1;
        } else if (z > 0.0) {
            r.v_frac.push_back(v);
            r.z_star[v] = 1;
        }
    }
    if (static_cast<int>(r.v_frac.size()) > omega)
        throw NonBasicSolution("sparse rounding found " + std::to_string(r.v_frac.size()) +
                               " fractional variables with omega=" + std::to_string(omega));
    return r;
}

namespace {

// Runs the restricted-LP -> phi -> sparse-LP -> rounding pipeline for one
// size-omega guess. Returns nullopt when the restricted LP is infeasible
// (a wrong guess) or the rounded set misses a threshold.
std::optional<VertexSolution> run_pipeline(const PvcInstance& instance, const Guess& guess,
                                           GuessTrace* trace) {
    RestrictedLp restricted = build_restricted_lp(instance, guess);
    lp::LpSolution lp_sol;
    try {
        lp_sol = lp::solve_lp(restricted.model);
    } catch (const NumericalFailure& e) {
        throw PipelineFailure(std::string("restricted LP failed: ") + e.what());
    }
    if (lp_sol.status != lp::LpStatus::Optimal) return std::nullopt;

    PhiSolution phi = phi_transform(instance, guess, restricted, lp_sol);
    SparseLp sparse = build_sparse_lp(instance, guess, phi);
    lp::LpSolution sparse_sol;
    try {
        sparse_sol = lp::solve_lp(sparse.model);
    } catch (const NumericalFailure& e) {
        throw PipelineFailure(std::string("sparse LP failed: ") + e.what());
    }
    if (sparse_sol.status != lp::LpStatus::Optimal)
        throw PipelineFailure("sparse LP unexpectedly infeasible for a feasible guess");

    SparseRounded rounded = round_sparse(instance, sparse, sparse_sol);

    if (trace) {
        trace->guessed = guess.guessed;
        trace->o_lp = lp_sol.objective_value;
        trace->omega = instance.group_count();
        trace->rho1 = to_double(instance.thresholds[0]);
        trace->sparse_objective = sparse_sol.objective_value;
        trace->fractional_count = static_cast<int>(rounded.v_frac.size());
        trace->cost_y_tilde = sparse.cost_cap;
        trace->phi_exact = true;
        for (size_t e = 0; e < instance.graph.edges.size(); ++e)
            if (phi.phi[e] >= 0 && phi.x_tilde[e] != phi.y_tilde[phi.phi[e]])
                trace->phi_exact = false;
        double min_margin = 0.0;
        bool first = true;
        for (int g = 0; g < instance.group_count(); ++g) {
            double covered = 0.0;
            for (size_t e = 0; e < instance.graph.edges.size(); ++e)
                if (instance.edge_groups[e] == g)
                    covered += to_double(instance.edge_profits[e]) * phi.x_tilde[e];
            double margin = covered - to_double(instance.thresholds[g]);
            if (first || margin < min_margin) min_margin = margin;
            first = false;
        }
        trace->min_group_margin = min_margin;
    }

    std::vector<int> selected = guess.guessed;
    selected.insert(selected.end(), rounded.v_one.begin(), rounded.v_one.end());
    selected.insert(selected.end(), rounded.v_frac.begin(), rounded.v_frac.end());
    VertexSolution sol = evaluate_vertex_solution(instance, selected);
    if (!sol.feasible) return std::nullopt;
    return sol;
}

} // namespace

std::optional<VertexSolution> solve_two_approx(const PvcInstance& instance, int jobs,
                                               const TraceObserver& observer) {
    if (!pvc_feasible(instance)) return std::nullopt;
    std::vector<Guess> guesses = enumerate_guesses(instance);

    auto process = [&](const Guess& guess, Candidate& best, std::mutex* observer_mutex) {
        if (guess.complete_candidate) {
            VertexSolution sol = evaluate_vertex_solution(instance, guess.guessed);
            if (sol.feasible) keep_better(best, sol);
            return;
        }
        GuessTrace trace;
        auto result = run_pipeline(instance, guess, observer ? &trace : nullptr);
        if (observer && !trace.guessed.empty()) {
            if (observer_mutex) {
                std::lock_guard<std::mutex> lock(*observer_mutex);
                observer(trace);
            } else {
                observer(trace);
            }
        }
        if (result) keep_better(best, *result);
    };

    Candidate best;
    if (jobs <= 1) {
        for (const Guess& guess : guesses) process(guess, best, nullptr);
    } else {
        std::vector<Candidate> partial(jobs);
        std::mutex observer_mutex;
        std::vector<std::thread> workers;
        for (int t = 0; t < jobs; ++t) {
            workers.emplace_back([&, t]() {
                for (size_t i = t; i < guesses.size(); i += jobs)
                    process(guesses[i], partial[t], &observer_mutex);
            });
        }
        for (auto& w : workers) w.join();
        for (const Candidate& c : partial)
            if (c.valid) keep_better(best, c.solution);
    }

    if (!best.valid) return std::nullopt;
    return best.solution;
}

} // namespace pcov
