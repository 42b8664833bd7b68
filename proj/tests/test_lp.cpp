#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pcov/lp.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

using namespace pcov::lp;

namespace {

LpModel fractional_vertex_cover_triangle() {
    // min y0+y1+y2 s.t. yi+yj >= 1 on each triangle edge, y in [0,1].
    LpModel m;
    m.sense = Sense::Minimize;
    m.objective = {1, 1, 1};
    m.lower = {0, 0, 0};
    m.upper = {1, 1, 1};
    m.constraints = {
        {{1, 1, 0}, Relation::GreaterEqual, 1},
        {{1, 0, 1}, Relation::GreaterEqual, 1},
        {{0, 1, 1}, Relation::GreaterEqual, 1},
    };
    return m;
}

// Cheap reference evaluation: scan a uniform grid over the box and keep the
// best feasible point. Coarse, so it only bounds the simplex from one side.
double grid_best(const LpModel& m, int steps) {
    const int n = m.num_vars();
    std::vector<int> idx(n, 0);
    double best = m.sense == Sense::Minimize ? 1e300 : -1e300;
    while (true) {
        std::vector<double> x(n);
        for (int i = 0; i < n; ++i)
            x[i] = m.lower[i] + (m.upper[i] - m.lower[i]) * idx[i] / steps;
        bool ok = true;
        for (const auto& c : m.constraints) {
            double lhs = 0;
            for (int i = 0; i < n; ++i) lhs += c.coeffs[i] * x[i];
            if (c.rel == Relation::LessEqual && lhs > c.rhs + 1e-9) ok = false;
            if (c.rel == Relation::GreaterEqual && lhs < c.rhs - 1e-9) ok = false;
            if (c.rel == Relation::Equal && std::abs(lhs - c.rhs) > 1e-9) ok = false;
        }
        if (ok) {
            double obj = 0;
            for (int i = 0; i < n; ++i) obj += m.objective[i] * x[i];
            if (m.sense == Sense::Minimize ? obj < best : obj > best) best = obj;
        }
        int d = 0;
        while (d < n && ++idx[d] > steps) idx[d++] = 0;
        if (d == n) break;
    }
    return best;
}

bool solution_feasible(const LpModel& m, const LpSolution& s) {
    for (int i = 0; i < m.num_vars(); ++i)
        if (s.values[i] < m.lower[i] - kFeasTol || s.values[i] > m.upper[i] + kFeasTol)
            return false;
    for (const auto& c : m.constraints) {
        double lhs = 0;
        for (int i = 0; i < m.num_vars(); ++i) lhs += c.coeffs[i] * s.values[i];
        if (c.rel == Relation::LessEqual && lhs > c.rhs + 1e-7) return false;
        if (c.rel == Relation::GreaterEqual && lhs < c.rhs - 1e-7) return false;
        if (c.rel == Relation::Equal && std::abs(lhs - c.rhs) > 1e-7) return false;
    }
    return true;
}

uint64_t mix(uint64_t& s) {
    s += 0x9E3779B97F4A7C15ull;
    uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

} // namespace

TEST_CASE("triangle fractional vertex cover solves to 3/2") {
    LpSolution s = solve_lp(fractional_vertex_cover_triangle());
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.objective_value == doctest::Approx(1.5).epsilon(1e-9));
    for (double v : s.values) CHECK(v == doctest::Approx(0.5).epsilon(1e-7));
}

TEST_CASE("maximization with a knap-style budget row") {
    LpModel m;
    m.sense = Sense::Maximize;
    m.objective = {3, 2};
    m.lower = {0, 0};
    m.upper = {1, 1};
    m.constraints = {{{2, 1}, Relation::LessEqual, 2}};
    LpSolution s = solve_lp(m);
    REQUIRE(s.status == LpStatus::Optimal);
    // x0 = 1/2, x1 = 1 beats x0 = 1, x1 = 0.
    CHECK(s.objective_value == doctest::Approx(3.5).epsilon(1e-9));
}

TEST_CASE("equality constraints and nonzero lower bounds") {
    LpModel m;
    m.sense = Sense::Minimize;
    m.objective = {1, 4};
    m.lower = {1, 0};
    m.upper = {5, 5};
    m.constraints = {{{1, 1}, Relation::Equal, 3}};
    LpSolution s = solve_lp(m);
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.values[0] == doctest::Approx(3.0));
    CHECK(s.values[1] == doctest::Approx(0.0));
    CHECK(s.objective_value == doctest::Approx(3.0));
}

TEST_CASE("infeasibility is detected") {
    LpModel m;
    m.objective = {1};
    m.lower = {0};
    m.upper = {1};
    m.constraints = {{{1}, Relation::GreaterEqual, 2}};
    CHECK(solve_lp(m).status == LpStatus::Infeasible);

    LpModel contradictory;
    contradictory.objective = {1, 1};
    contradictory.lower = {0, 0};
    contradictory.upper = {10, 10};
    contradictory.constraints = {{{1, 1}, Relation::LessEqual, 1},
                                 {{1, 1}, Relation::GreaterEqual, 2}};
    CHECK(solve_lp(contradictory).status == LpStatus::Infeasible);
}

TEST_CASE("fixed variables via equal bounds") {
    LpModel m;
    m.sense = Sense::Minimize;
    m.objective = {1, 1};
    m.lower = {1, 0};
    m.upper = {1, 2};
    m.constraints = {{{1, 1}, Relation::GreaterEqual, 2}};
    LpSolution s = solve_lp(m);
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.values[0] == doctest::Approx(1.0));
    CHECK(s.objective_value == doctest::Approx(2.0));
}

TEST_CASE("random LPs: optimal, feasible, at least as good as a grid scan") {
    uint64_t seed = 2024;
    int solved = 0;
    for (int t = 0; t < 200; ++t) {
        LpModel m;
        const int n = 2 + static_cast<int>(mix(seed) % 2); // 2..3 vars
        const int rows = 1 + static_cast<int>(mix(seed) % 3);
        m.sense = (mix(seed) & 1) ? Sense::Maximize : Sense::Minimize;
        for (int i = 0; i < n; ++i) {
            m.objective.push_back(static_cast<double>(mix(seed) % 9) - 4);
            m.lower.push_back(0);
            m.upper.push_back(1 + static_cast<double>(mix(seed) % 3));
        }
        for (int r = 0; r < rows; ++r) {
            Constraint c;
            for (int i = 0; i < n; ++i)
                c.coeffs.push_back(static_cast<double>(mix(seed) % 7) - 3);
            c.rel = (mix(seed) & 1) ? Relation::LessEqual : Relation::GreaterEqual;
            c.rhs = static_cast<double>(mix(seed) % 9) - 4;
            m.constraints.push_back(c);
        }
        LpSolution s = solve_lp(m);
        if (s.status != LpStatus::Optimal) continue;
        ++solved;
        CHECK(solution_feasible(m, s));
        const double g = grid_best(m, 24);
        if (m.sense == Sense::Minimize)
            CHECK(s.objective_value <= g + 1e-6);
        else
            CHECK(s.objective_value >= g - 1e-6);
        CHECK(count_interior_vars(m, s) <= static_cast<int>(m.constraints.size()));
    }
    CHECK(solved > 50); // the sample must actually exercise the solver
}

TEST_CASE("solver is deterministic") {
    LpModel m = fractional_vertex_cover_triangle();
    LpSolution a = solve_lp(m);
    LpSolution b = solve_lp(m);
    CHECK(a.values == b.values);
    CHECK(a.objective_value == b.objective_value);
    CHECK(a.basis == b.basis);
}

TEST_CASE("format_lp mentions every variable") {
    LpModel m = fractional_vertex_cover_triangle();
    m.names = {"y0", "y1", "y2"};
    std::string text = format_lp(m);
    CHECK(text.find("y0") != std::string::npos);
    CHECK(text.find("y2") != std::string::npos);
}
