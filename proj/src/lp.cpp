#include "pcov/lp.hpp"

#include "pcov/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace pcov::lp {

namespace {

constexpr double kPivotEps = 1e-10;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Bounded-variable tableau simplex over the equality system T x = r with
// every variable bounded by [0, ubound[j]] (ubound may be +inf). Nonbasic
// variables sit at one of their bounds; basic values are derived from the
// tableau and the nonbasic bound states.
struct Tableau {
    Eigen::MatrixXd t;            // m x ncols, kept equal to B^{-1} A
    Eigen::VectorXd rhs;          // m, kept equal to B^{-1} b
    std::vector<double> ubound;   // per column
    std::vector<int> basis;       // per row, column index
    std::vector<char> at_upper;   // per column, meaningful when nonbasic
    std::vector<char> in_basis;   // per column
    long long pivots = 0;
    long long pivot_cap = 0;

    int rows() const { return static_cast<int>(t.rows()); }
    int cols() const { return static_cast<int>(t.cols()); }

    Eigen::VectorXd basic_values() const {
        Eigen::VectorXd x = rhs;
        for (int j = 0; j < cols(); ++j)
            if (!in_basis[j] && at_upper[j]) x -= t.col(j) * ubound[j];
        return x;
    }

    void pivot(int row, int col) {
        in_basis[basis[row]] = 0;
        in_basis[col] = 1;
        basis[row] = col;
        at_upper[col] = 0;
        const double piv = t(row, col);
        t.row(row) /= piv;
        rhs(row) /= piv;
        for (int i = 0; i < rows(); ++i) {
            if (i == row) continue;
            const double f = t(i, col);
            if (std::abs(f) > 0.0) {
                t.row(i) -= f * t.row(row);
                rhs(i) -= f * rhs(row);
            }
        }
    }

    // Minimizes cost over the tableau. Bland's rule: smallest eligible
    // entering column; among tied leaving rows, smallest basic column.
    LpStatus run(const Eigen::VectorXd& cost) {
        const int m = rows();
        const int n = cols();
        while (true) {
            if (++pivots > pivot_cap)
                throw NumericalFailure("simplex pivot cap exceeded");
            Eigen::VectorXd xb = basic_values();
            // reduced costs d = cost - cost_B^T * T
            Eigen::VectorXd cb(m);
            for (int i = 0; i < m; ++i) cb(i) = cost(basis[i]);
            Eigen::VectorXd d = cost - t.transpose() * cb;

            int enter = -1;
            for (int j = 0; j < n; ++j) {
                if (in_basis[j] || ubound[j] <= 0.0) continue;
                if (!at_upper[j] && d(j) < -kFeasTol) { enter = j; break; }
                if (at_upper[j] && d(j) > kFeasTol) { enter = j; break; }
            }
            if (enter < 0) return LpStatus::Optimal;

            const double dir = at_upper[enter] ? -1.0 : 1.0;
            double best_t = kInf;
            int leave_row = -1;
            bool leave_to_upper = false;
            for (int i = 0; i < m; ++i) {
                const double a = t(i, enter) * dir; // basic value moves by -a*t
                if (a > kPivotEps) {
                    const double ratio = std::max(0.0, xb(i)) / a;
                    if (ratio < best_t - kPivotEps ||
                        (ratio < best_t + kPivotEps &&
                         (leave_row < 0 || basis[i] < basis[leave_row]))) {
                        best_t = std::min(best_t, ratio);
                        leave_row = i;
                        leave_to_upper = false;
                    }
                } else if (a < -kPivotEps && ubound[basis[i]] < kInf) {
                    const double ratio = std::max(0.0, ubound[basis[i]] - xb(i)) / (-a);
                    if (ratio < best_t - kPivotEps ||
                        (ratio < best_t + kPivotEps &&
                         (leave_row < 0 || basis[i] < basis[leave_row]))) {
                        best_t = std::min(best_t, ratio);
                        leave_row = i;
                        leave_to_upper = true;
                    }
                }
            }
            if (ubound[enter] < kInf && ubound[enter] <= best_t) {
                at_upper[enter] = !at_upper[enter]; // bound flip, basis unchanged
                continue;
            }
            if (leave_row < 0) return LpStatus::Unbounded;
            at_upper[basis[leave_row]] = leave_to_upper ? 1 : 0;
            pivot(leave_row, enter);
        }
    }
};

} // namespace

LpSolution solve_lp(const LpModel& model) {
    const int nvars = model.num_vars();
    const int m = static_cast<int>(model.constraints.size());
    if (static_cast<int>(model.lower.size()) != nvars ||
        static_cast<int>(model.upper.size()) != nvars)
        throw InvalidParameter("LP bounds dimension mismatch");
    for (int j = 0; j < nvars; ++j) {
        if (!std::isfinite(model.lower[j]) || !std::isfinite(model.upper[j]) ||
            model.lower[j] > model.upper[j])
            throw InvalidParameter("LP variable bounds must be finite with lo <= hi");
    }
    for (const Constraint& c : model.constraints)
        if (static_cast<int>(c.coeffs.size()) != nvars)
            throw InvalidParameter("LP constraint dimension mismatch");

    // Shift structurals to [0, u-l] and normalize rows to rhs >= 0, with a
    // slack per <= row and an artificial per >=/= row.
    std::vector<double> sign(m, 1.0);
    std::vector<Relation> rel(m);
    std::vector<double> rhs(m);
    for (int i = 0; i < m; ++i) {
        const Constraint& c = model.constraints[i];
        double b = c.rhs;
        for (int j = 0; j < nvars; ++j) b -= c.coeffs[j] * model.lower[j];
        rel[i] = c.rel;
        if (b < 0.0) {
            sign[i] = -1.0;
            b = -b;
            if (c.rel == Relation::LessEqual) rel[i] = Relation::GreaterEqual;
            else if (c.rel == Relation::GreaterEqual) rel[i] = Relation::LessEqual;
        }
        rhs[i] = b;
    }

    int ncols = nvars;
    std::vector<int> slack_col(m, -1);
    std::vector<int> art_col(m, -1);
    for (int i = 0; i < m; ++i) {
        if (rel[i] != Relation::Equal) slack_col[i] = ncols++;
        if (rel[i] != Relation::LessEqual) art_col[i] = ncols++;
    }

    Tableau tab;
    tab.t = Eigen::MatrixXd::Zero(m, ncols);
    tab.rhs = Eigen::VectorXd::Zero(m);
    tab.ubound.assign(ncols, kInf);
    tab.at_upper.assign(ncols, 0);
    tab.in_basis.assign(ncols, 0);
    tab.basis.assign(m, -1);
    tab.pivot_cap = 50LL * (ncols + m) + 50;

    for (int j = 0; j < nvars; ++j) tab.ubound[j] = model.upper[j] - model.lower[j];
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < nvars; ++j)
            tab.t(i, j) = sign[i] * model.constraints[i].coeffs[j];
        tab.rhs(i) = rhs[i];
        if (slack_col[i] >= 0)
            tab.t(i, slack_col[i]) = (rel[i] == Relation::LessEqual) ? 1.0 : -1.0;
        if (art_col[i] >= 0) tab.t(i, art_col[i]) = 1.0;
        const int basic = (art_col[i] >= 0) ? art_col[i] : slack_col[i];
        tab.basis[i] = basic;
        tab.in_basis[basic] = 1;
    }

    bool has_artificials = false;
    for (int i = 0; i < m; ++i)
        if (art_col[i] >= 0) has_artificials = true;

    if (has_artificials) {
        Eigen::VectorXd phase1 = Eigen::VectorXd::Zero(ncols);
        for (int i = 0; i < m; ++i)
            if (art_col[i] >= 0) phase1(art_col[i]) = 1.0;
        LpStatus st = tab.run(phase1);
        if (st == LpStatus::Unbounded)
            throw NumericalFailure("phase-1 LP reported unbounded");
        Eigen::VectorXd xb = tab.basic_values();
        std::vector<char> is_art(ncols, 0);
        for (int i = 0; i < m; ++i)
            if (art_col[i] >= 0) is_art[art_col[i]] = 1;
        double infeas = 0.0;
        for (int i = 0; i < m; ++i)
            if (is_art[tab.basis[i]]) infeas += std::max(0.0, xb(i));
        if (infeas > kObjTol) {
            LpSolution sol;
            sol.status = LpStatus::Infeasible;
            return sol;
        }
        // Pin artificials to zero for phase 2.
        for (int i = 0; i < m; ++i)
            if (art_col[i] >= 0) tab.ubound[art_col[i]] = 0.0;
    }

    Eigen::VectorXd cost = Eigen::VectorXd::Zero(ncols);
    const double obj_sign = (model.sense == Sense::Maximize) ? -1.0 : 1.0;
    for (int j = 0; j < nvars; ++j) cost(j) = obj_sign * model.objective[j];
    LpStatus st = tab.run(cost);

    LpSolution sol;
    if (st == LpStatus::Unbounded) {
        sol.status = LpStatus::Unbounded;
        return sol;
    }
    sol.status = LpStatus::Optimal;
    sol.values.assign(nvars, 0.0);
    Eigen::VectorXd xb = tab.basic_values();
    std::vector<double> shifted(ncols, 0.0);
    for (int j = 0; j < ncols; ++j)
        if (!tab.in_basis[j] && tab.at_upper[j]) shifted[j] = tab.ubound[j];
    for (int i = 0; i < m; ++i) shifted[tab.basis[i]] = xb(i);
    for (int j = 0; j < nvars; ++j) {
        double x = model.lower[j] + shifted[j];
        if (std::abs(x - model.lower[j]) < kFracTol) x = model.lower[j];
        else if (std::abs(x - model.upper[j]) < kFracTol) x = model.upper[j];
        sol.values[j] = x;
    }
    sol.objective_value = 0.0;
    for (int j = 0; j < nvars; ++j) sol.objective_value += model.objective[j] * sol.values[j];
    for (int j = 0; j < nvars; ++j)
        if (tab.in_basis[j]) sol.basis.push_back(j);
    return sol;
}

std::string format_lp(const LpModel& model) {
    std::ostringstream os;
    os << (model.sense == Sense::Minimize ? "minimize" : "maximize");
    for (int j = 0; j < model.num_vars(); ++j) {
        if (model.objective[j] == 0.0) continue;
        os << " " << (model.objective[j] >= 0 ? "+" : "") << model.objective[j] << " "
           << (j < static_cast<int>(model.names.size()) ? model.names[j]
                                                        : "x" + std::to_string(j));
    }
    os << "\nsubject to\n";
    for (const Constraint& c : model.constraints) {
        os << " ";
        for (int j = 0; j < model.num_vars(); ++j) {
            if (c.coeffs[j] == 0.0) continue;
            os << " " << (c.coeffs[j] >= 0 ? "+" : "") << c.coeffs[j] << " "
               << (j < static_cast<int>(model.names.size()) ? model.names[j]
                                                            : "x" + std::to_string(j));
        }
        os << (c.rel == Relation::LessEqual ? " <= "
               : c.rel == Relation::GreaterEqual ? " >= " : " = ")
           << c.rhs << "\n";
    }
    os << "bounds\n";
    for (int j = 0; j < model.num_vars(); ++j)
        os << " " << model.lower[j] << " <= "
           << (j < static_cast<int>(model.names.size()) ? model.names[j]
                                                        : "x" + std::to_string(j))
           << " <= " << model.upper[j] << "\n";
    return os.str();
}

int count_interior_vars(const LpModel& model, const LpSolution& sol) {
    int count = 0;
    for (int j = 0; j < model.num_vars(); ++j)
        if (sol.values[j] > model.lower[j] + kFracTol &&
            sol.values[j] < model.upper[j] - kFracTol)
            ++count;
    return count;
}

} // namespace pcov::lp
