#include "pcov/errors.hpp"
#include "pcov/hardness.hpp"
#include "pcov/io.hpp"
#include "pcov/lp.hpp"
#include "pcov/oracle.hpp"
#include "pcov/pec_exact.hpp"
#include "pcov/pvc_bicriteria.hpp"
#include "pcov/pvc_two_approx.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using ordered_json = nlohmann::ordered_json;
using namespace pcov;

constexpr int kExitSolved = 0;
constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fnv1a_hex(const std::string& bytes) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

ordered_json vertex_solution_json(const VertexSolution& sol) {
    ordered_json j;
    j["kind"] = "vertex-solution";
    j["selected"] = sol.selected;
    j["total_weight"] = format_rational(sol.total_weight);
    j["per_group_profit"] = ordered_json::array();
    for (const auto& p : sol.per_group_profit)
        j["per_group_profit"].push_back(format_rational(p));
    j["feasible"] = sol.feasible;
    return j;
}

ordered_json edge_solution_json(const EdgeSolution& sol) {
    ordered_json j;
    j["kind"] = "edge-solution";
    j["selected"] = sol.selected;
    j["total_cost"] = format_rational(sol.total_cost);
    j["per_group_covered"] = sol.per_group_covered;
    j["feasible"] = sol.feasible;
    return j;
}

struct ReportOptions {
    bool timing = false;
};

void emit_report(ordered_json& report, const ReportOptions& opts,
                 std::chrono::steady_clock::time_point start) {
    if (opts.timing) {
        auto us = std::chrono::duration_cast<std::chrono::microseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        report["duration_us"] = us;
    }
    std::cout << report.dump() << "\n";
}

double full_relaxation_value(const PvcInstance& instance) {
    Guess null_guess;
    null_guess.removed.assign(instance.graph.n, 0);
    RestrictedLp relaxation = build_restricted_lp(instance, null_guess);
    lp::LpSolution sol = lp::solve_lp(relaxation.model);
    if (sol.status != lp::LpStatus::Optimal) throw Error("LP infeasible");
    return sol.objective_value;
}

int cmd_solve_pvc2(const std::string& path, int jobs, bool with_oracle,
                   const ReportOptions& opts) {
    auto start = std::chrono::steady_clock::now();
    const std::string text = read_file(path);
    auto instance = std::get<PvcInstance>(io::parse_instance(text));
    ordered_json report;
    report["instance_digest"] = fnv1a_hex(text);
    report["algorithm"] = "pvc-two-approx";
    report["parameters"] = ordered_json{{"jobs", jobs}};
    auto result = solve_two_approx(instance, jobs);
    if (!result) {
        report["status"] = "infeasible";
        emit_report(report, opts, start);
        return kExitInfeasible;
    }
    report["status"] = "solved";
    report["solution"] = vertex_solution_json(*result);
    ordered_json cert;
    cert["lp_value"] = full_relaxation_value(instance);
    if (with_oracle) {
        auto opt = oracle::brute_force_pvc(instance);
        cert["oracle_weight"] = format_rational(opt->total_weight);
        cert["ratio"] = to_double(result->total_weight) / to_double(opt->total_weight);
    }
    report["certificates"] = cert;
    emit_report(report, opts, start);
    return kExitSolved;
}

int cmd_solve_pvc_bi(const std::string& path, double epsilon, const ReportOptions& opts) {
    auto start = std::chrono::steady_clock::now();
    const std::string text = read_file(path);
    auto instance = std::get<PvcInstance>(io::parse_instance(text));
    ordered_json report;
    report["instance_digest"] = fnv1a_hex(text);
    report["algorithm"] = "pvc-bicriteria";
    report["parameters"] = ordered_json{{"epsilon", epsilon}};
    BiCriteriaResult result;
    try {
        result = solve_bicriteria(instance, epsilon);
    } catch (const Error& e) {
        if (std::string(e.what()).find("LP infeasible") != std::string::npos) {
            report["status"] = "infeasible";
            emit_report(report, opts, start);
            return kExitInfeasible;
        }
        throw;
    }
    report["status"] = "solved";
    VertexSolution eval = evaluate_vertex_solution(instance, result.selected);
    report["solution"] = vertex_solution_json(eval);
    ordered_json cert;
    cert["lp_value"] = result.lp_value;
    cert["cost_bound"] = result.cost_bound;
    cert["cost_bound_ok"] = result.cost_bound_ok;
    cert["coverage_bound_ok"] = result.coverage_bound_ok;
    report["certificates"] = cert;
    emit_report(report, opts, start);
    return kExitSolved;
}

int cmd_solve_pec(const std::string& path, const ReportOptions& opts) {
    auto start = std::chrono::steady_clock::now();
    const std::string text = read_file(path);
    auto instance = std::get<PecInstance>(io::parse_instance(text));
    ordered_json report;
    report["instance_digest"] = fnv1a_hex(text);
    report["algorithm"] = "pec-exact";
    report["parameters"] = ordered_json::object();
    auto result = solve_pec(instance);
    if (!result) {
        report["status"] = "infeasible";
        emit_report(report, opts, start);
        return kExitInfeasible;
    }
    report["status"] = "solved";
    report["solution"] = edge_solution_json(*result);
    report["certificates"] = ordered_json::object();
    emit_report(report, opts, start);
    return kExitSolved;
}

int cmd_oracle(const std::string& path, const ReportOptions& opts) {
    auto start = std::chrono::steady_clock::now();
    const std::string text = read_file(path);
    io::AnyInstance any = io::parse_instance(text);
    ordered_json report;
    report["instance_digest"] = fnv1a_hex(text);
    report["algorithm"] = "brute-force-oracle";
    report["parameters"] = ordered_json::object();
    int exit_code = kExitSolved;
    if (auto* pvc = std::get_if<PvcInstance>(&any)) {
        auto result = oracle::brute_force_pvc(*pvc);
        if (result) {
            report["status"] = "solved";
            report["solution"] = vertex_solution_json(*result);
        } else {
            report["status"] = "infeasible";
            exit_code = kExitInfeasible;
        }
    } else if (auto* pec = std::get_if<PecInstance>(&any)) {
        auto result = oracle::brute_force_pec(*pec);
        if (result) {
            report["status"] = "solved";
            report["solution"] = edge_solution_json(*result);
        } else {
            report["status"] = "infeasible";
            exit_code = kExitInfeasible;
        }
    } else if (auto* wppec = std::get_if<WppecInstance>(&any)) {
        bool yes = decide_wppec_bruteforce(*wppec);
        report["status"] = yes ? "solved" : "infeasible";
        report["decision"] = yes;
        if (!yes) exit_code = kExitInfeasible;
    } else {
        bool yes = decide_knapsack_bruteforce(std::get<KnapsackInstance>(any));
        report["status"] = yes ? "solved" : "infeasible";
        report["decision"] = yes;
        if (!yes) exit_code = kExitInfeasible;
    }
    emit_report(report, opts, start);
    return exit_code;
}

int cmd_reduce_knapsack(const std::string& path) {
    const std::string text = read_file(path);
    auto k = std::get<KnapsackInstance>(io::parse_instance(text));
    std::cout << io::serialize_instance(knapsack_to_wppec(k)) << "\n";
    return kExitSolved;
}

int cmd_verify(const std::string& instance_path, const std::string& solution_path,
               const ReportOptions& opts) {
    auto start = std::chrono::steady_clock::now();
    const std::string text = read_file(instance_path);
    io::AnyInstance any = io::parse_instance(text);
    ordered_json sol_doc = ordered_json::parse(read_file(solution_path));
    if (sol_doc.contains("solution")) sol_doc = sol_doc["solution"]; // accept full reports
    if (!sol_doc.contains("selected"))
        throw Error("solution file carries no 'selected' array");
    std::vector<int> selected = sol_doc["selected"].get<std::vector<int>>();

    ordered_json report;
    report["instance_digest"] = fnv1a_hex(text);
    report["algorithm"] = "verify";
    report["parameters"] = ordered_json::object();
    bool feasible = false;
    if (auto* pvc = std::get_if<PvcInstance>(&any)) {
        VertexSolution sol = evaluate_vertex_solution(*pvc, selected);
        feasible = sol.feasible;
        report["solution"] = vertex_solution_json(sol);
    } else if (auto* pec = std::get_if<PecInstance>(&any)) {
        EdgeSolution sol = evaluate_edge_solution(*pec, selected);
        feasible = sol.feasible;
        report["solution"] = edge_solution_json(sol);
    } else {
        throw Error("verify supports pvc and pec instances");
    }
    report["status"] = feasible ? "solved" : "infeasible";
    emit_report(report, opts, start);
    return feasible ? kExitSolved : kExitInfeasible;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Solvers for partition-constrained covering problems"};
    app.require_subcommand(1);
    ReportOptions opts;
    app.add_flag("--timing", opts.timing, "include wall-clock duration in reports");

    std::string path;
    std::string solution_path;
    int jobs = 1;
    bool with_oracle = false;
    double epsilon = 0.25;

    auto* solve = app.add_subcommand("solve", "run a solver on an instance file");
    solve->require_subcommand(1);
    auto* pvc2 = solve->add_subcommand("pvc2", "LP-guessing 2-approximation");
    pvc2->add_option("file", path)->required();
    pvc2->add_option("--jobs", jobs, "parallel guess workers")->check(CLI::PositiveNumber);
    pvc2->add_flag("--with-oracle", with_oracle, "also run the brute-force oracle");
    auto* pvcbi = solve->add_subcommand("pvc-bi", "threshold-rounding bi-criteria");
    pvcbi->add_option("file", path)->required();
    pvcbi->add_option("--epsilon", epsilon)->required();
    auto* pec = solve->add_subcommand("pec", "exact partition edge cover");
    pec->add_option("file", path)->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force reference solver");
    oracle_cmd->add_option("file", path)->required();

    auto* reduce = app.add_subcommand("reduce", "instance transformations");
    auto* red_knap = reduce->add_subcommand("knapsack", "knapsack -> wppec decision instance");
    red_knap->add_option("file", path)->required();

    int gen_n = 6;
    int gen_omega = 1;
    long long gen_weight_max = 10;
    long long gen_profit_max = 10;
    long long gen_cost_max = 10;
    std::string gen_density = "1/2";
    std::string gen_threshold_fraction = "1/2";
    std::string gen_requirement_fraction = "1/2";
    uint64_t gen_seed = 1;
    auto* gen = app.add_subcommand("gen", "seeded random instance generators");
    gen->require_subcommand(1);
    auto* gen_pvc = gen->add_subcommand("pvc");
    gen_pvc->add_option("--n", gen_n);
    gen_pvc->add_option("--density", gen_density);
    gen_pvc->add_option("--omega", gen_omega);
    gen_pvc->add_option("--weight-max", gen_weight_max);
    gen_pvc->add_option("--profit-max", gen_profit_max);
    gen_pvc->add_option("--threshold-fraction", gen_threshold_fraction);
    gen_pvc->add_option("--seed", gen_seed);
    auto* gen_pec = gen->add_subcommand("pec");
    gen_pec->add_option("--n", gen_n);
    gen_pec->add_option("--density", gen_density);
    gen_pec->add_option("--omega", gen_omega);
    gen_pec->add_option("--cost-max", gen_cost_max);
    gen_pec->add_option("--requirement-fraction", gen_requirement_fraction);
    gen_pec->add_option("--seed", gen_seed);

    auto* verify = app.add_subcommand("verify", "re-check a solution against an instance");
    verify->add_option("instance", path)->required();
    verify->add_option("solution", solution_path)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (pvc2->parsed()) return cmd_solve_pvc2(path, jobs, with_oracle, opts);
        if (pvcbi->parsed()) return cmd_solve_pvc_bi(path, epsilon, opts);
        if (pec->parsed()) return cmd_solve_pec(path, opts);
        if (oracle_cmd->parsed()) return cmd_oracle(path, opts);
        if (red_knap->parsed()) return cmd_reduce_knapsack(path);
        if (gen_pvc->parsed()) {
            std::cout << io::serialize_instance(io::generate_random_pvc(
                             gen_n, parse_rational(gen_density), gen_omega, gen_weight_max,
                             gen_profit_max, parse_rational(gen_threshold_fraction), gen_seed))
                      << "\n";
            return kExitSolved;
        }
        if (gen_pec->parsed()) {
            std::cout << io::serialize_instance(io::generate_random_pec(
                             gen_n, parse_rational(gen_density), gen_omega, gen_cost_max,
                             parse_rational(gen_requirement_fraction), gen_seed))
                      << "\n";
            return kExitSolved;
        }
        if (verify->parsed()) return cmd_verify(path, solution_path, opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    std::cerr << "error: no subcommand\n";
    return kExitError;
}
