#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pucs/problem_io.hpp"
#include "pucs/report_io.hpp"
#include "pucs/solver.hpp"
#include "pucs/verifier.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

void print_warnings(const pucs::ParsedProblem& parsed) {
    for (const std::string& w : parsed.warnings) std::cerr << "warning: " << w << "\n";
}

int run_solve(const std::string& file, const pucs::SolverConfig& config,
              const std::string& trace_path, const std::string& report_path) {
    pucs::ParsedProblem parsed = pucs::parse_problem(read_file(file));
    print_warnings(parsed);

    pucs::SolverConfig cfg = config;
    cfg.record_trace = !trace_path.empty();
    pucs::SolveReport report = pucs::solve(parsed.problem, cfg, parsed.initial_points);

    auto join = [](const std::vector<int>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i)
            s += (i ? "," : "") + std::to_string(v[i]);
        return s.empty() ? "-" : s;
    };
    std::cout << "orbits: " << report.orbits.size() << "  pruned (R): {" << join(report.pruned)
              << "}  retained: {" << join(report.retained) << "}\n";
    for (const pucs::OrbitState& orbit : report.orbits) {
        std::cout << "  orbit " << orbit.r << ": " << pucs::to_string(orbit.status)
                  << "  sweeps=" << orbit.sweeps_used
                  << "  residual=" << pucs::format_double(orbit.last_sweep_residual);
        if (orbit.status == pucs::OrbitStatus::Converged) {
            std::cout << "  point=(";
            for (std::size_t i = 0; i < orbit.current.size(); ++i)
                std::cout << (i ? "," : "") << pucs::format_double(orbit.current[i]);
            std::cout << ")";
        }
        std::cout << "\n";
    }
    if (report.total_tie_violations > 0)
        std::cout << "warning: " << report.total_tie_violations
                  << " nearest-piece tie(s) observed; the uniqueness condition is violated on "
                     "this trajectory\n";

    if (!trace_path.empty()) write_file(trace_path, pucs::trace_to_csv(report, parsed.problem));
    if (!report_path.empty())
        write_file(report_path, pucs::solve_report_to_json(report, parsed.problem));

    return report.solutions.empty() ? 2 : 0;
}

int run_verify(const std::string& file, bool combos, bool condition, int samples,
               double margin_tol, std::uint64_t seed, const std::string& report_path) {
    pucs::ParsedProblem parsed = pucs::parse_problem(read_file(file));
    print_warnings(parsed);
    if (!combos && !condition) combos = condition = true;

    nlohmann::ordered_json doc;
    if (combos) {
        std::vector<pucs::ComboReport> reports = pucs::enumerate_feasible_combos(parsed.problem);
        int feasible = 0;
        for (const pucs::ComboReport& r : reports) feasible += r.feasible ? 1 : 0;
        std::cout << "combos: " << reports.size() << " enumerated, " << feasible << " feasible\n";
        doc["combos"] = nlohmann::ordered_json::parse(pucs::combo_reports_to_json(reports));
    }
    if (condition) {
        pucs::ConditionReport report =
            pucs::check_condition(parsed.problem, samples, margin_tol, seed);
        std::cout << "condition: " << (report.holds ? "holds" : "does NOT hold")
                  << " (sampling evidence, " << samples << " samples/piece, seed " << seed
                  << ")\n";
        for (const pucs::ConditionEntry& e : report.entries) {
            std::cout << "  theta(" << e.set_index << "," << e.piece_index << ") = "
                      << (e.constant ? std::to_string(e.theta) : std::string("non-constant"))
                      << "  min_margin=" << pucs::format_double(e.min_margin) << "\n";
        }
        doc["condition"] = nlohmann::ordered_json::parse(pucs::condition_report_to_json(report));
    }
    if (!report_path.empty()) write_file(report_path, doc.dump(2) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pucs - feasibility seeking for unions of convex sets"};
    app.require_subcommand(1);

    std::string file;
    pucs::SolverConfig config;
    std::string trace_path;
    std::string report_path;
    std::uint64_t seed = 0;

    CLI::App* solve =
        app.add_subcommand("solve", "run the sweep-prune-project solver on a problem file");
    solve->add_option("problem-file", file, "problem file")->required();
    solve->add_option("--eps", config.eps_residual, "sweep-residual convergence threshold");
    solve->add_option("--feas-tol", config.feasibility_tol, "feasibility distance threshold");
    solve->add_option("--max-sweeps", config.max_sweeps, "sweep budget per orbit");
    solve->add_option("--tie-tol", config.tie_tol, "nearest-piece tie tolerance");
    solve->add_option("--stall-window", config.stall_window, "stall detection window (sweeps)");
    solve->add_option("--trace", trace_path, "write per-step CSV trace here");
    solve->add_option("--report", report_path, "write structured JSON report here");
    solve->add_option("--seed", seed, "seed (reserved; the solver itself is deterministic)");

    bool combos = false;
    bool condition = false;
    int samples = 1000;
    double margin_tol = 1e-6;

    CLI::App* verify =
        app.add_subcommand("verify", "run the brute-force oracles and condition checker");
    verify->add_option("problem-file", file, "problem file")->required();
    verify->add_flag("--combos", combos, "enumerate piece combinations for feasibility");
    verify->add_flag("--condition", condition, "sample-check the nearest-piece uniqueness condition");
    verify->add_option("--samples", samples, "samples per piece for the condition check");
    verify->add_option("--margin-tol", margin_tol, "minimum acceptable nearest-piece margin");
    verify->add_option("--seed", seed, "root seed for the samplers");
    verify->add_option("--report", report_path, "write structured JSON report here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed())
            return run_solve(file, config, trace_path, report_path);
        return run_verify(file, combos, condition, samples, margin_tol, seed, report_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
