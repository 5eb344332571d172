#include "pucs/report_io.hpp"

#include <cmath>

#include <json.hpp>

#include "pucs/problem_io.hpp"

namespace pucs {

namespace {

using ordered_json = nlohmann::ordered_json;

// JSON has no inf/nan literals; keep them observable as strings.
ordered_json number(double v) {
    if (std::isfinite(v)) return v;
    if (std::isnan(v)) return "nan";
    return v > 0 ? "inf" : "-inf";
}

ordered_json vec_json(const Vec& v) {
    ordered_json arr = ordered_json::array();
    for (double x : v) arr.push_back(number(x));
    return arr;
}

}  // namespace

std::string solve_report_to_json(const SolveReport& report, const Problem& problem) {
    ordered_json j;
    j["dimension"] = problem.dimension();
    j["sets"] = ordered_json::array();
    for (const UcsSet& set : problem.sets()) {
        ordered_json s;
        s["name"] = set.name();
        s["pieces"] = set.piece_count();
        j["sets"].push_back(s);
    }
    j["pruned"] = report.pruned;
    j["retained"] = report.retained;
    j["all_pruned"] = report.all_pruned;
    j["tie_violations"] = report.total_tie_violations;

    j["orbits"] = ordered_json::array();
    for (const OrbitState& orbit : report.orbits) {
        ordered_json o;
        o["r"] = orbit.r;
        o["status"] = to_string(orbit.status);
        o["first_sweep_return_piece"] = orbit.tau_history.size() > problem.set_count()
                                            ? orbit.tau_history[problem.set_count()].second
                                            : orbit.last_tau();
        o["sweeps_used"] = orbit.sweeps_used;
        o["last_sweep_residual"] = number(orbit.last_sweep_residual);
        o["tie_violations"] = orbit.tie_violations;
        o["final_point"] = vec_json(orbit.current);
        ordered_json residuals = ordered_json::array();
        for (double r : orbit.residual_trace) residuals.push_back(number(r));
        o["residual_trace"] = residuals;
        j["orbits"].push_back(o);
    }

    j["solutions"] = ordered_json::array();
    for (const auto& [r, point] : report.solutions) {
        ordered_json s;
        s["r"] = r;
        s["point"] = vec_json(point);
        j["solutions"].push_back(s);
    }
    return j.dump(2) + "\n";
}

std::string trace_to_csv(const SolveReport& report, const Problem& problem) {
    std::string out = "orbit,sweep,k,i,tau";
    for (std::size_t i = 1; i <= problem.dimension(); ++i) out += ",x" + std::to_string(i);
    out += ",step";
    for (std::size_t i = 1; i <= problem.set_count(); ++i) out += ",dist_C" + std::to_string(i);
    out += "\n";

    for (const TraceRow& row : report.trace) {
        out += std::to_string(row.orbit) + ',' + std::to_string(row.sweep) + ',' +
               std::to_string(row.k) + ',' + std::to_string(row.control) + ',' +
               std::to_string(row.tau);
        for (double x : row.point) out += ',' + format_double(x);
        out += ',' + format_double(row.step);
        for (double d : row.set_distances) out += ',' + format_double(d);
        out += '\n';
    }
    return out;
}

std::string combo_reports_to_json(const std::vector<ComboReport>& reports) {
    ordered_json j;
    j["note"] = "feasibility decided numerically from cyclic-projection residuals, not certified";
    j["combos"] = ordered_json::array();
    int feasible = 0;
    for (const ComboReport& report : reports) {
        ordered_json c;
        c["combo"] = report.combo;
        c["feasible"] = report.feasible;
        if (report.witness) c["witness"] = vec_json(*report.witness);
        c["final_gap"] = number(report.final_gap);
        c["sweeps_used"] = report.sweeps_used;
        j["combos"].push_back(c);
        if (report.feasible) ++feasible;
    }
    j["feasible_count"] = feasible;
    return j.dump(2) + "\n";
}

std::string condition_report_to_json(const ConditionReport& report) {
    ordered_json j;
    j["note"] = "sampling evidence, not a certificate";
    j["holds"] = report.holds;
    j["margin_tol"] = number(report.margin_tol);
    j["samples_per_piece"] = report.samples_per_piece;
    j["seed"] = report.seed;
    j["entries"] = ordered_json::array();
    for (const ConditionEntry& entry : report.entries) {
        ordered_json e;
        e["set"] = entry.set_index;
        e["piece"] = entry.piece_index;
        e["constant"] = entry.constant;
        if (entry.constant) e["theta"] = entry.theta;
        else e["theta"] = "non-constant";
        e["min_margin"] = number(entry.min_margin);
        e["samples"] = entry.samples;
        j["entries"].push_back(e);
    }
    return j.dump(2) + "\n";
}

}  // namespace pucs
