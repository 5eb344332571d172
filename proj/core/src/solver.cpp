#include "pucs/solver.hpp"

#include <algorithm>

namespace pucs {

std::string to_string(OrbitStatus s) {
    switch (s) {
        case OrbitStatus::Active: return "active";
        case OrbitStatus::Pruned: return "pruned";
        case OrbitStatus::Converged: return "converged";
        case OrbitStatus::InconsistentStall: return "inconsistent-stall";
        case OrbitStatus::Exhausted: return "exhausted";
    }
    return "unknown";
}

int control_index(long k, int m) {
    return static_cast<int>((k - 1) % m) + 1;
}

namespace {

bool is_feasible_point(const Problem& problem, const Vec& x, double tol) {
    for (const UcsSet& set : problem.sets())
        if (dist_ucs(set, x) > tol) return false;
    return true;
}

void append_trace_row(const Problem& problem, const OrbitState& orbit, int sweep, double step,
                      std::vector<TraceRow>* trace) {
    if (!trace) return;
    TraceRow row;
    row.orbit = orbit.r;
    row.sweep = sweep;
    row.k = orbit.k;
    row.control = control_index(orbit.k, static_cast<int>(problem.set_count()));
    row.tau = orbit.last_tau();
    row.point = orbit.current;
    row.step = step;
    row.set_distances.reserve(problem.set_count());
    for (const UcsSet& set : problem.sets())
        row.set_distances.push_back(dist_ucs(set, orbit.current));
    trace->push_back(std::move(row));
}

}  // namespace

std::vector<OrbitState> initialize(const Problem& problem, const SolverConfig& config,
                                   const std::vector<std::pair<int, Vec>>& overrides) {
    const UcsSet& first = problem.sets().front();
    std::vector<OrbitState> orbits(first.piece_count());
    for (std::size_t s = 0; s < first.piece_count(); ++s) {
        OrbitState& orbit = orbits[s];
        orbit.r = static_cast<int>(s) + 1;
        orbit.current = witness_point(first.pieces()[s]);
        orbit.k = 1;
        orbit.tau_history.emplace_back(1, orbit.r);  // tau(r, 1) = r
        orbit.status = OrbitStatus::Active;
    }
    for (const auto& [r, point] : overrides) {
        if (r < 1 || r > static_cast<int>(first.piece_count()))
            throw ValidationError("initial-point override: orbit index " + std::to_string(r) +
                                  " out of range 1.." + std::to_string(first.piece_count()));
        require_dimension(point, problem.dimension(), "initial-point override");
        if (!all_finite(point))
            throw ValidationError("initial-point override for orbit " + std::to_string(r) +
                                  " has non-finite coordinates");
        if (!contains(first.piece(r), point, config.containment_tol))
            throw ValidationError("initial-point override for orbit " + std::to_string(r) +
                                  " lies outside piece " + std::to_string(r) + " of " +
                                  first.name());
        orbits[static_cast<std::size_t>(r) - 1].current = point;
    }
    return orbits;
}

double sweep_step(const Problem& problem, OrbitState& orbit, double tie_tol) {
    int m = static_cast<int>(problem.set_count());
    int i = control_index(orbit.k + 1, m);  // i(m+1) = 1: the appended copy of C_1
    UcsProjection proj = project_ucs(problem.set(i), orbit.current, tie_tol);
    double step = dist(orbit.current, proj.point);
    orbit.current = std::move(proj.point);
    ++orbit.k;
    orbit.tau_history.emplace_back(orbit.k, proj.piece_index);
    if (proj.is_tie) ++orbit.tie_violations;
    return step;
}

std::vector<int> first_sweep(const Problem& problem, std::vector<OrbitState>& orbits,
                             const SolverConfig& config, std::vector<TraceRow>* trace) {
    int m = static_cast<int>(problem.set_count());
    std::vector<int> pruned;
    for (OrbitState& orbit : orbits) {
        double residual = 0.0;
        for (int step = 0; step < m; ++step) {
            double len = sweep_step(problem, orbit, config.tie_tol);
            residual = std::max(residual, len);
            append_trace_row(problem, orbit, 0, len, trace);
        }
        orbit.last_sweep_residual = residual;
        if (orbit.last_tau() != orbit.r) {  // tau(r, m+1) != r
            orbit.status = OrbitStatus::Pruned;
            pruned.push_back(orbit.r);
        }
    }
    return pruned;
}

SolveReport iterate(const Problem& problem, std::vector<OrbitState> orbits,
                    const std::vector<int>& pruned, const SolverConfig& config,
                    std::vector<TraceRow> trace) {
    int m = static_cast<int>(problem.set_count());
    std::vector<TraceRow>* sink = config.record_trace ? &trace : nullptr;

    // The paper re-bases y^1 <- y^{m+1} and resets k. Since m divides
    // k-1 at each sweep boundary, continuing the global counter visits
    // the sets in the same order; k is kept global so traces stay
    // monotone in (r, k).
    for (OrbitState& orbit : orbits) {
        if (orbit.status != OrbitStatus::Active) continue;
        for (int sweep = 1; sweep <= config.max_sweeps; ++sweep) {
            double residual = 0.0;
            for (int step = 0; step < m; ++step) {
                double len = sweep_step(problem, orbit, config.tie_tol);
                residual = std::max(residual, len);
                append_trace_row(problem, orbit, sweep, len, sink);
            }
            orbit.last_sweep_residual = residual;
            orbit.residual_trace.push_back(residual);
            orbit.sweeps_used = sweep;

            if (residual <= config.eps_residual &&
                is_feasible_point(problem, orbit.current, config.feasibility_tol)) {
                orbit.status = OrbitStatus::Converged;
                break;
            }
            if (sweep > config.stall_window) {
                double before =
                    orbit.residual_trace[static_cast<std::size_t>(sweep - 1 - config.stall_window)];
                if (residual > before - config.eps_residual) {
                    orbit.status = OrbitStatus::InconsistentStall;
                    break;
                }
            }
        }
        if (orbit.status == OrbitStatus::Active) orbit.status = OrbitStatus::Exhausted;
    }

    SolveReport report;
    report.pruned = pruned;
    for (const OrbitState& orbit : orbits) {
        if (std::find(pruned.begin(), pruned.end(), orbit.r) == pruned.end())
            report.retained.push_back(orbit.r);
        if (orbit.status == OrbitStatus::Converged)
            report.solutions.emplace_back(orbit.r, orbit.current);
        report.total_tie_violations += orbit.tie_violations;
    }
    report.all_pruned = report.retained.empty();
    report.orbits = std::move(orbits);
    report.trace = std::move(trace);
    return report;
}

SolveReport solve(const Problem& problem, const SolverConfig& config,
                  const std::vector<std::pair<int, Vec>>& overrides) {
    std::vector<OrbitState> orbits = initialize(problem, config, overrides);
    std::vector<TraceRow> trace;
    std::vector<int> pruned =
        first_sweep(problem, orbits, config, config.record_trace ? &trace : nullptr);
    return iterate(problem, std::move(orbits), pruned, config, std::move(trace));
}

}  // namespace pucs
