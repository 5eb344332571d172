#ifndef PUCS_SOLVER_HPP
#define PUCS_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pucs/problem.hpp"

namespace pucs {

/// Termination thresholds. The underlying iterative process has no
/// termination criteria of its own; these classify finite runs.
struct SolverConfig {
    double eps_residual = 1e-8;    ///< sweep-residual convergence threshold
    int max_sweeps = 10000;        ///< iterate-phase sweep budget per orbit
    double tie_tol = 1e-9;         ///< nearest-piece tie tolerance
    int stall_window = 50;         ///< sweeps without residual progress => stall
    double feasibility_tol = 1e-6; ///< dist threshold for a feasible point
    double containment_tol = 1e-9; ///< tolerance for initial-point containment
    bool record_trace = false;     ///< keep one TraceRow per projection step
};

enum class OrbitStatus { Active, Pruned, Converged, InconsistentStall, Exhausted };

std::string to_string(OrbitStatus s);

/// One projection step of one orbit, as written to CSV traces.
struct TraceRow {
    int orbit = 0;           ///< start-piece index r
    int sweep = 0;           ///< 0 = first sweep, then 1, 2, ...
    long k = 0;              ///< orbit iteration counter after the step
    int control = 0;         ///< i(k), the large set projected onto
    int tau = 0;             ///< piece selected within that set
    Vec point;               ///< iterate after the step
    double step = 0.0;       ///< length of this step
    std::vector<double> set_distances;  ///< dist to each C_i at the new point
};

/// State of the orbit started from piece r of C_1.
struct OrbitState {
    int r = 0;
    Vec current;
    long k = 1;
    std::vector<std::pair<long, int>> tau_history;  ///< (k, tau(r, k))
    double last_sweep_residual = 0.0;
    OrbitStatus status = OrbitStatus::Active;
    long tie_violations = 0;
    int sweeps_used = 0;                   ///< iterate-phase sweeps
    std::vector<double> residual_trace;    ///< per iterate-phase sweep

    /// tau(r, k) for the largest recorded k (the latest selection).
    int last_tau() const { return tau_history.back().second; }
};

struct SolveReport {
    std::vector<OrbitState> orbits;            ///< keyed by r, ascending
    std::vector<int> pruned;                   ///< the set R
    std::vector<int> retained;                 ///< {1..m_1} \ R
    std::vector<std::pair<int, Vec>> solutions; ///< (r, final point) for converged orbits
    bool all_pruned = false;                   ///< R covered every start index
    long total_tie_violations = 0;
    std::vector<TraceRow> trace;               ///< filled when record_trace is set
};

/// Cyclic control sequence i(k) = (k-1) mod m + 1.
int control_index(long k, int m);

/// One orbit per piece of C_1, started at the piece witness point unless
/// overridden. Overrides must lie in their piece within containment_tol.
std::vector<OrbitState> initialize(const Problem& problem, const SolverConfig& config,
                                   const std::vector<std::pair<int, Vec>>& overrides = {});

/// Advances the orbit one projection step: project onto C_{i(k+1)},
/// record tau(r, k+1), increment k. Returns the step length.
double sweep_step(const Problem& problem, OrbitState& orbit, double tie_tol);

/// The first sweep: m steps per orbit, ending with a projection onto C_1.
/// Returns R = { r : tau(r, m+1) != r }; those orbits are marked pruned.
std::vector<int> first_sweep(const Problem& problem, std::vector<OrbitState>& orbits,
                             const SolverConfig& config, std::vector<TraceRow>* trace = nullptr);

/// Re-bases the retained orbits and runs full sweeps until convergence,
/// stall, or sweep exhaustion; assembles the report.
SolveReport iterate(const Problem& problem, std::vector<OrbitState> orbits,
                    const std::vector<int>& pruned, const SolverConfig& config,
                    std::vector<TraceRow> trace = {});

/// initialize -> first_sweep -> iterate. Deterministic given inputs.
SolveReport solve(const Problem& problem, const SolverConfig& config = {},
                  const std::vector<std::pair<int, Vec>>& overrides = {});

}  // namespace pucs

#endif  // PUCS_SOLVER_HPP
