#ifndef PUCS_VERIFIER_HPP
#define PUCS_VERIFIER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "pucs/problem.hpp"

namespace pucs {

/// Exhaustive nearest-piece search. All pieces within tie_tol of the
/// minimum are reported, so ties carry every attaining index.
struct BruteForceProjection {
    std::vector<int> piece_indices;  ///< 1-based, ascending, >= 1 entries
    double distance = 0.0;
};

/// Independent oracle for project_ucs: evaluates every piece with direct
/// distance formulas (no projection step), then takes the argmin.
BruteForceProjection brute_force_ucs_projection(const UcsSet& set, const Vec& x,
                                                double tie_tol = 1e-9);

struct OracleConfig {
    std::uint64_t combo_budget = 1000000;
    int oracle_max_sweeps = 5000;
    double eps_residual = 1e-8;
    double feasibility_tol = 1e-6;
};

/// Feasibility verdict for one selection of pieces, one per union.
/// The verdict is numerical (cyclic-projection residuals), not a
/// certificate.
struct ComboReport {
    std::vector<int> combo;       ///< (j_1, ..., j_m), 1-based
    bool feasible = false;
    std::optional<Vec> witness;
    double final_gap = 0.0;       ///< max piece distance at the final point
    int sweeps_used = 0;
};

/// Runs plain cyclic alternating projections on every combination of
/// convex pieces, one per union. Throws BudgetError when the number of
/// combinations exceeds the budget.
std::vector<ComboReport> enumerate_feasible_combos(const Problem& problem,
                                                   const OracleConfig& config = {});

struct ConditionEntry {
    int set_index = 0;    ///< i, 1-based
    int piece_index = 0;  ///< j, 1-based
    bool constant = false;
    int theta = 0;        ///< observed theta(i, j); 0 when non-constant
    double min_margin = 0.0;
    int samples = 0;
};

/// Sampling evidence for the nearest-piece uniqueness condition.
/// A passing report is evidence, not proof.
struct ConditionReport {
    std::vector<ConditionEntry> entries;
    bool holds = false;   ///< every entry constant with min_margin > margin_tol
    double margin_tol = 0.0;
    int samples_per_piece = 0;
    std::uint64_t seed = 0;
};

/// For each set C_i and each piece j, samples points in C_{i,j} and
/// records the nearest piece of C_{i+1} (index i+1 wraps to 1) and its
/// margin. Requires every piece to be bounded (sampleable).
ConditionReport check_condition(const Problem& problem, int samples_per_piece = 1000,
                                double margin_tol = 1e-6, std::uint64_t seed = 0);

/// Outcome of walking a segment through the nearest-piece map.
struct SegmentWalkReport {
    int tie_count = 0;
    bool ties_observed = false;
    bool constant_index = false;
    std::vector<int> indices_seen;  ///< distinct selected indices, in first-seen order
};

/// Walks the segment [a, b] in `steps` equally spaced points and records
/// the brute-force selected piece at each. With no ties observed along
/// the walk, a non-constant index indicates an implementation bug.
SegmentWalkReport check_singleton_projection_property(const UcsSet& set, const Vec& a,
                                                      const Vec& b, int steps,
                                                      double tie_tol = 1e-9);

}  // namespace pucs

#endif  // PUCS_VERIFIER_HPP
