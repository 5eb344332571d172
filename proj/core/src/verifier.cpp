#include "pucs/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pucs/rng.hpp"

namespace pucs {

namespace {

// Direct distance formulas, deliberately not routed through
// project_piece so the oracle stays an independent computation.
double oracle_piece_distance(const ConvexPiece& piece, const Vec& x) {
    return std::visit(
        [&x](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Ball>) {
                return std::max(0.0, dist(x, s.center) - s.radius);
            } else if constexpr (std::is_same_v<T, Box>) {
                double sq = 0.0;
                for (std::size_t i = 0; i < x.size(); ++i) {
                    double g = std::max({0.0, s.lower[i] - x[i], x[i] - s.upper[i]});
                    sq += g * g;
                }
                return std::sqrt(sq);
            } else if constexpr (std::is_same_v<T, Halfspace>) {
                return std::max(0.0, dot(s.normal, x) - s.offset) / norm(s.normal);
            } else {  // Hyperplane
                return std::abs(dot(s.normal, x) - s.offset) / norm(s.normal);
            }
        },
        piece.shape());
}

// Smallest and second-smallest piece distances plus the smallest argmin.
struct NearestTwo {
    int argmin = 1;
    double best = 0.0;
    double second = std::numeric_limits<double>::infinity();
};

NearestTwo nearest_two(const UcsSet& set, const Vec& x) {
    NearestTwo out;
    out.best = oracle_piece_distance(set.pieces()[0], x);
    for (std::size_t s = 1; s < set.piece_count(); ++s) {
        double d = oracle_piece_distance(set.pieces()[s], x);
        if (d < out.best) {
            out.second = out.best;
            out.best = d;
            out.argmin = static_cast<int>(s) + 1;
        } else if (d < out.second) {
            out.second = d;
        }
    }
    return out;
}

}  // namespace

BruteForceProjection brute_force_ucs_projection(const UcsSet& set, const Vec& x, double tie_tol) {
    require_dimension(x, set.dimension(), "brute_force_ucs_projection");
    std::vector<double> distances(set.piece_count());
    for (std::size_t s = 0; s < set.piece_count(); ++s)
        distances[s] = oracle_piece_distance(set.pieces()[s], x);
    double best = *std::min_element(distances.begin(), distances.end());

    BruteForceProjection out;
    out.distance = best;
    for (std::size_t s = 0; s < distances.size(); ++s)
        if (distances[s] <= best + tie_tol) out.piece_indices.push_back(static_cast<int>(s) + 1);
    return out;
}

std::vector<ComboReport> enumerate_feasible_combos(const Problem& problem,
                                                   const OracleConfig& config) {
    std::uint64_t total = 1;
    for (const UcsSet& set : problem.sets()) {
        total *= set.piece_count();
        if (total > config.combo_budget)
            throw BudgetError("combination count exceeds budget of " +
                              std::to_string(config.combo_budget));
    }

    int m = static_cast<int>(problem.set_count());
    std::vector<ComboReport> reports;
    reports.reserve(total);

    std::vector<int> combo(static_cast<std::size_t>(m), 1);
    for (std::uint64_t c = 0; c < total; ++c) {
        std::vector<const ConvexPiece*> pieces(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i)
            pieces[static_cast<std::size_t>(i)] =
                &problem.sets()[static_cast<std::size_t>(i)].piece(combo[static_cast<std::size_t>(i)]);

        // Cyclic alternating projections on the selected convex pieces,
        // visiting C_2, ..., C_m, C_1 per sweep like the solver does.
        Vec x = witness_point(*pieces[0]);
        double residual = std::numeric_limits<double>::infinity();
        double prev_residual = residual;
        int sweeps = 0;
        for (int sweep = 1; sweep <= config.oracle_max_sweeps; ++sweep) {
            residual = 0.0;
            for (int step = 1; step <= m; ++step) {
                const ConvexPiece& target = *pieces[static_cast<std::size_t>(step % m)];
                Vec next = project_piece(target, x);
                residual = std::max(residual, dist(x, next));
                x = std::move(next);
            }
            sweeps = sweep;
            if (residual <= config.eps_residual) break;
            // A positive residual that stopped moving means the orbit is
            // alternating across a gap; no point in burning the budget.
            if (sweep > 2 && std::abs(residual - prev_residual) <= 1e-15) break;
            prev_residual = residual;
        }

        ComboReport report;
        report.combo = combo;
        report.sweeps_used = sweeps;
        double worst = 0.0;
        for (int i = 0; i < m; ++i)
            worst = std::max(worst, dist_piece(*pieces[static_cast<std::size_t>(i)], x));
        report.final_gap = worst;
        report.feasible = residual <= config.eps_residual && worst <= config.feasibility_tol;
        if (report.feasible) report.witness = x;
        reports.push_back(std::move(report));

        // Next combination, last index fastest.
        for (int i = m - 1; i >= 0; --i) {
            auto idx = static_cast<std::size_t>(i);
            if (combo[idx] < static_cast<int>(problem.sets()[idx].piece_count())) {
                ++combo[idx];
                break;
            }
            combo[idx] = 1;
        }
    }
    return reports;
}

ConditionReport check_condition(const Problem& problem, int samples_per_piece, double margin_tol,
                                std::uint64_t seed) {
    ConditionReport report;
    report.margin_tol = margin_tol;
    report.samples_per_piece = samples_per_piece;
    report.seed = seed;
    report.holds = true;

    int m = static_cast<int>(problem.set_count());
    for (int i = 1; i <= m; ++i) {
        const UcsSet& current = problem.set(i);
        const UcsSet& next = problem.set(i + 1);  // wraps to C_1 for i = m
        for (int j = 1; j <= static_cast<int>(current.piece_count()); ++j) {
            Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(i),
                                     static_cast<std::uint64_t>(j));
            ConditionEntry entry;
            entry.set_index = i;
            entry.piece_index = j;
            entry.samples = samples_per_piece;
            entry.constant = true;
            entry.min_margin = std::numeric_limits<double>::infinity();

            int observed = 0;
            for (int s = 0; s < samples_per_piece; ++s) {
                Vec x = sample_in_piece(current.piece(j), rng);
                NearestTwo nearest = nearest_two(next, x);
                if (s == 0) observed = nearest.argmin;
                else if (nearest.argmin != observed) entry.constant = false;
                entry.min_margin = std::min(entry.min_margin, nearest.second - nearest.best);
            }
            entry.theta = entry.constant ? observed : 0;
            if (!entry.constant || !(entry.min_margin > margin_tol)) report.holds = false;
            report.entries.push_back(entry);
        }
    }
    return report;
}

SegmentWalkReport check_singleton_projection_property(const UcsSet& set, const Vec& a,
                                                      const Vec& b, int steps, double tie_tol) {
    require_dimension(a, set.dimension(), "segment start");
    require_dimension(b, set.dimension(), "segment end");
    if (steps < 2) throw ValidationError("segment walk needs at least 2 steps");

    SegmentWalkReport report;
    for (int s = 0; s < steps; ++s) {
        double t = static_cast<double>(s) / static_cast<double>(steps - 1);
        Vec x = add(a, scale(t, sub(b, a)));
        BruteForceProjection bf = brute_force_ucs_projection(set, x, tie_tol);
        if (bf.piece_indices.size() > 1) ++report.tie_count;
        int selected = bf.piece_indices.front();
        if (std::find(report.indices_seen.begin(), report.indices_seen.end(), selected) ==
            report.indices_seen.end())
            report.indices_seen.push_back(selected);
    }
    report.ties_observed = report.tie_count > 0;
    report.constant_index = report.indices_seen.size() == 1;
    return report;
}

}  // namespace pucs
