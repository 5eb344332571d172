#include "pucs/ucs_set.hpp"

#include <algorithm>
#include <limits>

namespace pucs {

UcsSet::UcsSet(std::string name, std::vector<ConvexPiece> pieces)
    : name_(std::move(name)), pieces_(std::move(pieces)) {
    if (pieces_.empty()) throw ValidationError("UCS set '" + name_ + "' has no pieces");
    std::size_t n = pieces_.front().dimension();
    for (std::size_t s = 1; s < pieces_.size(); ++s)
        if (pieces_[s].dimension() != n)
            throw DimensionError("UCS set '" + name_ + "': piece " + std::to_string(s + 1) +
                                 " has dimension " + std::to_string(pieces_[s].dimension()) +
                                 ", expected " + std::to_string(n));
}

UcsProjection project_ucs(const UcsSet& set, const Vec& x, double tie_tol) {
    require_dimension(x, set.dimension(), "project_ucs");

    int best = 1;
    double best_dist = dist_piece(set.pieces()[0], x);
    double second = std::numeric_limits<double>::infinity();
    for (std::size_t s = 1; s < set.piece_count(); ++s) {
        double d = dist_piece(set.pieces()[s], x);
        if (d < best_dist) {
            second = best_dist;
            best_dist = d;
            best = static_cast<int>(s) + 1;
        } else if (d < second) {
            second = d;
        }
    }

    UcsProjection out;
    out.piece_index = best;
    out.nearest_distance = best_dist;
    out.margin = second - best_dist;  // +inf for a single piece
    out.is_tie = set.piece_count() >= 2 && out.margin <= tie_tol;
    out.point = project_piece(set.piece(best), x);
    return out;
}

double dist_ucs(const UcsSet& set, const Vec& x) {
    require_dimension(x, set.dimension(), "dist_ucs");
    double best = dist_piece(set.pieces()[0], x);
    for (std::size_t s = 1; s < set.piece_count(); ++s)
        best = std::min(best, dist_piece(set.pieces()[s], x));
    return best;
}

bool gap_is_exact(const ConvexPiece& a, const ConvexPiece& b) {
    bool balls = std::holds_alternative<Ball>(a.shape()) && std::holds_alternative<Ball>(b.shape());
    bool boxes = std::holds_alternative<Box>(a.shape()) && std::holds_alternative<Box>(b.shape());
    return balls || boxes;
}

double gap(const ConvexPiece& a, const ConvexPiece& b, int max_iters, double tol) {
    if (a.dimension() != b.dimension())
        throw DimensionError("gap: piece dimensions differ");

    const auto* ball_a = std::get_if<Ball>(&a.shape());
    const auto* ball_b = std::get_if<Ball>(&b.shape());
    if (ball_a && ball_b) {
        double d = dist(ball_a->center, ball_b->center) - ball_a->radius - ball_b->radius;
        return std::max(0.0, d);
    }

    const auto* box_a = std::get_if<Box>(&a.shape());
    const auto* box_b = std::get_if<Box>(&b.shape());
    if (box_a && box_b) {
        double sq = 0.0;
        for (std::size_t i = 0; i < box_a->lower.size(); ++i) {
            double g = std::max({0.0, box_a->lower[i] - box_b->upper[i],
                                 box_b->lower[i] - box_a->upper[i]});
            sq += g * g;
        }
        return std::sqrt(sq);
    }

    // Alternating projections between the two pieces.
    Vec x = witness_point(a);
    Vec y = project_piece(b, x);
    for (int it = 0; it < max_iters; ++it) {
        Vec x_next = project_piece(a, y);
        double step = dist(x_next, x);
        x = std::move(x_next);
        y = project_piece(b, x);
        if (step < tol) break;
    }
    return dist(x, y);
}

std::vector<DisjointViolation> check_disjoint(const UcsSet& set) {
    std::vector<DisjointViolation> report;
    for (std::size_t s = 0; s + 1 < set.piece_count(); ++s) {
        for (std::size_t t = s + 1; t < set.piece_count(); ++t) {
            const ConvexPiece& a = set.pieces()[s];
            const ConvexPiece& b = set.pieces()[t];
            double g = gap(a, b);
            if (!(g > 0.0)) {
                report.push_back({static_cast<int>(s) + 1, static_cast<int>(t) + 1, g,
                                  !gap_is_exact(a, b)});
            }
        }
    }
    return report;
}

}  // namespace pucs
