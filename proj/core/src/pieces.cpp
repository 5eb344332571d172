#include "pucs/pieces.hpp"

#include <algorithm>
#include <cmath>

namespace pucs {

namespace {

void check_point(const Vec& v, const char* what) {
    if (v.empty()) throw ValidationError(std::string(what) + ": zero-dimensional point");
    if (!all_finite(v)) throw ValidationError(std::string(what) + ": non-finite coordinate");
}

}  // namespace

ConvexPiece::ConvexPiece(Ball b) : shape_(std::move(b)) {
    const auto& ball = std::get<Ball>(shape_);
    check_point(ball.center, "ball center");
    if (!(ball.radius > 0.0) || !std::isfinite(ball.radius))
        throw ValidationError("ball radius must be positive and finite");
}

ConvexPiece::ConvexPiece(Box b) : shape_(std::move(b)) {
    const auto& box = std::get<Box>(shape_);
    check_point(box.lower, "box lower");
    check_point(box.upper, "box upper");
    if (box.lower.size() != box.upper.size())
        throw ValidationError("box lower/upper dimension mismatch");
    for (std::size_t i = 0; i < box.lower.size(); ++i)
        if (box.lower[i] > box.upper[i])
            throw ValidationError("box lower exceeds upper in coordinate " + std::to_string(i + 1));
}

ConvexPiece::ConvexPiece(Halfspace h) : shape_(std::move(h)) {
    const auto& hs = std::get<Halfspace>(shape_);
    check_point(hs.normal, "halfspace normal");
    if (!std::isfinite(hs.offset)) throw ValidationError("halfspace offset must be finite");
    if (norm_sq(hs.normal) == 0.0) throw ValidationError("halfspace normal must be nonzero");
}

ConvexPiece::ConvexPiece(Hyperplane h) : shape_(std::move(h)) {
    const auto& hp = std::get<Hyperplane>(shape_);
    check_point(hp.normal, "hyperplane normal");
    if (!std::isfinite(hp.offset)) throw ValidationError("hyperplane offset must be finite");
    if (norm_sq(hp.normal) == 0.0) throw ValidationError("hyperplane normal must be nonzero");
}

std::size_t ConvexPiece::dimension() const {
    return std::visit(
        [](const auto& s) -> std::size_t {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Ball>) return s.center.size();
            else if constexpr (std::is_same_v<T, Box>) return s.lower.size();
            else return s.normal.size();
        },
        shape_);
}

bool ConvexPiece::is_bounded() const {
    return std::holds_alternative<Ball>(shape_) || std::holds_alternative<Box>(shape_);
}

std::string ConvexPiece::shape_name() const {
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Ball>) return "ball";
            else if constexpr (std::is_same_v<T, Box>) return "box";
            else if constexpr (std::is_same_v<T, Halfspace>) return "halfspace";
            else return "hyperplane";
        },
        shape_);
}

Vec project_piece(const ConvexPiece& piece, const Vec& x) {
    require_dimension(x, piece.dimension(), "project_piece");
    return std::visit(
        [&x](const auto& s) -> Vec {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Ball>) {
                Vec d = sub(x, s.center);
                double n = norm(d);
                if (n <= s.radius) return x;
                return add(s.center, scale(s.radius / n, d));
            } else if constexpr (std::is_same_v<T, Box>) {
                Vec p(x.size());
                for (std::size_t i = 0; i < x.size(); ++i)
                    p[i] = std::clamp(x[i], s.lower[i], s.upper[i]);
                return p;
            } else if constexpr (std::is_same_v<T, Halfspace>) {
                double excess = dot(s.normal, x) - s.offset;
                if (excess <= 0.0) return x;
                return sub(x, scale(excess / norm_sq(s.normal), s.normal));
            } else {  // Hyperplane
                double excess = dot(s.normal, x) - s.offset;
                if (excess == 0.0) return x;
                return sub(x, scale(excess / norm_sq(s.normal), s.normal));
            }
        },
        piece.shape());
}

double dist_piece(const ConvexPiece& piece, const Vec& x) {
    return dist(x, project_piece(piece, x));
}

bool contains(const ConvexPiece& piece, const Vec& x, double tol) {
    return dist_piece(piece, x) <= tol;
}

Vec witness_point(const ConvexPiece& piece) {
    return std::visit(
        [](const auto& s) -> Vec {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Ball>) {
                return s.center;
            } else if constexpr (std::is_same_v<T, Box>) {
                Vec mid(s.lower.size());
                for (std::size_t i = 0; i < mid.size(); ++i)
                    mid[i] = 0.5 * (s.lower[i] + s.upper[i]);
                return mid;
            } else {
                return scale(s.offset / norm_sq(s.normal), s.normal);
            }
        },
        piece.shape());
}

Vec sample_in_piece(const ConvexPiece& piece, Rng& rng) {
    if (const auto* ball = std::get_if<Ball>(&piece.shape())) {
        // Gaussian direction scaled by radius * U^(1/n).
        std::size_t n = ball->center.size();
        Vec dir(n);
        double len = 0.0;
        do {
            for (std::size_t i = 0; i < n; ++i) dir[i] = rng.gaussian();
            len = norm(dir);
        } while (len == 0.0);
        double radial = ball->radius * std::pow(rng.uniform(), 1.0 / static_cast<double>(n));
        return add(ball->center, scale(radial / len, dir));
    }
    if (const auto* box = std::get_if<Box>(&piece.shape())) {
        Vec p(box->lower.size());
        for (std::size_t i = 0; i < p.size(); ++i)
            p[i] = rng.uniform(box->lower[i], box->upper[i]);
        return p;
    }
    throw SamplingError("uniform sampling unsupported for unbounded piece (" +
                        piece.shape_name() + ")");
}

}  // namespace pucs
