#ifndef PUCS_PIECES_HPP
#define PUCS_PIECES_HPP

#include <cstddef>
#include <string>
#include <variant>

#include "pucs/linalg.hpp"
#include "pucs/rng.hpp"

namespace pucs {

/// Closed Euclidean ball { y : ||y - center|| <= radius }.
struct Ball {
    Vec center;
    double radius;
};

/// Axis-aligned box { y : lower <= y <= upper componentwise }.
struct Box {
    Vec lower;
    Vec upper;
};

/// { y : <normal, y> <= offset }.
struct Halfspace {
    Vec normal;
    double offset;
};

/// { y : <normal, y> = offset }.
struct Hyperplane {
    Vec normal;
    double offset;
};

/// One elementary closed convex set with a closed-form orthogonal projection.
/// Parameters are validated at construction; operations assume validity.
class ConvexPiece {
  public:
    using Variant = std::variant<Ball, Box, Halfspace, Hyperplane>;

    explicit ConvexPiece(Ball b);
    explicit ConvexPiece(Box b);
    explicit ConvexPiece(Halfspace h);
    explicit ConvexPiece(Hyperplane h);

    std::size_t dimension() const;
    const Variant& shape() const { return shape_; }
    bool is_bounded() const;
    std::string shape_name() const;

  private:
    Variant shape_;
};

/// Nearest point of the piece to x. Returns x itself when x already
/// lies in the piece.
Vec project_piece(const ConvexPiece& piece, const Vec& x);

/// Euclidean distance from x to the piece. Computed as
/// ||x - project_piece(piece, x)|| so the two agree bitwise.
double dist_piece(const ConvexPiece& piece, const Vec& x);

/// True iff dist_piece(piece, x) <= tol.
bool contains(const ConvexPiece& piece, const Vec& x, double tol);

/// A deterministic interior/boundary point of the piece: ball center,
/// box midpoint, (offset/||normal||^2) * normal for halfspace and hyperplane.
Vec witness_point(const ConvexPiece& piece);

/// Uniform sample from a bounded piece (ball or box).
/// Throws SamplingError for halfspaces and hyperplanes.
Vec sample_in_piece(const ConvexPiece& piece, Rng& rng);

}  // namespace pucs

#endif  // PUCS_PIECES_HPP
