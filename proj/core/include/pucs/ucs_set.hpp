#ifndef PUCS_UCS_SET_HPP
#define PUCS_UCS_SET_HPP

#include <string>
#include <vector>

#include "pucs/pieces.hpp"

namespace pucs {

/// Result of projecting onto a union: the nearest-piece projection plus
/// enough metadata to observe ties. Piece indices are 1-based throughout.
struct UcsProjection {
    Vec point;
    int piece_index = 0;      ///< 1-based index of the selected (nearest) piece
    double nearest_distance = 0.0;
    double margin = 0.0;      ///< second-smallest piece distance minus smallest;
                              ///< +inf for a single-piece union
    bool is_tie = false;      ///< margin <= tie tolerance and >= 2 pieces
};

/// A finite union of pairwise-disjoint closed convex pieces.
/// Disjointness is audited by check_disjoint, not silently assumed.
class UcsSet {
  public:
    UcsSet(std::string name, std::vector<ConvexPiece> pieces);

    const std::string& name() const { return name_; }
    const std::vector<ConvexPiece>& pieces() const { return pieces_; }
    std::size_t piece_count() const { return pieces_.size(); }
    std::size_t dimension() const { return pieces_.front().dimension(); }
    /// 1-based access matching the indices used in reports.
    const ConvexPiece& piece(int index_1based) const { return pieces_.at(index_1based - 1); }

  private:
    std::string name_;
    std::vector<ConvexPiece> pieces_;
};

/// Nearest-piece projection. Ties are broken by the smallest piece index
/// and flagged via is_tie when two distinct pieces are within tie_tol of
/// the minimum distance.
UcsProjection project_ucs(const UcsSet& set, const Vec& x, double tie_tol);

/// min over pieces of dist_piece; equals project_ucs(...).nearest_distance.
double dist_ucs(const UcsSet& set, const Vec& x);

/// Euclidean gap between two pieces, clamped at 0.
/// Exact for ball-ball and box-box; all other pairs use alternating
/// projections and return a numerical (approximate) gap.
double gap(const ConvexPiece& a, const ConvexPiece& b, int max_iters = 10000,
           double tol = 1e-12);

/// True when gap(a, b) is computed by a closed-form formula.
bool gap_is_exact(const ConvexPiece& a, const ConvexPiece& b);

struct DisjointViolation {
    int first = 0;    ///< 1-based piece indices
    int second = 0;
    double gap = 0.0;
    bool approximate = false;  ///< gap computed numerically, advisory only
};

/// Pairwise-disjointness audit: reports every pair whose gap is not
/// strictly positive. Touching pieces (gap 0) are violations too.
std::vector<DisjointViolation> check_disjoint(const UcsSet& set);

}  // namespace pucs

#endif  // PUCS_UCS_SET_HPP
