#ifndef PUCS_PROBLEM_HPP
#define PUCS_PROBLEM_HPP

#include <vector>

#include "pucs/ucs_set.hpp"

namespace pucs {

/// A feasibility-seeking instance: find a point in the intersection of
/// m unions C_1, ..., C_m. The wrap-around copy C_{m+1} = C_1 used by
/// the sweep is realized by index arithmetic, never by duplicated data.
class Problem {
  public:
    Problem(std::size_t dimension, std::vector<UcsSet> sets);

    std::size_t dimension() const { return dimension_; }
    const std::vector<UcsSet>& sets() const { return sets_; }
    std::size_t set_count() const { return sets_.size(); }
    /// 1-based access; index m+1 wraps to C_1.
    const UcsSet& set(int index_1based) const {
        int m = static_cast<int>(sets_.size());
        return sets_[static_cast<std::size_t>((index_1based - 1) % m)];
    }

  private:
    std::size_t dimension_;
    std::vector<UcsSet> sets_;
};

}  // namespace pucs

#endif  // PUCS_PROBLEM_HPP
