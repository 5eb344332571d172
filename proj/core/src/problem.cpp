#include "pucs/problem.hpp"

namespace pucs {

Problem::Problem(std::size_t dimension, std::vector<UcsSet> sets)
    : dimension_(dimension), sets_(std::move(sets)) {
    if (dimension_ == 0) throw ValidationError("problem dimension must be positive");
    if (sets_.empty()) throw ValidationError("problem must have at least one set");
    for (std::size_t i = 0; i < sets_.size(); ++i)
        if (sets_[i].dimension() != dimension_)
            throw DimensionError("set " + std::to_string(i + 1) + " ('" + sets_[i].name() +
                                 "') has dimension " + std::to_string(sets_[i].dimension()) +
                                 ", problem declares " + std::to_string(dimension_));
}

}  // namespace pucs
