#ifndef PUCS_PROBLEM_IO_HPP
#define PUCS_PROBLEM_IO_HPP

#include <string>
#include <utility>
#include <vector>

#include "pucs/problem.hpp"

namespace pucs {

/// A parsed problem file: the instance, optional per-orbit initial
/// points, and any disjointness warnings found during the audit.
struct ParsedProblem {
    Problem problem;
    std::vector<std::pair<int, Vec>> initial_points;
    std::vector<std::string> warnings;
};

/// Parses the line-oriented problem format:
///
///   # comment
///   dimension 2
///   set C1
///     ball center 0 1 radius 1
///     box lower 0 0 upper 1 1
///     halfspace normal 1 0 offset 0
///     hyperplane normal 0 1 offset 2
///   set C2
///     ball center 0 -1 radius 1
///   initial 1 0.5 1
///
/// Indentation is not significant; `initial r x1 .. xn` overrides the
/// starting point of orbit r. Throws ParseError with the offending line.
ParsedProblem parse_problem(const std::string& text);

/// Canonical serialization; floats carry 17 significant digits so that
/// parse(serialize(p)) reproduces every binary64 value exactly.
std::string serialize_problem(const Problem& problem,
                              const std::vector<std::pair<int, Vec>>& initial_points = {});

/// "%.17g" rendering used by every serializer in the project.
std::string format_double(double v);

}  // namespace pucs

#endif  // PUCS_PROBLEM_IO_HPP
