#ifndef PUCS_LINALG_HPP
#define PUCS_LINALG_HPP

#include <cmath>
#include <cstddef>
#include <vector>

#include "pucs/errors.hpp"

namespace pucs {

/// A point of the iterate space: a finite-dimensional real vector.
using Vec = std::vector<double>;

inline double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm_sq(const Vec& a) { return dot(a, a); }

inline double norm(const Vec& a) { return std::sqrt(norm_sq(a)); }

inline Vec sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec scale(double t, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = t * a[i];
    return r;
}

inline double dist(const Vec& a, const Vec& b) { return norm(sub(a, b)); }

inline bool all_finite(const Vec& a) {
    for (double v : a)
        if (!std::isfinite(v)) return false;
    return true;
}

inline void require_dimension(const Vec& a, std::size_t n, const char* what) {
    if (a.size() != n)
        throw DimensionError(std::string(what) + ": expected dimension " + std::to_string(n) +
                             ", got " + std::to_string(a.size()));
}

}  // namespace pucs

#endif  // PUCS_LINALG_HPP
