#ifndef SEXTIC_TEST_UTIL_HPP
#define SEXTIC_TEST_UTIL_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

inline bool close_rel(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

inline bool close_abs(double a, double b, double tol) {
    return std::abs(a - b) <= tol;
}

// value rounds to the given decimals as printed (used against the
// fixed-precision reference rows)
inline bool rounds_to(double value, double printed, int decimals) {
    const double scale = std::pow(10.0, decimals);
    return std::abs(value - printed) <= 0.5 / scale + 1e-12;
}

#endif
