// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstddef>
#include <sstream>
#include <utility>

#include "hsrpa/errors.hpp"

namespace hsrpa::numerics {

inline constexpr int kDefaultIntervals = 4096;

/// Closed interval [lower, upper] split into an even number of Simpson panels.
struct QuadratureGrid {
    double lower = 0.0;
    double upper = 1.0;
    int intervals = kDefaultIntervals;

    void validate() const;
};

/// Principal branch of the Lambert W function for z >= 0.
double lambert_w0(double z);

/// Composite Simpson rule over `grid`. Throws EvaluationError on a
/// non-finite sample.
template <class F>
double integrate(F&& f, const QuadratureGrid& grid) {
    grid.validate();
    const int n = grid.intervals;
    const double h = (grid.upper - grid.lower) / n;

    auto eval = [&](double x) {
        const double y = f(x);
        if (!std::isfinite(y)) {
            std::ostringstream os;
            os << "non-finite integrand value " << y << " at x=" << x;
            throw EvaluationError(os.str(), x);
        }
        return y;
    };

    double odd = 0.0;
    double even = 0.0;
    for (int i = 1; i < n; ++i) {
        const double x = grid.lower + i * h;
        if (i % 2 == 1) {
            odd += eval(x);
        } else {
            even += eval(x);
        }
    }
    return h / 3.0 * (eval(grid.lower) + 4.0 * odd + 2.0 * even + eval(grid.upper));
}

/// Bisection on a monotone `g` with a sign change over [lo, hi]; stops when
/// the bracket width is <= tol. Returns whichever final endpoint has the
/// smaller |g| (an exact zero is returned immediately).
template <class G>
double find_root_monotone(G&& g, double lo, double hi, double tol) {
    if (!(lo <= hi)) {
        throw DomainError("find_root_monotone: require lo <= hi");
    }
    if (!(tol > 0.0)) {
        throw DomainError("find_root_monotone: tol must be positive");
    }
    double g_lo = g(lo);
    double g_hi = g(hi);
    if (g_lo == 0.0) return lo;
    if (g_hi == 0.0) return hi;
    if ((g_lo > 0.0) == (g_hi > 0.0)) {
        std::ostringstream os;
        os << "find_root_monotone: no sign change, g(" << lo << ")=" << g_lo
           << ", g(" << hi << ")=" << g_hi;
        throw BracketError(os.str(), g_lo, g_hi);
    }
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // bracket at floating-point resolution
        const double g_mid = g(mid);
        if (g_mid == 0.0) return mid;
        if ((g_mid > 0.0) == (g_lo > 0.0)) {
            lo = mid;
            g_lo = g_mid;
        } else {
            hi = mid;
            g_hi = g_mid;
        }
    }
    return std::abs(g_lo) <= std::abs(g_hi) ? lo : hi;
}

}  // namespace hsrpa::numerics
