// SPDX-License-Identifier: Apache-2.0
#include "hsrpa/numerics.hpp"

#include <cmath>
#include <sstream>

namespace hsrpa::numerics {

void QuadratureGrid::validate() const {
    if (!(lower < upper)) {
        std::ostringstream os;
        os << "QuadratureGrid: lower (" << lower << ") must be < upper (" << upper << ")";
        throw DomainError(os.str());
    }
    if (intervals < 2 || intervals % 2 != 0) {
        throw DomainError("QuadratureGrid: intervals must be even and >= 2");
    }
}

double lambert_w0(double z) {
    if (std::isnan(z) || z < 0.0) {
        throw DomainError("lambert_w0: argument must be >= 0");
    }
    if (z == 0.0) return 0.0;
    if (std::isinf(z)) return z;

    double w;
    if (z < 0.25) {
        w = z * (1.0 - z);
    } else if (z <= M_E) {
        w = std::log1p(z) * (1.0 - std::log1p(std::log1p(z)) / (2.0 + std::log1p(z)));
    } else {
        const double lz = std::log(z);
        w = lz - std::log(lz);
    }

    // Halley on f(w) = w e^w - z.
    for (int iter = 0; iter < 64; ++iter) {
        const double ew = std::exp(w);
        const double f = w * ew - z;
        const double wp1 = w + 1.0;
        const double step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
        w -= step;
        if (std::abs(step) <= 1e-15 * (1.0 + std::abs(w))) break;
    }
    return w;
}

}  // namespace hsrpa::numerics
