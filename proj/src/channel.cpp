// SPDX-License-Identifier: Apache-2.0
#include "hsrpa/channel.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hsrpa/profile.hpp"

namespace hsrpa {

namespace {

void require_positive(double value, const char* key) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        std::ostringstream os;
        os << "must be finite and > 0 (got " << value << ")";
        throw ValidationError(key, os.str());
    }
}

void check_time(const Scenario& s, double tau, const char* op) {
    const double T = s.traversal_time();
    // A few ulps of slack so grid points computed as i*h land inside [0, T].
    if (!(tau >= 0.0) || tau > T * (1.0 + 1e-14)) {
        std::ostringstream os;
        os << op << ": tau=" << tau << " outside [0, " << T << "]";
        throw DomainError(os.str());
    }
}

}  // namespace

void Scenario::validate() const {
    require_positive(bandwidth_hz, "bandwidth_hz");
    require_positive(avg_power_w, "avg_power_w");
    require_positive(d0_m, "d0_m");
    require_positive(cell_radius_m, "cell_radius_m");
    require_positive(velocity_mps, "velocity_mps");
    require_positive(noise_psd_w_per_hz, "noise_psd_w_per_hz");
    require_positive(rate_scale, "rate_scale");
    if (!(pathloss_exp >= 0.0) || !std::isfinite(pathloss_exp)) {
        throw ValidationError("pathloss_exp", "must be finite and >= 0");
    }
    const double T = traversal_time();
    if (!(T > 0.0) || !std::isfinite(T)) {
        throw ValidationError("cell_radius_m", "traversal time R0/v must be finite and > 0");
    }
}

double distance(const Scenario& s, double tau) {
    check_time(s, tau, "distance");
    return std::hypot(s.d0_m, s.velocity_mps * tau);
}

double noise_power(const Scenario& s, double tau) {
    check_time(s, tau, "noise_power");
    const double d2 = s.d0_m * s.d0_m + s.velocity_mps * s.velocity_mps * tau * tau;
    return s.bandwidth_hz * s.noise_psd_w_per_hz * std::pow(d2, 0.5 * s.pathloss_exp);
}

double capacity(const Scenario& s, double p, double tau) {
    if (!(p >= 0.0)) {
        std::ostringstream os;
        os << "capacity: power must be >= 0 (got " << p << ")";
        throw DomainError(os.str());
    }
    return s.rate_scale * s.bandwidth_hz * std::log1p(p / noise_power(s, tau));
}

double channel_service(const Scenario& s, const PowerProfile& profile, double t, int intervals) {
    if (!(t >= 0.0) || t > profile.horizon() * (1.0 + 1e-14)) {
        std::ostringstream os;
        os << "channel_service: t=" << t << " outside profile domain [0, " << profile.horizon()
           << "]";
        throw DomainError(os.str());
    }
    t = std::min(t, profile.horizon());
    auto rate = [&](double tau) { return capacity(s, profile.power_at(tau), tau); };
    return integrate_piecewise(rate, 0.0, t, profile.breakpoints, intervals);
}

ServiceCurve service_curve(const Scenario& s, const PowerProfile& profile,
                           const std::vector<double>& times, int intervals_per_step) {
    ServiceCurve curve;
    curve.times = times;
    curve.service.reserve(times.size());
    auto rate = [&](double tau) { return capacity(s, profile.power_at(tau), tau); };
    double acc = 0.0;
    double prev = 0.0;
    for (double t : times) {
        if (t > prev) {
            acc += integrate_piecewise(rate, prev, t, profile.breakpoints, intervals_per_step);
        }
        curve.service.push_back(acc);
        prev = t;
    }
    return curve;
}

}  // namespace hsrpa
