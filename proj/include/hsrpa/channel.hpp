// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "hsrpa/numerics.hpp"

namespace hsrpa {

struct PowerProfile;

/// Physical setup of one base-station cell crossed by a train. All fields
/// are SI: Hz, W, m, m/s, W/Hz. Unit conversion happens at the config
/// boundary.
struct Scenario {
    double bandwidth_hz = 0.0;
    double avg_power_w = 0.0;
    double d0_m = 0.0;
    double cell_radius_m = 0.0;
    double velocity_mps = 0.0;
    double pathloss_exp = 0.0;
    double noise_psd_w_per_hz = 0.0;
    /// Multiplier applied to every capacity value: 1 reports nats/s,
    /// 1/ln 2 reports bits/s. No allocation depends on it.
    double rate_scale = 1.0;

    /// Time to travel from the cell centre to the cell edge, R0 / v.
    double traversal_time() const { return cell_radius_m / velocity_mps; }

    /// Throws ValidationError naming the first bad field.
    void validate() const;
};

/// Cumulative service S(t) sampled at `times`.
struct ServiceCurve {
    std::vector<double> times;
    std::vector<double> service;
};

double distance(const Scenario& s, double tau);

/// Effective noise N(tau) = W N0 d(tau)^alpha.
double noise_power(const Scenario& s, double tau);

/// Instantaneous capacity W ln(1 + p / N(tau)), scaled by s.rate_scale.
double capacity(const Scenario& s, double p, double tau);

/// Integral of capacity under `profile` over [0, t]. Integration is split at
/// the profile's breakpoints so kinks never fall inside a Simpson panel.
double channel_service(const Scenario& s, const PowerProfile& profile, double t,
                       int intervals = numerics::kDefaultIntervals);

/// S(t) at every sample time of `profile`, accumulated piecewise.
ServiceCurve service_curve(const Scenario& s, const PowerProfile& profile,
                           const std::vector<double>& times,
                           int intervals_per_step = 16);

/// Integral of g over [a, b] split at the sorted `breakpoints` lying strictly
/// inside (a, b). Each piece gets `intervals` Simpson panels.
template <class F>
double integrate_piecewise(F&& g, double a, double b, const std::vector<double>& breakpoints,
                           int intervals = numerics::kDefaultIntervals) {
    if (a == b) return 0.0;
    double total = 0.0;
    double left = a;
    for (double bp : breakpoints) {
        if (bp <= left || bp >= b) continue;
        total += numerics::integrate(g, {left, bp, intervals});
        left = bp;
    }
    total += numerics::integrate(g, {left, b, intervals});
    return total;
}

}  // namespace hsrpa
