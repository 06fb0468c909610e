// SPDX-License-Identifier: Apache-2.0
#include "hsrpa/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "hsrpa/errors.hpp"

namespace hsrpa {

double mean_power_error(const Scenario& s, const PowerProfile& profile, int intervals) {
    const double T = s.traversal_time();
    const double total = integrate_piecewise([&](double t) { return profile.power_at(t); }, 0.0,
                                             T, profile.breakpoints, intervals);
    return total / T / s.avg_power_w - 1.0;
}

double pf_utility(const Scenario& s, const PowerProfile& profile, int intervals) {
    for (std::size_t i = 0; i < profile.times.size(); ++i) {
        if (capacity(s, profile.powers[i], profile.times[i]) <= 0.0) {
            return -std::numeric_limits<double>::infinity();
        }
    }
    bool zero_rate = false;
    const double value = integrate_piecewise(
        [&](double t) {
            const double c = capacity(s, profile.power_at(t), t);
            if (c <= 0.0) {
                zero_rate = true;
                return 0.0;
            }
            return std::log(c);
        },
        0.0, s.traversal_time(), profile.breakpoints, intervals);
    return zero_rate ? -std::numeric_limits<double>::infinity() : value;
}

double pf_criterion_gap(const Scenario& s, const PowerProfile& p, const PowerProfile& q,
                        int intervals) {
    std::vector<double> breaks = p.breakpoints;
    breaks.insert(breaks.end(), q.breakpoints.begin(), q.breakpoints.end());
    std::sort(breaks.begin(), breaks.end());
    return integrate_piecewise(
        [&](double t) {
            const double cp = capacity(s, p.power_at(t), t);
            if (!(cp > 0.0)) {
                throw DomainError("pf_criterion_gap: reference profile has zero capacity at tau=" +
                                  std::to_string(t));
            }
            return (capacity(s, q.power_at(t), t) - cp) / cp;
        },
        0.0, s.traversal_time(), breaks, intervals);
}

PowerProfile random_feasible_profile(const Scenario& s, std::uint64_t seed,
                                     std::size_t grid_points) {
    s.validate();
    const double T = s.traversal_time();
    constexpr int segments = kRandomProfileKnots - 1;

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> draw(0.0, 1.0);
    std::vector<double> knot_t(kRandomProfileKnots);
    std::vector<double> knot_p(kRandomProfileKnots);
    for (int k = 0; k < kRandomProfileKnots; ++k) {
        knot_t[k] = T * k / segments;
        knot_p[k] = draw(rng);
    }
    knot_t.back() = T;

    // Trapezoid sum is the exact integral of a piecewise-linear function.
    double area = 0.0;
    for (int k = 0; k < segments; ++k) {
        area += 0.5 * (knot_p[k] + knot_p[k + 1]) * (knot_t[k + 1] - knot_t[k]);
    }
    if (!(area > 0.0)) {
        std::fill(knot_p.begin(), knot_p.end(), 1.0);
        area = T;
    }
    const double scale = s.avg_power_w * T / area;
    for (double& p : knot_p) p *= scale;

    PowerProfile knots;
    knots.times = knot_t;
    knots.powers = knot_p;

    PowerProfile profile;
    profile.scheme = Scheme::custom;
    profile.breakpoints.assign(knot_t.begin() + 1, knot_t.end() - 1);
    profile.power_fn = [knots = std::move(knots)](double t) { return knots.power_at(t); };
    profile.times.resize(grid_points);
    for (std::size_t i = 0; i < grid_points; ++i) {
        profile.times[i] = T * static_cast<double>(i) / static_cast<double>(grid_points - 1);
    }
    profile.times.back() = T;
    for (double t : profile.times) profile.powers.push_back(profile.power_fn(t));
    return profile;
}

SchemeMetrics compute_metrics(const Scenario& s, const PowerProfile& profile, int intervals) {
    SchemeMetrics m;
    m.scheme = profile.scheme;
    m.total_service = channel_service(s, profile, s.traversal_time(), intervals);
    m.pf_utility = pf_utility(s, profile, intervals);
    m.mean_power_error = mean_power_error(s, profile, intervals);

    std::vector<double> rates;
    rates.reserve(profile.times.size());
    for (std::size_t i = 0; i < profile.times.size(); ++i) {
        rates.push_back(capacity(s, profile.powers[i], profile.times[i]));
    }
    const auto [lo, hi] = std::minmax_element(rates.begin(), rates.end());
    m.min_rate = *lo;
    m.max_rate = *hi;
    const double n = static_cast<double>(rates.size());
    const double mean = std::accumulate(rates.begin(), rates.end(), 0.0) / n;
    double ss = 0.0;
    for (double r : rates) ss += (r - mean) * (r - mean);
    m.rate_cv = mean > 0.0 ? std::sqrt(ss / n) / mean : 0.0;
    return m;
}

std::vector<SchemeRun> run_schemes(const Scenario& s, const SolverSettings& settings,
                                   const std::vector<Scheme>& schemes) {
    std::vector<SchemeRun> runs;
    runs.reserve(schemes.size());
    for (Scheme scheme : schemes) {
        SchemeRun run;
        try {
            SolveReport report;
            run.profile = allocate(scheme, s, settings, &report);
            run.metrics = compute_metrics(s, run.profile, settings.quadrature_intervals);
            if (scheme == Scheme::pf_epsilon_optimal) {
                run.metrics.converged = report.converged;
                run.report = std::move(report);
            }
        } catch (const std::exception& e) {
            run.profile = PowerProfile{};
            run.profile.scheme = scheme;
            run.metrics = SchemeMetrics{};
            run.metrics.scheme = scheme;
            run.metrics.converged = false;
            run.metrics.error = e.what();
        }
        runs.push_back(std::move(run));
    }
    return runs;
}

std::vector<SchemeMetrics> compare_schemes(const Scenario& s, const SolverSettings& settings) {
    std::vector<SchemeMetrics> rows;
    for (auto& run : run_schemes(s, settings, allocator_schemes())) {
        rows.push_back(std::move(run.metrics));
    }
    return rows;
}

}  // namespace hsrpa
