// SPDX-License-Identifier: Apache-2.0
#include "hsrpa/allocators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hsrpa/errors.hpp"

namespace hsrpa {

namespace {

std::vector<double> uniform_grid(double horizon, std::size_t points) {
    std::vector<double> times(points);
    const double denom = static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) {
        times[i] = horizon * static_cast<double>(i) / denom;
    }
    times.back() = horizon;
    return times;
}

PowerProfile make_profile(Scheme scheme, const Scenario& s, const SolverSettings& settings,
                          std::function<double(double)> fn, std::vector<double> breakpoints = {}) {
    PowerProfile profile;
    profile.scheme = scheme;
    profile.times = uniform_grid(s.traversal_time(), settings.grid_points);
    for (double bp : breakpoints) {
        const auto it = std::lower_bound(profile.times.begin(), profile.times.end(), bp);
        if (it == profile.times.end() || *it != bp) profile.times.insert(it, bp);
    }
    profile.powers.reserve(profile.times.size());
    for (double t : profile.times) profile.powers.push_back(fn(t));
    profile.power_fn = std::move(fn);
    profile.breakpoints = std::move(breakpoints);
    return profile;
}

void prepare(const Scenario& s, const SolverSettings& settings) {
    s.validate();
    settings.validate();
}

double integral_of_noise(const Scenario& s, double upper, int intervals) {
    if (upper <= 0.0) return 0.0;
    return numerics::integrate([&](double t) { return noise_power(s, t); },
                               {0.0, upper, intervals});
}

// integral_0^t1 (N(t1) - N(tau)) dtau - Pbar T; increasing in t1 when N is.
double cutoff_residual(const Scenario& s, double t1, int intervals) {
    const double T = s.traversal_time();
    return t1 * noise_power(s, t1) - integral_of_noise(s, t1, intervals) - s.avg_power_w * T;
}

}  // namespace

void SolverSettings::validate() const {
    if (!(lambda_step_init > 0.0) || !std::isfinite(lambda_step_init)) {
        throw ValidationError("lambda_step_init", "must be finite and > 0");
    }
    if (!(power_ratio_tol > 0.0 && power_ratio_tol < 1.0)) {
        throw ValidationError("power_ratio_tol", "must lie in (0, 1)");
    }
    if (max_iterations < 1) throw ValidationError("max_iterations", "must be >= 1");
    if (grid_points < 2) throw ValidationError("grid_points", "must be >= 2");
    if (quadrature_intervals < 2 || quadrature_intervals % 2 != 0) {
        throw ValidationError("quadrature_intervals", "must be even and >= 2");
    }
    if (root_tol_s && !(*root_tol_s > 0.0)) throw ValidationError("root_tol", "must be > 0");
}

PowerProfile constant_pa(const Scenario& s, const SolverSettings& settings) {
    prepare(s, settings);
    const double p = s.avg_power_w;
    return make_profile(Scheme::constant, s, settings, [p](double) { return p; });
}

PowerProfile inversion_pa(const Scenario& s, const SolverSettings& settings) {
    prepare(s, settings);
    const double T = s.traversal_time();
    const double k0 = s.avg_power_w * T / integral_of_noise(s, T, settings.quadrature_intervals);
    auto profile = make_profile(Scheme::inversion, s, settings,
                                [s, k0](double t) { return k0 * noise_power(s, t); });
    profile.metadata.k0 = k0;
    return profile;
}

double waterfilling_cutoff(const Scenario& s, const SolverSettings& settings) {
    prepare(s, settings);
    const double T = s.traversal_time();
    const int n = settings.quadrature_intervals;
    const double g_T = cutoff_residual(s, T, n);
    if (g_T <= 0.0) return T;
    auto g = [&](double t1) { return cutoff_residual(s, t1, n); };
    try {
        return numerics::find_root_monotone(g, 0.0, T, settings.root_tol(T));
    } catch (const BracketError& e) {
        throw std::logic_error(std::string("waterfilling cutoff not bracketed: ") + e.what());
    }
}

PowerProfile waterfilling_pa(const Scenario& s, const SolverSettings& settings) {
    const double T = s.traversal_time();
    const double t1 = waterfilling_cutoff(s, settings);

    double level;
    std::vector<double> breakpoints;
    if (t1 < T) {
        level = noise_power(s, t1);
        breakpoints.push_back(t1);
    } else {
        level = s.avg_power_w + integral_of_noise(s, T, settings.quadrature_intervals) / T;
    }

    auto fn = [s, level, t1](double t) {
        if (t >= t1 && t1 < s.traversal_time()) return 0.0;
        return std::max(level - noise_power(s, t), 0.0);
    };
    auto profile = make_profile(Scheme::waterfilling, s, settings, fn, std::move(breakpoints));
    profile.metadata.water_level = level;
    profile.metadata.cutoff_s = t1;
    return profile;
}

double inverse_lambda_apx(const Scenario& s) {
    s.validate();
    const double n_edge = noise_power(s, s.traversal_time());
    return (s.avg_power_w + n_edge) * std::log1p(s.avg_power_w / n_edge);
}

double pf_power(const Scenario& s, double lambda, double tau) {
    const double n = noise_power(s, tau);
    const double w = numerics::lambert_w0(1.0 / (lambda * n));
    // 1/(lambda w) - N rewritten with 1/(lambda w) = N e^w to avoid cancellation.
    return n * std::expm1(w);
}

PowerProfile pf_near_optimal_pa(const Scenario& s, const SolverSettings& settings) {
    prepare(s, settings);
    const double lambda = 1.0 / inverse_lambda_apx(s);
    auto profile = make_profile(Scheme::pf_near_optimal, s, settings,
                                [s, lambda](double t) { return pf_power(s, lambda, t); });
    profile.metadata.lambda = lambda;
    return profile;
}

double total_power_for_lambda(const Scenario& s, double lambda, int intervals,
                              std::size_t* clamped) {
    if (!(lambda > 0.0)) throw DomainError("total_power_for_lambda: lambda must be > 0");
    std::size_t count = 0;
    const double total = numerics::integrate(
        [&](double t) {
            const double p = pf_power(s, lambda, t);
            if (p < 0.0) {
                ++count;
                return 0.0;
            }
            return p;
        },
        {0.0, s.traversal_time(), intervals});
    if (clamped) *clamped = count;
    return total;
}

TotalPower total_power_for_lambda(const Scenario& s, double lambda,
                                  const SolverSettings& settings) {
    prepare(s, settings);
    TotalPower out;
    out.total = total_power_for_lambda(s, lambda, settings.quadrature_intervals,
                                       &out.clamped_samples);
    return out;
}

EpsilonOptimalResult pf_epsilon_optimal_pa(const Scenario& s, const SolverSettings& settings) {
    prepare(s, settings);
    const double budget = s.avg_power_w * s.traversal_time();
    const int n = settings.quadrature_intervals;
    auto ratio = [&](double lambda) { return total_power_for_lambda(s, lambda, n) / budget - 1.0; };

    double lambda = 1.0 / inverse_lambda_apx(s);
    double r = ratio(lambda);
    double step = settings.lambda_step_init;

    SolveReport report;
    report.lambda_trajectory.push_back({0, lambda, r, step});

    std::size_t iter = 0;
    while (std::abs(r) > settings.power_ratio_tol && iter < settings.max_iterations) {
        ++iter;
        const double sign = r >= 0.0 ? 1.0 : -1.0;
        const double next_inverse = 1.0 / lambda - sign * step;
        if (!(next_inverse > 0.0)) {
            step /= 2.0;
            report.lambda_trajectory.push_back({iter, lambda, r, step});
            continue;
        }
        lambda = 1.0 / next_inverse;
        r = ratio(lambda);
        const double new_sign = r >= 0.0 ? 1.0 : -1.0;
        if (new_sign * sign > 0.0) {
            step *= 2.0;
        } else {
            step /= 7.0;
        }
        report.lambda_trajectory.push_back({iter, lambda, r, step});
    }

    report.lambda_final = lambda;
    report.iterations = iter;
    report.final_power_ratio = r;
    report.converged = std::abs(r) <= settings.power_ratio_tol;

    auto profile = make_profile(Scheme::pf_epsilon_optimal, s, settings,
                                [s, lambda](double t) { return pf_power(s, lambda, t); });
    profile.metadata.lambda = lambda;
    return {std::move(profile), std::move(report)};
}

PowerProfile allocate(Scheme scheme, const Scenario& s, const SolverSettings& settings,
                      SolveReport* report) {
    switch (scheme) {
        case Scheme::constant: return constant_pa(s, settings);
        case Scheme::inversion: return inversion_pa(s, settings);
        case Scheme::waterfilling: return waterfilling_pa(s, settings);
        case Scheme::pf_near_optimal: return pf_near_optimal_pa(s, settings);
        case Scheme::pf_epsilon_optimal: {
            auto result = pf_epsilon_optimal_pa(s, settings);
            if (report) *report = std::move(result.report);
            return std::move(result.profile);
        }
        case Scheme::custom: break;
    }
    throw DomainError("allocate: no allocator for scheme 'custom'");
}

double calibrate_noise(const Scenario& s, double target_cutoff_s, const SolverSettings& settings) {
    Scenario probe = s;
    probe.noise_psd_w_per_hz = 1.0;  // placeholder so validation of other fields runs
    probe.validate();
    const double T = probe.traversal_time();
    if (!(target_cutoff_s > 0.0 && target_cutoff_s < T)) {
        std::ostringstream os;
        os << "must lie in (0, T=" << T << ") (got " << target_cutoff_s << ")";
        throw ValidationError("target_cutoff_s", os.str());
    }

    // Larger noise steepens N(tau), pulling the cutoff earlier.
    auto cutoff_error = [&](double log10_psd) {
        probe.noise_psd_w_per_hz = std::pow(10.0, log10_psd);
        return waterfilling_cutoff(probe, settings) - target_cutoff_s;
    };
    const double lo = std::log10(kCalibrationMinPsd);
    const double hi = std::log10(kCalibrationMaxPsd);
    try {
        const double log10_psd = numerics::find_root_monotone(cutoff_error, lo, hi, 1e-13);
        return std::pow(10.0, log10_psd);
    } catch (const BracketError& e) {
        std::ostringstream os;
        os << "cutoff " << target_cutoff_s << " s not reachable for N0 in [" << kCalibrationMinPsd
           << ", " << kCalibrationMaxPsd << "] W/Hz: achieved cutoffs "
           << e.g_lo() + target_cutoff_s << " s to " << e.g_hi() + target_cutoff_s << " s";
        throw CalibrationError(os.str());
    }
}

}  // namespace hsrpa
