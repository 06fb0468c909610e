// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hsrpa/channel.hpp"
#include "hsrpa/profile.hpp"

namespace hsrpa {

struct SolverSettings {
    /// Initial step applied to 1/lambda (watts).
    double lambda_step_init = 0.01;
    /// Exit threshold on |P_lambda / (Pbar T) - 1|.
    double power_ratio_tol = 1e-3;
    std::size_t max_iterations = 10'000;
    std::size_t grid_points = 2048;
    int quadrature_intervals = numerics::kDefaultIntervals;
    /// Bisection tolerance on cutoff times; defaults to 1e-10 T.
    std::optional<double> root_tol_s;

    void validate() const;
    double root_tol(double horizon) const { return root_tol_s.value_or(1e-10 * horizon); }
};

struct LambdaIterate {
    std::size_t iteration = 0;
    double lambda = 0.0;
    double power_ratio = 0.0;  // r_dP after this iterate
    double step = 0.0;         // step on 1/lambda used for the next update
};

struct SolveReport {
    double lambda_final = 0.0;
    std::size_t iterations = 0;
    double final_power_ratio = 0.0;
    bool converged = false;
    /// Entry 0 is the starting point lambda_apx.
    std::vector<LambdaIterate> lambda_trajectory;
};

struct TotalPower {
    double total = 0.0;                // W s
    std::size_t clamped_samples = 0;   // quadrature nodes where P was clamped to 0
};

PowerProfile constant_pa(const Scenario& s, const SolverSettings& settings = {});

/// Keeps P/N constant: P = k0 N with k0 = Pbar T / integral of N.
PowerProfile inversion_pa(const Scenario& s, const SolverSettings& settings = {});

/// P = max(mu - N, 0). With an interior cutoff t1, mu = N(t1) where t1
/// solves integral_0^t1 (N(t1) - N) = Pbar T; otherwise mu = Pbar + mean N.
PowerProfile waterfilling_pa(const Scenario& s, const SolverSettings& settings = {});

/// Cutoff time t1 of the water-filling allocation (T if power never reaches 0).
double waterfilling_cutoff(const Scenario& s, const SolverSettings& settings = {});

/// 1/lambda_apx = (Pbar + N(T)) ln(1 + Pbar / N(T)).
double inverse_lambda_apx(const Scenario& s);

/// Stationary point of the log-utility Lagrangian for multiplier `lambda`:
/// P = 1 / (lambda W0(1 / (lambda N))) - N. Not clamped.
double pf_power(const Scenario& s, double lambda, double tau);

/// Closed-form proportional-fair allocation at lambda_apx.
PowerProfile pf_near_optimal_pa(const Scenario& s, const SolverSettings& settings = {});

double total_power_for_lambda(const Scenario& s, double lambda, int intervals,
                              std::size_t* clamped = nullptr);
TotalPower total_power_for_lambda(const Scenario& s, double lambda,
                                  const SolverSettings& settings = {});

struct EpsilonOptimalResult {
    PowerProfile profile;
    SolveReport report;
};

/// Adaptive-step search for the multiplier meeting the power budget within
/// settings.power_ratio_tol. Never throws on non-convergence.
EpsilonOptimalResult pf_epsilon_optimal_pa(const Scenario& s, const SolverSettings& settings = {});

/// Dispatches to the allocator for `scheme`. `report` receives the solve
/// report for pf_epsilon_optimal.
PowerProfile allocate(Scheme scheme, const Scenario& s, const SolverSettings& settings = {},
                      SolveReport* report = nullptr);

/// Noise PSD giving a water-filling cutoff of `target_cutoff_s`. The input
/// scenario's noise_psd_w_per_hz is ignored.
double calibrate_noise(const Scenario& s, double target_cutoff_s,
                       const SolverSettings& settings = {});

inline constexpr double kCalibrationMinPsd = 1e-25;
inline constexpr double kCalibrationMaxPsd = 1e-5;

}  // namespace hsrpa
