// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hsrpa/allocators.hpp"

namespace hsrpa {

struct SchemeMetrics {
    Scheme scheme = Scheme::custom;
    double total_service = 0.0;  // S(T)
    double pf_utility = 0.0;     // integral of ln C, -inf if C hits 0
    double min_rate = 0.0;
    double max_rate = 0.0;
    double rate_cv = 0.0;        // stddev / mean of C over the profile grid
    double mean_power_error = 0.0;
    bool converged = true;
    /// Empty unless the allocator itself failed.
    std::string error;
};

/// Relative deviation of the profile's mean power from Pbar.
double mean_power_error(const Scenario& s, const PowerProfile& profile,
                        int intervals = numerics::kDefaultIntervals);

double pf_utility(const Scenario& s, const PowerProfile& profile,
                  int intervals = numerics::kDefaultIntervals);

/// Integral over [0, T] of (C_q - C_p) / C_p. Non-positive for every
/// feasible q exactly when p is proportionally fair along time.
double pf_criterion_gap(const Scenario& s, const PowerProfile& p, const PowerProfile& q,
                        int intervals = numerics::kDefaultIntervals);

inline constexpr int kRandomProfileKnots = 16;

/// Piecewise-linear profile over evenly spaced knots, values drawn uniformly
/// from a seeded generator and scaled so the mean power is exactly Pbar.
PowerProfile random_feasible_profile(const Scenario& s, std::uint64_t seed,
                                     std::size_t grid_points = 2048);

SchemeMetrics compute_metrics(const Scenario& s, const PowerProfile& profile,
                              int intervals = numerics::kDefaultIntervals);

struct SchemeRun {
    PowerProfile profile;
    SchemeMetrics metrics;
    std::optional<SolveReport> report;  // pf_epsilon_optimal only
};

/// Runs each requested allocator and evaluates it. Allocator failures and
/// non-convergence are flagged on the row instead of thrown.
std::vector<SchemeRun> run_schemes(const Scenario& s, const SolverSettings& settings,
                                   const std::vector<Scheme>& schemes);

std::vector<SchemeMetrics> compare_schemes(const Scenario& s, const SolverSettings& settings);

}  // namespace hsrpa
