// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hsrpa {

enum class Scheme {
    constant,
    inversion,
    waterfilling,
    pf_near_optimal,
    pf_epsilon_optimal,
    /// Not produced by an allocator; test competitors and imported samples.
    custom,
};

std::string_view to_string(Scheme scheme);

/// Parses one of the five allocator tags; nullopt otherwise.
std::optional<Scheme> parse_scheme(std::string_view tag);

/// The five allocator schemes in their canonical order.
const std::vector<Scheme>& allocator_schemes();

struct ProfileMetadata {
    std::optional<double> k0;           // inversion: P / N ratio
    std::optional<double> water_level;  // waterfilling: W / lambda
    std::optional<double> cutoff_s;     // waterfilling: t1
    std::optional<double> lambda;       // pf variants, 1/W
};

/// Power allocation P(tau) on [0, T]. `times`/`powers` are the sampled
/// grid; `power_fn`, when set, evaluates the allocation exactly between
/// samples. `breakpoints` lists interior points where P is not smooth.
struct PowerProfile {
    Scheme scheme = Scheme::custom;
    std::vector<double> times;
    std::vector<double> powers;
    ProfileMetadata metadata;
    std::function<double(double)> power_fn;
    std::vector<double> breakpoints;

    double horizon() const { return times.empty() ? 0.0 : times.back(); }

    /// P(tau); linear interpolation of the samples if no power_fn is set.
    double power_at(double tau) const;
};

}  // namespace hsrpa
