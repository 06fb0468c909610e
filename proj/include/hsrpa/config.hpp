// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hsrpa/allocators.hpp"

namespace hsrpa {

/// Scenario block exactly as written in the config file (engineering units).
struct ScenarioConfig {
    double bandwidth_mhz = 0.0;
    double avg_power_dbw = 0.0;
    double d0_m = 0.0;
    double cell_radius_km = 0.0;
    double velocity_kmh = 0.0;
    double pathloss_exp = 0.0;
    std::optional<double> noise_psd_w_per_hz;
    std::optional<double> target_cutoff_s;
};

struct OutputConfig {
    std::filesystem::path csv_dir = ".";
    std::vector<Scheme> schemes;
    std::size_t sample_count = 301;
};

struct RunConfig {
    ScenarioConfig scenario_block;
    SolverSettings solver;
    OutputConfig output;
    /// SI scenario. noise_psd_w_per_hz is 0 until known (calibration configs).
    Scenario scenario;
};

double dbw_to_watts(double dbw);
double kmh_to_mps(double kmh);

/// Parses and validates a JSON config document. Throws ValidationError
/// naming the offending key.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::filesystem::path& path);

}  // namespace hsrpa
