// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "hsrpa/analysis.hpp"
#include "hsrpa/config.hpp"

namespace hsrpa {

/// Process exit codes of the command-line front end.
enum ExitCode : int {
    kExitOk = 0,
    kExitValidation = 1,
    kExitNumeric = 2,
};

inline constexpr const char* kVersion = "1.0.0";

/// Decimal, 12 significant digits, trailing zeros trimmed. Scientific
/// notation only for magnitudes >= 1e6 that need it.
std::string format_number(double x);

struct RunOptions {
    /// Overrides output.csv_dir when non-empty.
    std::filesystem::path out_dir;
    /// Report rates and service in bits instead of nats.
    bool bits = false;
};

/// Times at which profiles.csv is sampled: `count` evenly spaced points on [0, T].
std::vector<double> sample_times(double horizon, std::size_t count);

void write_profiles_csv(std::ostream& out, const Scenario& s, const std::vector<SchemeRun>& runs,
                        const std::vector<double>& times, bool bits);
void write_metrics_csv(std::ostream& out, const std::vector<SchemeRun>& runs, bool bits);
void write_solver_trace_csv(std::ostream& out, const SolveReport& report);

/// Runs every configured scheme and writes profiles.csv, metrics.csv and,
/// when pf_epsilon_optimal is requested, solver_trace.csv. Configs that
/// carry target_cutoff_s are calibrated first. Returns an ExitCode.
int run_command(const RunConfig& config, const RunOptions& options, std::ostream& log,
                std::ostream& err);

/// Calibrates N0 for `target_cutoff_s`, prints it and writes the sidecar
/// `noise_psd_w_per_hz=<value>`. Returns an ExitCode.
int calibrate_command(const RunConfig& config, double target_cutoff_s,
                      const std::filesystem::path& sidecar, std::ostream& log, std::ostream& err);

/// Reads a calibration sidecar written by calibrate_command.
double read_sidecar(const std::filesystem::path& sidecar);

}  // namespace hsrpa
