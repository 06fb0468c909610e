// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: run allocation schemes for one cell crossing and
// calibrate the noise PSD against a water-filling cutoff.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hsrpa/errors.hpp"
#include "hsrpa/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Power allocation along time for a train crossing one base-station cell"};
    app.set_version_flag("--version", std::string("hsrpa ") + hsrpa::kVersion);
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    std::string run_sidecar;
    bool bits = false;
    auto* run = app.add_subcommand("run", "Run the configured schemes and write CSV files");
    run->add_option("--config", config_path, "JSON config file")->required();
    run->add_option("--out-dir", out_dir, "Directory for CSV output (overrides output.csv_dir)");
    run->add_option("--sidecar", run_sidecar, "Take noise_psd_w_per_hz from a calibration sidecar");
    run->add_flag("--bits", bits, "Report rates and service in bits instead of nats");

    double target_cutoff = 0.0;
    std::string sidecar;
    auto* calibrate = app.add_subcommand("calibrate", "Find N0 reproducing a water-filling cutoff");
    calibrate->add_option("--config", config_path, "JSON config file")->required();
    calibrate->add_option("--target-cutoff", target_cutoff, "Cutoff time in seconds")->required();
    calibrate->add_option("--sidecar", sidecar, "Output file (default: <config>.calibration)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? hsrpa::kExitOk : hsrpa::kExitValidation;
    }

    hsrpa::RunConfig config;
    try {
        config = hsrpa::load_config(config_path);
        if (run->parsed() && !run_sidecar.empty()) {
            config.scenario.noise_psd_w_per_hz = hsrpa::read_sidecar(run_sidecar);
            config.scenario_block.noise_psd_w_per_hz = config.scenario.noise_psd_w_per_hz;
            config.scenario_block.target_cutoff_s.reset();
        }
    } catch (const std::exception& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return hsrpa::kExitValidation;
    }

    if (run->parsed()) {
        return hsrpa::run_command(config, {out_dir, bits}, std::cout, std::cerr);
    }
    if (sidecar.empty()) sidecar = config_path + ".calibration";
    return hsrpa::calibrate_command(config, target_cutoff, sidecar, std::cout, std::cerr);
}
