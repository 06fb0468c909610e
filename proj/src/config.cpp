// SPDX-License-Identifier: Apache-2.0
#include "hsrpa/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "hsrpa/errors.hpp"

namespace hsrpa {

namespace {

using nlohmann::json;

void reject_unknown(const json& block, const std::string& prefix,
                    const std::set<std::string>& known) {
    for (const auto& [key, value] : block.items()) {
        if (!known.count(key)) throw ValidationError(prefix + key, "unknown key");
    }
}

const json& require_object(const json& doc, const std::string& key) {
    if (!doc.contains(key)) throw ValidationError(key, "missing section");
    if (!doc.at(key).is_object()) throw ValidationError(key, "must be an object");
    return doc.at(key);
}

double number_at(const json& block, const std::string& prefix, const std::string& key) {
    const auto name = prefix + key;
    if (!block.contains(key)) throw ValidationError(name, "missing key");
    const auto& v = block.at(key);
    if (!v.is_number()) throw ValidationError(name, "must be a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) throw ValidationError(name, "must be finite");
    return x;
}

double positive_at(const json& block, const std::string& prefix, const std::string& key) {
    const double x = number_at(block, prefix, key);
    if (!(x > 0.0)) throw ValidationError(prefix + key, "must be > 0");
    return x;
}

std::size_t count_at(const json& block, const std::string& prefix, const std::string& key) {
    const auto& v = block.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 1) {
        throw ValidationError(prefix + key, "must be a positive integer");
    }
    return static_cast<std::size_t>(v.get<long long>());
}

ScenarioConfig parse_scenario(const json& block) {
    const std::string p = "scenario.";
    reject_unknown(block, p,
                   {"bandwidth_mhz", "avg_power_dbw", "d0_m", "cell_radius_km", "velocity_kmh",
                    "pathloss_exp", "noise_psd_w_per_hz", "target_cutoff_s"});
    ScenarioConfig sc;
    sc.bandwidth_mhz = positive_at(block, p, "bandwidth_mhz");
    sc.avg_power_dbw = number_at(block, p, "avg_power_dbw");
    sc.d0_m = positive_at(block, p, "d0_m");
    sc.cell_radius_km = positive_at(block, p, "cell_radius_km");
    sc.velocity_kmh = positive_at(block, p, "velocity_kmh");
    sc.pathloss_exp = number_at(block, p, "pathloss_exp");
    if (sc.pathloss_exp < 0.0) throw ValidationError(p + "pathloss_exp", "must be >= 0");

    const bool has_noise = block.contains("noise_psd_w_per_hz");
    const bool has_target = block.contains("target_cutoff_s");
    if (has_noise == has_target) {
        throw ValidationError(p + "noise_psd_w_per_hz",
                              "exactly one of noise_psd_w_per_hz / target_cutoff_s is required");
    }
    if (has_noise) sc.noise_psd_w_per_hz = positive_at(block, p, "noise_psd_w_per_hz");
    if (has_target) sc.target_cutoff_s = positive_at(block, p, "target_cutoff_s");
    return sc;
}

SolverSettings parse_solver(const json& block) {
    const std::string p = "solver.";
    reject_unknown(block, p, {"lambda_step_init", "power_ratio_tol", "max_iterations", "grid_points"});
    SolverSettings s;
    if (block.contains("lambda_step_init")) s.lambda_step_init = positive_at(block, p, "lambda_step_init");
    if (block.contains("power_ratio_tol")) {
        s.power_ratio_tol = positive_at(block, p, "power_ratio_tol");
        if (s.power_ratio_tol >= 1.0) throw ValidationError(p + "power_ratio_tol", "must be < 1");
    }
    if (block.contains("max_iterations")) s.max_iterations = count_at(block, p, "max_iterations");
    if (block.contains("grid_points")) {
        s.grid_points = count_at(block, p, "grid_points");
        if (s.grid_points < 2) throw ValidationError(p + "grid_points", "must be >= 2");
    }
    return s;
}

OutputConfig parse_output(const json& block) {
    const std::string p = "output.";
    reject_unknown(block, p, {"csv_dir", "schemes", "sample_count"});
    OutputConfig out;
    if (block.contains("csv_dir")) {
        if (!block.at("csv_dir").is_string()) throw ValidationError(p + "csv_dir", "must be a string");
        out.csv_dir = block.at("csv_dir").get<std::string>();
    }
    if (block.contains("sample_count")) {
        out.sample_count = count_at(block, p, "sample_count");
    }
    const json schemes = block.value("schemes", json("all"));
    if (schemes.is_string() && schemes.get<std::string>() == "all") {
        out.schemes = allocator_schemes();
    } else if (schemes.is_array() && !schemes.empty()) {
        for (const auto& tag : schemes) {
            if (!tag.is_string()) throw ValidationError(p + "schemes", "entries must be strings");
            const auto scheme = parse_scheme(tag.get<std::string>());
            if (!scheme) {
                throw ValidationError(p + "schemes", "unknown scheme '" + tag.get<std::string>() + "'");
            }
            out.schemes.push_back(*scheme);
        }
    } else {
        throw ValidationError(p + "schemes", "must be \"all\" or a non-empty list of scheme tags");
    }
    return out;
}

}  // namespace

double dbw_to_watts(double dbw) { return std::pow(10.0, dbw / 10.0); }

double kmh_to_mps(double kmh) { return kmh / 3.6; }

RunConfig parse_config(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError("<document>", e.what());
    }
    if (!doc.is_object()) throw ValidationError("<document>", "top level must be an object");
    reject_unknown(doc, "", {"scenario", "solver", "output"});

    RunConfig cfg;
    cfg.scenario_block = parse_scenario(require_object(doc, "scenario"));
    if (doc.contains("solver")) cfg.solver = parse_solver(require_object(doc, "solver"));
    if (doc.contains("output")) cfg.output = parse_output(require_object(doc, "output"));
    else cfg.output.schemes = allocator_schemes();

    const auto& sb = cfg.scenario_block;
    Scenario& s = cfg.scenario;
    s.bandwidth_hz = sb.bandwidth_mhz * 1e6;
    s.avg_power_w = dbw_to_watts(sb.avg_power_dbw);
    s.d0_m = sb.d0_m;
    s.cell_radius_m = sb.cell_radius_km * 1e3;
    s.velocity_mps = kmh_to_mps(sb.velocity_kmh);
    s.pathloss_exp = sb.pathloss_exp;
    s.noise_psd_w_per_hz = sb.noise_psd_w_per_hz.value_or(0.0);

    if (sb.target_cutoff_s && !(*sb.target_cutoff_s < s.traversal_time())) {
        std::ostringstream os;
        os << "must be < T = R0/v = " << s.traversal_time() << " s";
        throw ValidationError("scenario.target_cutoff_s", os.str());
    }
    if (sb.noise_psd_w_per_hz) s.validate();
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("--config", "cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

}  // namespace hsrpa
