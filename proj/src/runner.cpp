// SPDX-License-Identifier: Apache-2.0
#include "hsrpa/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "hsrpa/errors.hpp"

namespace hsrpa {

namespace {

std::string trim_zeros(std::string s) {
    if (s.find('.') == std::string::npos) return s;
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
}

const char* rate_unit(bool bits) { return bits ? "bits_per_s" : "nats_per_s"; }
const char* amount_unit(bool bits) { return bits ? "bits" : "nats"; }

std::ofstream open_csv(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ValidationError("--out-dir", "cannot write '" + path.string() + "'");
    return out;
}

int intervals_per_sample(std::size_t samples) {
    if (samples < 2) return 2;
    int n = static_cast<int>(numerics::kDefaultIntervals / (samples - 1));
    n = std::max(n, 16);
    return n % 2 == 0 ? n : n + 1;
}

}  // namespace

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (x == 0.0) return "0";
    char buf[128];
    if (std::abs(x) >= 1e6) {
        std::snprintf(buf, sizeof buf, "%.12g", x);
        return buf;
    }
    std::snprintf(buf, sizeof buf, "%.11e", x);
    const int exponent = std::atoi(std::strchr(buf, 'e') + 1);
    const int decimals = std::min(std::max(0, 11 - exponent), 60);
    std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
    std::string s = trim_zeros(buf);
    if (s == "-0") s = "0";
    return s;
}

std::vector<double> sample_times(double horizon, std::size_t count) {
    std::vector<double> times;
    if (count == 0) return times;
    if (count == 1) return {0.0};
    times.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        times.push_back(horizon * static_cast<double>(i) / static_cast<double>(count - 1));
    }
    times.back() = horizon;
    return times;
}

void write_profiles_csv(std::ostream& out, const Scenario& s, const std::vector<SchemeRun>& runs,
                        const std::vector<double>& times, bool bits) {
    out << "tau_s";
    for (const auto& run : runs) {
        const auto tag = to_string(run.metrics.scheme);
        out << ",power_w_" << tag << ",rate_" << rate_unit(bits) << '_' << tag << ",service_"
            << amount_unit(bits) << '_' << tag;
    }
    out << '\n';

    const int intervals = intervals_per_sample(times.size());
    std::vector<ServiceCurve> curves;
    for (const auto& run : runs) {
        curves.push_back(run.metrics.error.empty()
                             ? service_curve(s, run.profile, times, intervals)
                             : ServiceCurve{});
    }

    for (std::size_t i = 0; i < times.size(); ++i) {
        const double t = times[i];
        out << format_number(t);
        for (std::size_t k = 0; k < runs.size(); ++k) {
            if (!runs[k].metrics.error.empty()) {
                out << ",,,";
                continue;
            }
            const double p = std::max(runs[k].profile.power_at(t), 0.0);
            out << ',' << format_number(p) << ',' << format_number(capacity(s, p, t)) << ','
                << format_number(curves[k].service[i]);
        }
        out << '\n';
    }
}

void write_metrics_csv(std::ostream& out, const std::vector<SchemeRun>& runs, bool bits) {
    out << "scheme,converged,total_service_" << amount_unit(bits) << ",pf_utility,min_rate_"
        << rate_unit(bits) << ",max_rate_" << rate_unit(bits)
        << ",rate_cv,mean_power_error\n";
    for (const auto& run : runs) {
        const auto& m = run.metrics;
        out << to_string(m.scheme) << ',' << (m.converged ? "true" : "false");
        if (!m.error.empty()) {
            out << ",,,,,,\n";
            continue;
        }
        out << ',' << format_number(m.total_service) << ',' << format_number(m.pf_utility) << ','
            << format_number(m.min_rate) << ',' << format_number(m.max_rate) << ','
            << format_number(m.rate_cv) << ',' << format_number(m.mean_power_error) << '\n';
    }
}

void write_solver_trace_csv(std::ostream& out, const SolveReport& report) {
    out << "iteration,lambda,r_delta_p\n";
    for (const auto& it : report.lambda_trajectory) {
        out << it.iteration << ',' << format_number(it.lambda) << ','
            << format_number(it.power_ratio) << '\n';
    }
}

int run_command(const RunConfig& config, const RunOptions& options, std::ostream& log,
                std::ostream& err) {
    try {
        Scenario s = config.scenario;
        if (options.bits) s.rate_scale = 1.0 / std::log(2.0);
        if (config.scenario_block.target_cutoff_s) {
            s.noise_psd_w_per_hz =
                calibrate_noise(s, *config.scenario_block.target_cutoff_s, config.solver);
            log << "calibrated noise_psd_w_per_hz=" << std::setprecision(6)
                << s.noise_psd_w_per_hz << '\n';
        }
        s.validate();
        config.solver.validate();

        const auto dir = options.out_dir.empty() ? config.output.csv_dir : options.out_dir;
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        if (ec) throw ValidationError("--out-dir", "cannot create '" + dir.string() + "'");

        const auto runs = run_schemes(s, config.solver, config.output.schemes);
        const auto times = sample_times(s.traversal_time(), config.output.sample_count);

        {
            auto out = open_csv(dir / "profiles.csv");
            write_profiles_csv(out, s, runs, times, options.bits);
        }
        {
            auto out = open_csv(dir / "metrics.csv");
            write_metrics_csv(out, runs, options.bits);
        }
        for (const auto& run : runs) {
            if (run.report) {
                auto out = open_csv(dir / "solver_trace.csv");
                write_solver_trace_csv(out, *run.report);
            }
        }

        int status = kExitOk;
        for (const auto& run : runs) {
            const auto tag = to_string(run.metrics.scheme);
            if (!run.metrics.error.empty()) {
                err << "scheme " << tag << " failed: " << run.metrics.error << '\n';
                status = kExitNumeric;
            } else if (!run.metrics.converged) {
                err << "scheme " << tag << " did not converge (r_delta_p="
                    << run.report->final_power_ratio << ")\n";
                status = kExitNumeric;
            }
        }
        log << "wrote " << (dir / "profiles.csv").string() << ", metrics.csv";
        for (const auto& run : runs) {
            if (run.report) log << ", solver_trace.csv";
        }
        log << '\n';
        return status;
    } catch (const ValidationError& e) {
        err << "validation error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        err << "numeric error: " << e.what() << '\n';
        return kExitNumeric;
    }
}

int calibrate_command(const RunConfig& config, double target_cutoff_s,
                      const std::filesystem::path& sidecar, std::ostream& log, std::ostream& err) {
    try {
        const double psd = calibrate_noise(config.scenario, target_cutoff_s, config.solver);
        log << "noise_psd_w_per_hz=" << std::setprecision(6) << psd << '\n';

        std::ofstream out(sidecar, std::ios::binary | std::ios::trunc);
        if (!out) throw ValidationError("--sidecar", "cannot write '" + sidecar.string() + "'");
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.12g", psd);
        out << "noise_psd_w_per_hz=" << buf << '\n';
        return kExitOk;
    } catch (const ValidationError& e) {
        err << "validation error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        err << "calibration error: " << e.what() << '\n';
        return kExitNumeric;
    }
}

double read_sidecar(const std::filesystem::path& sidecar) {
    std::ifstream in(sidecar);
    std::string line;
    if (!in || !std::getline(in, line)) {
        throw ValidationError("sidecar", "cannot read '" + sidecar.string() + "'");
    }
    const std::string key = "noise_psd_w_per_hz=";
    if (line.rfind(key, 0) != 0) throw ValidationError("sidecar", "expected '" + key + "<value>'");
    return std::stod(line.substr(key.size()));
}

}  // namespace hsrpa
