// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one PASS/FAIL line per criterion (sub-checks indented),
// each criterion timed against its runtime budget. Exit status is nonzero if
// any line fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "hsrpa/analysis.hpp"
#include "hsrpa/runner.hpp"
#include "pf_oracle.hpp"
#include "scenarios.hpp"

using namespace hsrpa;
namespace fs = std::filesystem;

namespace {

struct Check {
    std::string name;
    bool ok;
    std::string detail;
};

class Criterion {
public:
    explicit Criterion(std::string title) : title_(std::move(title)) {}

    void check(std::string name, bool ok, std::string detail = {}) {
        checks_.push_back({std::move(name), ok, std::move(detail)});
    }

    bool report(double seconds, double budget_s) {
        if (budget_s > 0.0) {
            std::ostringstream os;
            os << seconds << " s <= " << budget_s << " s";
            check("runtime", seconds <= budget_s, os.str());
        }
        const bool ok = std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.ok; });
        std::printf("[%s] %s (%.2f s)\n", ok ? "PASS" : "FAIL", title_.c_str(), seconds);
        for (const auto& c : checks_) {
            std::printf("       %s %s%s%s\n", c.ok ? "ok  " : "FAIL", c.name.c_str(),
                        c.detail.empty() ? "" : ": ", c.detail.c_str());
        }
        return ok;
    }

private:
    std::string title_;
    std::vector<Check> checks_;
};

std::string num(double x) {
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

bool run_criterion(const std::string& title, double budget_s,
                   const std::function<void(Criterion&)>& body) {
    Criterion c(title);
    const auto start = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.check("no exception", false, e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return c.report(secs, budget_s);
}

double linf(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

const char* label(double dbw) { return dbw < 10.0 ? "5 dBW" : "15 dBW"; }

}  // namespace

int main() {
    using testing::calibrated_scenario;
    bool all_ok = true;

    all_ok &= run_criterion("AC1 mean-power constraint", 5.0, [](Criterion& c) {
        for (double dbw : {5.0, 15.0}) {
            const auto s = calibrated_scenario(dbw);
            const std::string tag = std::string(" @") + label(dbw);
            for (Scheme scheme : {Scheme::constant, Scheme::inversion, Scheme::waterfilling}) {
                const double err = std::abs(mean_power_error(s, allocate(scheme, s)));
                c.check(std::string(to_string(scheme)) + tag + " |mean/Pbar-1| <= 1e-6", err <= 1e-6,
                        num(err));
            }
            const double eps_err =
                std::abs(mean_power_error(s, pf_epsilon_optimal_pa(s).profile));
            c.check("pf_epsilon_optimal" + tag + " |mean/Pbar-1| <= 1e-3", eps_err <= 1e-3,
                    num(eps_err));

            const auto near = pf_near_optimal_pa(s);
            const double near_err = mean_power_error(s, near);
            c.check("pf_near_optimal" + tag + " mean >= Pbar", near_err >= 0.0,
                    "mean/Pbar-1 = " + num(near_err));
            const double edge = std::abs(near.powers.back() / s.avg_power_w - 1.0);
            c.check("pf_near_optimal" + tag + " P(T) = Pbar to 1e-9", edge <= 1e-9, num(edge));
        }
    });

    all_ok &= run_criterion("AC2 water-filling cutoff anchor", 5.0, [](Criterion& c) {
        const auto base = testing::reference_scenario(5.0);
        const double psd = calibrate_noise(base, 10.4);
        auto s5 = testing::reference_scenario(5.0, psd);
        auto s15 = testing::reference_scenario(15.0, psd);
        const double t5 = *waterfilling_pa(s5).metadata.cutoff_s;
        const double t15 = *waterfilling_pa(s15).metadata.cutoff_s;
        c.check("calibrated N0 = " + num(psd) + " W/Hz; 5 dBW cutoff within 10.4 +- 0.05 s",
                std::abs(t5 - 10.4) <= 0.05, num(t5) + " s");
        c.check("15 dBW cutoff strictly later", t15 > t5, num(t15) + " s");
    });

    all_ok &= run_criterion("AC3 optimality orderings", 10.0, [](Criterion& c) {
        for (double dbw : {5.0, 15.0}) {
            const auto s = calibrated_scenario(dbw);
            const std::string tag = std::string(" @") + label(dbw);
            const auto rows = compare_schemes(s, {});
            auto row = [&](Scheme scheme) {
                return *std::find_if(rows.begin(), rows.end(),
                                     [&](const SchemeMetrics& m) { return m.scheme == scheme; });
            };
            const double wf = row(Scheme::waterfilling).total_service;
            bool service_ok = true;
            for (const auto& m : rows) service_ok &= wf >= m.total_service - 1e-9;
            c.check("water-filling service is maximal" + tag, service_ok, num(wf) + " nats");

            const double u = row(Scheme::pf_epsilon_optimal).pf_utility;
            for (Scheme other : {Scheme::constant, Scheme::inversion, Scheme::pf_near_optimal}) {
                const double uo = row(other).pf_utility;
                c.check("utility(eps-optimal) >= utility(" + std::string(to_string(other)) + ")" + tag,
                        u >= uo, num(u) + " vs " + num(uo));
            }
            const double cv = row(Scheme::inversion).rate_cv;
            c.check("inversion rate CV <= 1e-9" + tag, cv <= 1e-9, num(cv));
        }
    });

    all_ok &= run_criterion("AC4 randomized proportional-fairness criterion", 60.0, [](Criterion& c) {
        for (double dbw : {5.0, 15.0}) {
            const auto s = calibrated_scenario(dbw);
            const auto p = pf_epsilon_optimal_pa(s).profile;
            const double up = pf_utility(s, p);
            double worst_gap = -std::numeric_limits<double>::infinity();
            double worst_du = -std::numeric_limits<double>::infinity();
            int violations = 0;
            for (std::uint64_t seed = 0; seed < 200; ++seed) {
                const auto q = random_feasible_profile(s, seed);
                const double gap = pf_criterion_gap(s, p, q);
                worst_gap = std::max(worst_gap, gap);
                if (gap > 1e-3) ++violations;
                worst_du = std::max(worst_du, pf_utility(s, q) - up);
            }
            c.check(std::string("200 competitors, gap <= 1e-3 @") + label(dbw), violations == 0,
                    "max gap " + num(worst_gap));
            c.check(std::string("no competitor beats the utility by > 1e-6 @") + label(dbw),
                    worst_du <= 1e-6, "max utility difference " + num(worst_du));
        }
    });

    all_ok &= run_criterion("AC5 convex-oracle equivalence (64-point grid)", 30.0, [](Criterion& c) {
        for (double dbw : {5.0, 15.0}) {
            const auto s = calibrated_scenario(dbw);
            const std::string tag = std::string(" @") + label(dbw);
            const auto sol = oracle::solve_discrete_pf(s, 64, 1e-10);
            c.check("oracle converged" + tag, sol.converged,
                    std::to_string(sol.iterations) + " iterations, stationarity " +
                        num(sol.stationarity));

            const auto eps = pf_epsilon_optimal_pa(s).profile;
            std::vector<double> sampled;
            for (double t : sol.times) sampled.push_back(eps.power_at(t));
            const double scale = *std::max_element(sampled.begin(), sampled.end());
            const double rel_linf = linf(sol.powers, sampled) / scale;
            c.check("profile relative L-inf <= 2%" + tag, rel_linf <= 0.02, num(rel_linf));

            const double u_oracle = sol.utility;
            const double u_eps = oracle::discrete_utility(s, sol.times, sampled);
            const double rel_u = std::abs(u_oracle - u_eps) / std::abs(u_oracle);
            c.check("utility relative difference <= 1e-4" + tag, rel_u <= 1e-4, num(rel_u));
        }
    });

    all_ok &= run_criterion("AC6 multiplier search convergence", 0.0, [](Criterion& c) {
        SolverSettings settings;
        settings.lambda_step_init = 0.01;
        settings.power_ratio_tol = 0.001;
        settings.max_iterations = 10'000;
        for (double dbw : {5.0, 15.0}) {
            const auto s = calibrated_scenario(dbw);
            const std::string tag = std::string(" @") + label(dbw);
            const auto report = pf_epsilon_optimal_pa(s, settings).report;
            c.check("converged within 10^4 iterations" + tag,
                    report.converged && report.iterations <= 10'000,
                    std::to_string(report.iterations) + " iterations, r = " +
                        num(report.final_power_ratio));
            bool consistent = true;
            const auto& traj = report.lambda_trajectory;
            for (std::size_t i = 1; i < traj.size(); ++i) {
                if (traj[i - 1].power_ratio > 0.0) consistent &= traj[i].lambda > traj[i - 1].lambda;
                if (traj[i - 1].power_ratio < 0.0) consistent &= traj[i].lambda < traj[i - 1].lambda;
            }
            c.check("lambda moves with the sign of r at every iteration" + tag, consistent);
        }
    });

    all_ok &= run_criterion("AC7 degenerate symmetry (alpha = 0)", 0.0, [](Criterion& c) {
        const auto s = testing::flat_scenario();
        std::vector<PowerProfile> profiles;
        SolveReport report;
        for (Scheme scheme : allocator_schemes()) profiles.push_back(allocate(scheme, s, {}, &report));
        double worst = 0.0;
        for (const auto& a : profiles) {
            for (const auto& b : profiles) worst = std::max(worst, linf(a.powers, b.powers));
        }
        c.check("pairwise L-inf <= 1e-9", worst <= 1e-9, num(worst));
        c.check("search exits after 0 iterations", report.iterations == 0 && report.converged,
                std::to_string(report.iterations));
    });

    all_ok &= run_criterion("AC8 numerics and determinism", 0.0, [](Criterion& c) {
        double worst = 0.0;
        for (int i = 0; i < 10'000; ++i) {
            const double z = std::pow(10.0, -9.0 + 18.0 * i / 9'999.0);
            const double w = numerics::lambert_w0(z);
            worst = std::max(worst, std::abs(w * std::exp(w) - z) / std::max(1.0, z));
        }
        c.check("Lambert W residual <= 1e-12 over 10^4 log-spaced z", worst <= 1e-12, num(worst));

        const auto s = calibrated_scenario(5.0);
        const double T = s.traversal_time();
        const double d0 = s.d0_m;
        const double v = s.velocity_mps;
        const double closed = s.bandwidth_hz * s.noise_psd_w_per_hz *
                              (std::pow(d0, 4) * T + 2.0 * d0 * d0 * v * v * std::pow(T, 3) / 3.0 +
                               std::pow(v, 4) * std::pow(T, 5) / 5.0);
        const double simpson = numerics::integrate([&](double t) { return noise_power(s, t); },
                                                   {0.0, T, numerics::kDefaultIntervals});
        const double rel = std::abs(simpson - closed) / closed;
        c.check("Simpson vs closed-form integral of N (alpha = 4) <= 1e-8", rel <= 1e-8, num(rel));

        auto cfg = parse_config(R"({"scenario": {"bandwidth_mhz": 5, "avg_power_dbw": 5,
            "d0_m": 100, "cell_radius_km": 2.5, "velocity_kmh": 300, "pathloss_exp": 4,
            "target_cutoff_s": 10.4}, "output": {"schemes": "all", "sample_count": 301}})");
        const auto root = fs::temp_directory_path() / "hsrpa_acceptance_determinism";
        fs::remove_all(root);
        std::ostringstream log, err;
        const int a = run_command(cfg, {root / "a", false}, log, err);
        const int b = run_command(cfg, {root / "b", false}, log, err);
        bool same = a == kExitOk && b == kExitOk;
        for (const char* name : {"profiles.csv", "metrics.csv", "solver_trace.csv"}) {
            const auto x = slurp(root / "a" / name);
            same &= !x.empty() && x == slurp(root / "b" / name);
        }
        c.check("CSV byte-identical across two runs", same);
    });

    std::printf("%s\n", all_ok ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED");
    return all_ok ? 0 : 1;
}
