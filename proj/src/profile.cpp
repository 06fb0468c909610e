// SPDX-License-Identifier: Apache-2.0
#include "hsrpa/profile.hpp"

#include <algorithm>
#include <array>

#include "hsrpa/errors.hpp"

namespace hsrpa {

namespace {

constexpr std::array<std::pair<Scheme, std::string_view>, 6> kNames{{
    {Scheme::constant, "constant"},
    {Scheme::inversion, "inversion"},
    {Scheme::waterfilling, "waterfilling"},
    {Scheme::pf_near_optimal, "pf_near_optimal"},
    {Scheme::pf_epsilon_optimal, "pf_epsilon_optimal"},
    {Scheme::custom, "custom"},
}};

}  // namespace

std::string_view to_string(Scheme scheme) {
    for (const auto& [s, name] : kNames) {
        if (s == scheme) return name;
    }
    return "unknown";
}

std::optional<Scheme> parse_scheme(std::string_view tag) {
    for (const auto& [s, name] : kNames) {
        if (s != Scheme::custom && name == tag) return s;
    }
    return std::nullopt;
}

const std::vector<Scheme>& allocator_schemes() {
    static const std::vector<Scheme> all{Scheme::constant, Scheme::inversion, Scheme::waterfilling,
                                         Scheme::pf_near_optimal, Scheme::pf_epsilon_optimal};
    return all;
}

double PowerProfile::power_at(double tau) const {
    if (power_fn) return power_fn(tau);
    if (times.empty()) throw DomainError("power_at: empty profile");
    if (tau <= times.front()) return powers.front();
    if (tau >= times.back()) return powers.back();
    const auto it = std::upper_bound(times.begin(), times.end(), tau);
    const auto i = static_cast<std::size_t>(it - times.begin());
    const double w = (tau - times[i - 1]) / (times[i] - times[i - 1]);
    return powers[i - 1] + w * (powers[i] - powers[i - 1]);
}

}  // namespace hsrpa
