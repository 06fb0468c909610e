// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace hsrpa {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Integrand produced a non-finite value.
class EvaluationError : public std::runtime_error {
public:
    EvaluationError(const std::string& what, double abscissa)
        : std::runtime_error(what), abscissa_(abscissa) {}
    double abscissa() const noexcept { return abscissa_; }

private:
    double abscissa_;
};

/// Root finder endpoints do not bracket a sign change.
class BracketError : public std::runtime_error {
public:
    BracketError(const std::string& what, double g_lo, double g_hi)
        : std::runtime_error(what), g_lo_(g_lo), g_hi_(g_hi) {}
    double g_lo() const noexcept { return g_lo_; }
    double g_hi() const noexcept { return g_hi_; }

private:
    double g_lo_;
    double g_hi_;
};

class CalibrationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid user-supplied configuration; `key()` names the offending field.
class ValidationError : public std::invalid_argument {
public:
    ValidationError(const std::string& key, const std::string& what)
        : std::invalid_argument(key + ": " + what), key_(key) {}
    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

}  // namespace hsrpa
