#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace brimsim {

/// Malformed input text (instance files, config files, registry files).
/// Carries the 1-based line number of the offending line when known.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                      : message),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A caller broke a documented precondition (mismatched lengths, invalid
/// ranges, duplicate indices). These are programming errors, not bad data.
class ContractViolation : public std::logic_error {
public:
    explicit ContractViolation(const std::string& message) : std::logic_error(message) {}
};

/// The integrator hit a non-recoverable numerical condition. Carries the
/// model time and the first offending state index.
class SimulationFault : public std::runtime_error {
public:
    SimulationFault(std::string message, double t, std::size_t index)
        : std::runtime_error(std::move(message)), t_(t), index_(index) {}

    double t() const noexcept { return t_; }
    std::size_t index() const noexcept { return index_; }

private:
    double t_;
    std::size_t index_;
};

/// Bad or missing configuration (unknown keys, missing registry entries,
/// unusable flag combinations).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& message) : std::runtime_error(message) {}
};

} // namespace brimsim
