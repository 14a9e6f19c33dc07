#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace benchgen {

/// Thrown when a generator or analyzer receives an invalid parameter value.
/// `parameter()` names the offending parameter so the CLI can report it.
class ParameterError : public std::invalid_argument {
public:
    ParameterError(std::string parameter, const std::string& message)
        : std::invalid_argument(parameter + ": " + message), parameter_(std::move(parameter)) {}

    const std::string& parameter() const noexcept { return parameter_; }

private:
    std::string parameter_;
};

/// Malformed input file. Carries the 1-based line number (0 when the error is not tied to a line).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& source, std::size_t line, const std::string& message)
        : std::runtime_error(source + (line ? ":" + std::to_string(line) : std::string()) + ": " + message),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace benchgen
