#pragma once

#include <benchgen/farz.hpp>
#include <benchgen/three_pass.hpp>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace benchgen::cli {

enum ExitCode : int { kSuccess = 0, kDomainError = 1, kUsageError = 2 };

/// Bad command-line usage (unknown sweep parameter, option not valid for the model, ...).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Environment variable that overrides the default seed.
inline constexpr const char* kSeedEnv = "BENCHGEN_SEED";

std::uint64_t default_seed();

/// Parses `--values` text: a comma list ("0.5,0.6") or an inclusive range
/// "start:stop:step". Range values are rounded to 12 decimals.
std::vector<double> parse_values(const std::string& text);

/// Runs one CLI invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace benchgen::cli
