#pragma once

#include <map>
#include <string>
#include <vector>

namespace oafm::cli {

/// Parse "0.001,0.01" as a value list or "start:stop:step" as an inclusive
/// range. Throws std::invalid_argument for malformed text, step <= 0, or
/// start > stop.
std::vector<double> parse_grid(const std::string& text);

/// Uniform n-point grid on [a, b] with exact endpoints.
std::vector<double> linspace(double a, double b, int n);

/// Flat `key = value` config file: one pair per line, `#` comments allowed.
/// Keys are validated against the known flag names; command-line flags take
/// precedence over file values (the caller decides which keys are unset).
/// Throws std::invalid_argument for a missing file, malformed line, or
/// unknown key.
std::map<std::string, std::string> load_config_file(const std::string& path);

}  // namespace oafm::cli
