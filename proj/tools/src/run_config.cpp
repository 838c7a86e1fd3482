#include "run_config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace oafm::cli {

namespace {

double parse_double(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty number in grid spec");
  const char* begin = text.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end != begin + text.size())
    throw std::invalid_argument("cannot parse '" + text + "' as a number");
  if (!std::isfinite(v)) throw std::invalid_argument("grid value '" + text + "' is not finite");
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  size_t pos = 0;
  while (true) {
    const size_t next = text.find(sep, pos);
    if (next == std::string::npos) {
      parts.push_back(text.substr(pos));
      return parts;
    }
    parts.push_back(text.substr(pos, next - pos));
    pos = next + 1;
  }
}

}  // namespace

std::vector<double> parse_grid(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty grid spec");

  if (text.find(':') != std::string::npos) {
    const std::vector<std::string> parts = split(text, ':');
    if (parts.size() != 3)
      throw std::invalid_argument("range spec must be start:stop:step, got '" + text + "'");
    const double start = parse_double(parts[0]);
    const double stop = parse_double(parts[1]);
    const double step = parse_double(parts[2]);
    if (!(step > 0.0)) throw std::invalid_argument("range step must be > 0");
    if (start > stop) throw std::invalid_argument("range start must be <= stop");

    const int count = static_cast<int>(std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> values;
    values.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) {
      double v = start + i * step;
      if (std::fabs(v - stop) < step * 1e-6) v = stop;  // absorb accumulated rounding
      values.push_back(v);
    }
    return values;
  }

  std::vector<double> values;
  for (const std::string& part : split(text, ',')) values.push_back(parse_double(part));
  return values;
}

std::vector<double> linspace(double a, double b, int n) {
  if (n < 2) throw std::invalid_argument("linspace needs n >= 2");
  std::vector<double> xs(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) xs[static_cast<size_t>(i)] = a + (b - a) * i / (n - 1);
  xs.front() = a;
  xs.back() = b;
  return xs;
}

std::map<std::string, std::string> load_config_file(const std::string& path) {
  static const std::vector<std::string> known = {
      "problem", "t", "x", "quad-order", "tol", "format",
      "out",     "re", "alpha", "beta",  "omega"};

  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read config file '" + path + "'");

  auto trim = [](std::string s) {
    const size_t begin = s.find_first_not_of(" \t\r");
    const size_t end = s.find_last_not_of(" \t\r");
    return begin == std::string::npos ? std::string() : s.substr(begin, end - begin + 1);
  };

  std::map<std::string, std::string> values;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const size_t eq = stripped.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument(path + ":" + std::to_string(line_number) +
                                  ": expected `key = value`");
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw std::invalid_argument(path + ":" + std::to_string(line_number) +
                                  ": unknown key '" + key + "'");
    values[key] = value;
  }
  return values;
}

}  // namespace oafm::cli
