#include "qlcm/config.hpp"

#include <fstream>
#include <stdexcept>

namespace qlcm {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::int64_t parse_positive(const std::string& key, const std::string& value) {
  std::int64_t v = 0;
  try {
    v = std::stoll(value);
  } catch (const std::exception&) {
    throw std::invalid_argument("config: value for " + key + " is not an integer: " + value);
  }
  if (v < 1) throw std::invalid_argument("config: " + key + " must be positive");
  return v;
}

} // namespace

RunConfig load_config_file(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "sieve_ceiling")
      base.sieve.ceiling = static_cast<std::uint64_t>(parse_positive(key, value));
    else if (key == "segment_size")
      base.sieve.segment_entries = static_cast<std::uint64_t>(parse_positive(key, value));
    else if (key == "oracle_ceiling")
      base.oracle_ceiling = parse_positive(key, value);
    else if (key == "workers")
      base.workers = static_cast<int>(parse_positive(key, value));
    else
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": unknown key " + key);
  }
  return base;
}

} // namespace qlcm
