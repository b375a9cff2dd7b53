#pragma once

#include <cstdint>
#include <string>

#include "qlcm/lcm.hpp"
#include "qlcm/sieve.hpp"

namespace qlcm {

// Runtime knobs; defaults here, optionally a key=value file (path from the
// QLCM_CONFIG environment variable or --config), CLI flags on top.
struct RunConfig {
  SieveConfig sieve;
  std::int64_t oracle_ceiling = kDefaultOracleCeiling;
  int workers = 1;
};

// Keys: sieve_ceiling, segment_size, oracle_ceiling, workers.
// Blank lines and '#' comments allowed; unknown keys are an error.
RunConfig load_config_file(const std::string& path, RunConfig base);

} // namespace qlcm
