#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "qlcm/lcm.hpp"
#include "qlcm/progression.hpp"

namespace qlcm {

// One random parameter tuple: coefficients uniform in [1, 20] filtered by the
// pair invariants, l uniform in [1, 12], m uniform in [0, l-1], r uniform
// over the reduced residues mod q.
struct RandomTuple {
  ProgressionPair pair;
  Window window;
  std::int64_t r;
};

RandomTuple sample_tuple(std::mt19937_64& rng);

struct SuiteOutcome {
  std::uint64_t samples = 0;
  bool passed = true;
  std::string counterexample; // empty when passed
};

// measure(prime_locating_set) == residue_constant, exact.
SuiteOutcome verify_measure(std::uint64_t samples, std::uint64_t seed);

// Decomposition pieces pairwise disjoint, union equals the locating set.
SuiteOutcome verify_decomposition(std::uint64_t samples, std::uint64_t seed);

// Interval-located class sets agree with the valuation support up to the
// explained primes.
SuiteOutcome verify_support(std::uint64_t samples, std::uint64_t seed, std::int64_t n,
                            const SieveConfig& cfg);

// exact_log_lcm agrees with the big-integer oracle to 1e-9 relative,
// at random n <= max_n.
SuiteOutcome verify_oracle(std::uint64_t samples, std::uint64_t seed, std::int64_t max_n,
                           std::int64_t oracle_ceiling, const SieveConfig& cfg);

} // namespace qlcm
