#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qlcm/progression.hpp"
#include "qlcm/rational.hpp"
#include "qlcm/sieve.hpp"

namespace qlcm {

inline constexpr std::int64_t kDefaultOracleCeiling = 500;

// Exact prime factorization of L = lcm_{m*n < i <= l*n} f(i):
// prime -> max p-adic valuation of f(i) over the window.
struct ValuationMap {
  ProgressionPair pair;
  Window window;
  std::int64_t n;
  std::map<std::uint64_t, std::uint32_t> max_valuation;
};

struct LogLcmResult {
  double log_value;
  ValuationMap valuations;
};

// log L by summing v_p(L) * log p, ascending primes, compensated.
LogLcmResult exact_log_lcm(const ProgressionPair& pair, const Window& window, std::int64_t n,
                           const SieveConfig& cfg);

// Same for the single linear form a*i + b (used by the squared-progression
// path: the lcm of squares is the square of the lcm).
double exact_log_lcm_linear(std::int64_t a, std::int64_t b, const Window& window,
                            std::int64_t n, const SieveConfig& cfg);

// Independent oracle: the lcm as one big integer, by pairwise gcd folding.
BigInt bigint_lcm(const ProgressionPair& pair, const Window& window, std::int64_t n,
                  std::int64_t oracle_ceiling = kDefaultOracleCeiling);
BigInt bigint_lcm_linear(std::int64_t a, std::int64_t b, const Window& window, std::int64_t n,
                         std::int64_t oracle_ceiling = kDefaultOracleCeiling);

// M_n: above this bound no supported prime divides the lcm to a power >= 2.
std::uint64_t exceptional_bound(const ProgressionPair& pair, const Window& window,
                                std::int64_t n);

// Supported primes (those not dividing lcm(D, q)) split by residue class
// mod q; `excluded` lists the lcm primes dividing lcm(D, q).
struct PrimeSupportByResidue {
  std::int64_t modulus;
  std::map<std::int64_t, std::vector<std::uint64_t>> classes;
  std::vector<std::uint64_t> excluded;
};

PrimeSupportByResidue prime_support_by_residue(const ValuationMap& valuations);

// Estimate of log L along the structural path: for each residue class r',
// theta over the prime-locating intervals of r = inverse of r'.
double theta_log_lcm_estimate(const ProgressionPair& pair, const Window& window,
                              std::int64_t n, const SieveConfig& cfg);

// Text export, one line "p v_p" per prime, ascending.
std::string format_valuations(const ValuationMap& valuations);

// Primes in the symmetric difference between the interval-located class sets
// and the valuation-derived support that are NOT explained by dividing
// lcm(D, q), being <= M_n, or lying within max(b1,b2)+1 of a scaled interval
// endpoint. Empty means the support characterization holds.
std::vector<std::uint64_t> unexplained_support_difference(const ProgressionPair& pair,
                                                          const Window& window, std::int64_t n,
                                                          const SieveConfig& cfg);

} // namespace qlcm
