#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "qlcm/errors.hpp"
#include "qlcm/intervals.hpp"

namespace qlcm {

struct SieveConfig {
  std::uint64_t ceiling = 100'000'000ULL;
  // Odd-only bitmap entries per segment; a segment spans twice this many
  // integers.
  std::uint64_t segment_entries = std::uint64_t{1} << 20;
};

// Primality flags for the numbers in (lo, hi]: flags[k] <=> lo+1+k prime.
struct PrimeSegment {
  std::uint64_t lo;
  std::uint64_t hi;
  std::vector<bool> flags;

  bool test(std::uint64_t x) const { return x > lo && x <= hi && flags[x - lo - 1]; }
};

// Primes <= limit by a plain odd sieve; used to seed segments.
std::vector<std::uint32_t> base_primes(std::uint64_t limit);

// Sieve one segment; `base` must contain all primes <= sqrt(hi).
PrimeSegment sieve_segment(std::uint64_t lo, std::uint64_t hi,
                           std::span<const std::uint32_t> base);

std::uint64_t integer_sqrt(std::uint64_t n);

// Compensated accumulation; terms are added in a fixed ascending order so
// results do not depend on segmentation.
struct KahanSum {
  double sum = 0.0;
  double compensation = 0.0;

  void add(double v) {
    const double y = v - compensation;
    const double t = sum + y;
    compensation = (t - sum) - y;
    sum = t;
  }
  double value() const { return sum; }
};

// Calls fn(p) for every prime lo < p <= hi, ascending.
template <typename Fn>
void for_each_prime(std::uint64_t lo, std::uint64_t hi, const SieveConfig& cfg, Fn&& fn) {
  if (hi > cfg.ceiling)
    throw ResourceLimitError("sieve bound " + std::to_string(hi) + " exceeds ceiling " +
                             std::to_string(cfg.ceiling));
  if (hi < 2 || hi <= lo) return;
  const auto base = base_primes(integer_sqrt(hi));
  const std::uint64_t span = 2 * cfg.segment_entries;
  for (std::uint64_t seg_lo = lo; seg_lo < hi; seg_lo += span) {
    const std::uint64_t seg_hi = std::min(hi, seg_lo + span);
    const PrimeSegment seg = sieve_segment(seg_lo, seg_hi, base);
    for (std::uint64_t k = 0; k < seg.flags.size(); ++k)
      if (seg.flags[k]) fn(seg.lo + 1 + k);
  }
}

// Exactly the primes p with lo < p <= hi and p == r_prime (mod q), ascending.
// Requires q = 1 or gcd(r_prime, q) = 1.
std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi, std::int64_t q,
                                     std::int64_t r_prime, const SieveConfig& cfg);

struct ResidueThetaSum {
  std::uint64_t bound = 0;
  std::int64_t modulus = 1;
  std::int64_t residue = 1;
  double value = 0.0;
  std::uint64_t prime_count = 0;
};

// Chebyshev theta over the residue class: sum of log p, lo < p <= hi,
// p == r_prime (mod q).
ResidueThetaSum theta_sum(std::uint64_t lo, std::uint64_t hi, std::int64_t q,
                          std::int64_t r_prime, const SieveConfig& cfg);

// Theta over a normalized interval set scaled by n; each rational endpoint e
// becomes the integer bound floor(e*n), preserving half-open semantics.
ResidueThetaSum theta_over_intervals(const IntervalSet& set, std::int64_t n, std::int64_t q,
                                     std::int64_t r_prime, const SieveConfig& cfg);

} // namespace qlcm
