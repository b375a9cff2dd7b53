#include "qlcm/sieve.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qlcm/residue.hpp"

namespace qlcm {

std::uint64_t integer_sqrt(std::uint64_t n) {
  if (n == 0) return 0;
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && (unsigned __int128)r * r > n) --r;
  while ((unsigned __int128)(r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::vector<std::uint32_t> base_primes(std::uint64_t limit) {
  if (limit > 0xFFFFFFFFull)
    throw std::invalid_argument("base prime limit exceeds 32 bits");
  std::vector<std::uint32_t> primes;
  if (limit < 2) return primes;
  const auto n = static_cast<std::uint32_t>(limit);
  std::vector<bool> composite(n + 1, false);
  primes.push_back(2);
  for (std::uint32_t i = 3; i <= n; i += 2) {
    if (composite[i]) continue;
    primes.push_back(i);
    if ((std::uint64_t)i * i <= n)
      for (std::uint64_t j = (std::uint64_t)i * i; j <= n; j += 2ull * i)
        composite[static_cast<std::uint32_t>(j)] = true;
  }
  return primes;
}

PrimeSegment sieve_segment(std::uint64_t lo, std::uint64_t hi,
                           std::span<const std::uint32_t> base) {
  if (hi < lo) throw std::invalid_argument("sieve_segment requires hi >= lo");
  PrimeSegment seg{lo, hi, std::vector<bool>(hi - lo, false)};
  if (lo < 2 && 2 <= hi) seg.flags[2 - lo - 1] = true;

  std::uint64_t first = lo + 1;
  if (first % 2 == 0) ++first;
  if (first < 3) first = 3;
  if (first > hi) return seg;

  // odd-only scratch: entry k stands for first + 2k
  const std::uint64_t count = (hi - first) / 2 + 1;
  std::vector<std::uint8_t> is_prime(count, 1);
  for (const std::uint32_t p : base) {
    if (p < 3) continue;
    if ((unsigned __int128)p * p > hi) break;
    std::uint64_t start = ((first + p - 1) / p) * p;
    if (start < (std::uint64_t)p * p) start = (std::uint64_t)p * p;
    if (start % 2 == 0) start += p;
    for (std::uint64_t mult = start; mult <= hi; mult += 2ull * p)
      is_prime[(mult - first) / 2] = 0;
  }
  for (std::uint64_t k = 0; k < count; ++k)
    if (is_prime[k]) seg.flags[first + 2 * k - lo - 1] = true;
  return seg;
}

namespace {

void check_residue_class(std::int64_t q, std::int64_t r_prime) {
  if (q < 1) throw std::invalid_argument("modulus must be positive");
  if (r_prime < 1 || r_prime > q)
    throw std::invalid_argument("residue class must lie in [1, q]");
  if (q != 1 && std::gcd(r_prime, q) != 1)
    throw std::invalid_argument("residue class must be coprime to the modulus");
}

} // namespace

std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi, std::int64_t q,
                                     std::int64_t r_prime, const SieveConfig& cfg) {
  check_residue_class(q, r_prime);
  const auto target = static_cast<std::uint64_t>(r_prime % q);
  std::vector<std::uint64_t> out;
  for_each_prime(lo, hi, cfg, [&](std::uint64_t p) {
    if (p % static_cast<std::uint64_t>(q) == target) out.push_back(p);
  });
  return out;
}

ResidueThetaSum theta_sum(std::uint64_t lo, std::uint64_t hi, std::int64_t q,
                          std::int64_t r_prime, const SieveConfig& cfg) {
  check_residue_class(q, r_prime);
  const auto target = static_cast<std::uint64_t>(r_prime % q);
  ResidueThetaSum result{hi, q, r_prime, 0.0, 0};
  KahanSum acc;
  for_each_prime(lo, hi, cfg, [&](std::uint64_t p) {
    if (p % static_cast<std::uint64_t>(q) != target) return;
    acc.add(std::log(static_cast<double>(p)));
    ++result.prime_count;
  });
  result.value = acc.value();
  return result;
}

ResidueThetaSum theta_over_intervals(const IntervalSet& set, std::int64_t n, std::int64_t q,
                                     std::int64_t r_prime, const SieveConfig& cfg) {
  check_residue_class(q, r_prime);
  if (n < 1) throw std::invalid_argument("scale n must be positive");
  if (!set.is_normalized())
    throw std::invalid_argument("theta_over_intervals requires a normalized set");

  const auto target = static_cast<std::uint64_t>(r_prime % q);
  ResidueThetaSum result{0, q, r_prime, 0.0, 0};
  KahanSum acc;
  for (const auto& part : set.parts) {
    const BigInt lo_big = numerator(part.left) * n / denominator(part.left);
    const BigInt hi_big = numerator(part.right) * n / denominator(part.right);
    if (hi_big > cfg.ceiling)
      throw ResourceLimitError("scaled interval bound " + hi_big.str() + " exceeds sieve ceiling");
    const auto lo = lo_big.convert_to<std::uint64_t>();
    const auto hi = hi_big.convert_to<std::uint64_t>();
    if (hi <= lo) continue;
    for_each_prime(lo, hi, cfg, [&](std::uint64_t p) {
      if (p % static_cast<std::uint64_t>(q) != target) return;
      acc.add(std::log(static_cast<double>(p)));
      ++result.prime_count;
    });
    result.bound = hi;
  }
  result.value = acc.value();
  return result;
}

} // namespace qlcm
