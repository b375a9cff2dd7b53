#include "qlcm/lcm.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

#include "qlcm/constants.hpp"
#include "qlcm/intervals.hpp"
#include "qlcm/residue.hpp"

namespace qlcm {

namespace {

struct LinearForm {
  std::int64_t a;
  std::int64_t b;
};

std::uint64_t term_bound(const LinearForm& f, std::int64_t hi_index) {
  return static_cast<std::uint64_t>((__int128)f.a * hi_index + f.b);
}

void check_sieve_room(__int128 needed, const SieveConfig& cfg) {
  if (needed > (__int128)cfg.ceiling)
    throw ResourceLimitError("term bound exceeds sieve ceiling " + std::to_string(cfg.ceiling));
}

// Smallest index >= lo with pk | a*i + b, or nullopt within [lo, hi].
// Requires gcd(a, pk) = 1.
std::int64_t first_divisible_index(const LinearForm& f, std::int64_t lo, std::uint64_t pk) {
  const auto a_mod = static_cast<std::int64_t>(f.a % (std::int64_t)pk);
  const std::int64_t inv = modular_inverse(a_mod, (std::int64_t)pk);
  const auto b_mod = static_cast<std::uint64_t>(f.b % (std::int64_t)pk);
  const std::uint64_t target = (pk - b_mod) % pk; // -b mod pk
  const auto i0 = static_cast<std::int64_t>(
      (unsigned __int128)target * static_cast<std::uint64_t>(inv) % pk);
  std::int64_t delta = (i0 - lo) % (std::int64_t)pk;
  if (delta < 0) delta += (std::int64_t)pk;
  return lo + delta;
}

// Max v_p(a*i + b) over window indices, p coprime to a.
std::uint32_t max_power_in_window(const LinearForm& f, std::int64_t lo, std::int64_t hi,
                                  std::uint64_t p) {
  const std::uint64_t bound = term_bound(f, hi);
  std::uint32_t v = 0;
  std::uint64_t pk = p;
  while (pk <= bound) {
    if (first_divisible_index(f, lo, pk) > hi) break;
    ++v;
    if (pk > bound / p) break;
    pk *= p;
  }
  return v;
}

std::uint32_t valuation(std::uint64_t value, std::uint64_t p) {
  std::uint32_t v = 0;
  while (value % p == 0) {
    value /= p;
    ++v;
  }
  return v;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t value) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; (unsigned __int128)p * p <= value; p += (p == 2 ? 1 : 2)) {
    if (value % p != 0) continue;
    out.push_back(p);
    while (value % p == 0) value /= p;
  }
  if (value > 1) out.push_back(value);
  return out;
}

// Max of v_p(t1) + v_p(t2) over the window, for a prime p that may divide
// both factors. Walks the indices where p divides at least one factor.
std::uint32_t max_joint_power(const LinearForm& f1, const LinearForm& f2, std::int64_t lo,
                              std::int64_t hi, std::uint64_t p) {
  std::uint32_t best = 0;
  const auto value_at = [&](const LinearForm& f, std::int64_t i) {
    return static_cast<std::uint64_t>((__int128)f.a * i + f.b);
  };
  for (const auto& walk : {f1, f2}) {
    if (walk.a % (std::int64_t)p == 0) continue; // p never divides this factor
    for (std::int64_t i = first_divisible_index(walk, lo, p); i <= hi; i += (std::int64_t)p) {
      assert(value_at(walk, i) % p == 0);
      const std::uint32_t v = valuation(value_at(f1, i), p) + valuation(value_at(f2, i), p);
      best = std::max(best, v);
    }
  }
  return best;
}

std::map<std::uint64_t, std::uint32_t> valuations_for_forms(const std::vector<LinearForm>& forms,
                                                            std::int64_t det,
                                                            const Window& window, std::int64_t n,
                                                            const SieveConfig& cfg) {
  const std::int64_t lo = window.m * n; // window is (lo, hi]
  const std::int64_t hi = window.l * n;
  std::uint64_t max_bound = 0;
  for (const auto& f : forms) {
    check_sieve_room((__int128)f.a * hi + f.b, cfg);
    max_bound = std::max(max_bound, term_bound(f, hi));
  }
  const std::uint64_t abs_det = det < 0 ? static_cast<std::uint64_t>(-(__int128)det)
                                        : static_cast<std::uint64_t>(det);

  std::map<std::uint64_t, std::uint32_t> vmap;
  for_each_prime(0, max_bound, cfg, [&](std::uint64_t p) {
    if (abs_det != 0 && abs_det % p == 0) return; // handled by the joint walk
    std::uint32_t v = 0;
    for (const auto& f : forms) {
      if (f.a % (std::int64_t)p == 0) continue;
      if (p > term_bound(f, hi)) continue;
      v = std::max(v, max_power_in_window(f, lo + 1, hi, p));
    }
    if (v) vmap.emplace_hint(vmap.end(), p, v);
  });

  if (abs_det != 0 && forms.size() == 2) {
    for (const std::uint64_t p : prime_divisors(abs_det)) {
      if (p > max_bound) continue;
      const std::uint32_t v = max_joint_power(forms[0], forms[1], lo + 1, hi, p);
      if (v) vmap[p] = v;
    }
  }
  return vmap;
}

double log_from_valuations(const std::map<std::uint64_t, std::uint32_t>& vmap) {
  KahanSum acc;
  for (const auto& [p, v] : vmap)
    acc.add(static_cast<double>(v) * std::log(static_cast<double>(p)));
  return acc.value();
}

} // namespace

LogLcmResult exact_log_lcm(const ProgressionPair& pair, const Window& window, std::int64_t n,
                           const SieveConfig& cfg) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  auto vmap = valuations_for_forms({{pair.a1, pair.b1}, {pair.a2, pair.b2}},
                                   pair.cross_determinant(), window, n, cfg);
  const double value = log_from_valuations(vmap);
  return {value, ValuationMap{pair, window, n, std::move(vmap)}};
}

double exact_log_lcm_linear(std::int64_t a, std::int64_t b, const Window& window,
                            std::int64_t n, const SieveConfig& cfg) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (a < 1 || b < 1 || gcd64(a, b) != 1)
    throw std::invalid_argument("linear lcm requires positive coprime coefficients");
  return log_from_valuations(valuations_for_forms({{a, b}}, 0, window, n, cfg));
}

BigInt bigint_lcm(const ProgressionPair& pair, const Window& window, std::int64_t n,
                  std::int64_t oracle_ceiling) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (n > oracle_ceiling)
    throw ResourceLimitError("oracle ceiling " + std::to_string(oracle_ceiling) + " exceeded");
  BigInt result = 1;
  for (std::int64_t i = window.m * n + 1; i <= window.l * n; ++i) {
    const BigInt term = BigInt(pair.a1 * i + pair.b1) * BigInt(pair.a2 * i + pair.b2);
    result = lcm(result, term);
  }
  return result;
}

BigInt bigint_lcm_linear(std::int64_t a, std::int64_t b, const Window& window, std::int64_t n,
                         std::int64_t oracle_ceiling) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (n > oracle_ceiling)
    throw ResourceLimitError("oracle ceiling " + std::to_string(oracle_ceiling) + " exceeded");
  BigInt result = 1;
  for (std::int64_t i = window.m * n + 1; i <= window.l * n; ++i)
    result = lcm(result, BigInt(a * i + b));
  return result;
}

std::uint64_t exceptional_bound(const ProgressionPair& pair, const Window& window,
                                std::int64_t n) {
  const auto ceil_sqrt = [](std::uint64_t v) {
    const std::uint64_t s = integer_sqrt(v);
    return s * s == v ? s : s + 1;
  };
  const auto v1 = static_cast<std::uint64_t>((__int128)pair.a1 * window.l * n + pair.b1);
  const auto v2 = static_cast<std::uint64_t>((__int128)pair.a2 * window.l * n + pair.b2);
  return std::max(ceil_sqrt(v1), ceil_sqrt(v2));
}

PrimeSupportByResidue prime_support_by_residue(const ValuationMap& valuations) {
  const std::int64_t q = valuations.pair.q();
  const std::int64_t det = valuations.pair.cross_determinant();
  const std::uint64_t abs_det =
      det < 0 ? static_cast<std::uint64_t>(-(__int128)det) : static_cast<std::uint64_t>(det);

  PrimeSupportByResidue out{q, {}, {}};
  for (const std::int64_t r_prime : ReducedResidueSystem(q).residues) out.classes[r_prime];
  for (const auto& [p, v] : valuations.max_valuation) {
    if (abs_det % p == 0 || static_cast<std::uint64_t>(q) % p == 0) {
      out.excluded.push_back(p);
      continue;
    }
    const std::int64_t r_prime = smallest_positive_residue(static_cast<std::int64_t>(p), q);
    out.classes[r_prime].push_back(p);
  }
  return out;
}

double theta_log_lcm_estimate(const ProgressionPair& pair, const Window& window, std::int64_t n,
                              const SieveConfig& cfg) {
  const std::int64_t q = pair.q();
  KahanSum acc;
  for (const std::int64_t r_prime : ReducedResidueSystem(q).residues) {
    const std::int64_t r = modular_inverse(r_prime, q);
    const IntervalSet set = prime_locating_set(pair, window, r);
    acc.add(theta_over_intervals(set, n, q, r_prime, cfg).value);
  }
  return acc.value();
}

std::string format_valuations(const ValuationMap& valuations) {
  std::string out;
  for (const auto& [p, v] : valuations.max_valuation)
    out += std::to_string(p) + " " + std::to_string(v) + "\n";
  return out;
}

std::vector<std::uint64_t> unexplained_support_difference(const ProgressionPair& pair,
                                                          const Window& window, std::int64_t n,
                                                          const SieveConfig& cfg) {
  const auto result = exact_log_lcm(pair, window, n, cfg);
  const PrimeSupportByResidue support = prime_support_by_residue(result.valuations);

  const std::int64_t q = pair.q();
  const std::int64_t det = pair.cross_determinant();
  const std::uint64_t abs_det =
      det < 0 ? static_cast<std::uint64_t>(-(__int128)det) : static_cast<std::uint64_t>(det);
  const std::uint64_t m_bound = exceptional_bound(pair, window, n);
  // The valuation-side intervals carry a +b_j shift in the numerator that the
  // locating intervals drop; everything else is floor rounding.
  const BigRational slack = std::max(pair.b1, pair.b2) + 1;

  std::vector<std::uint64_t> unexplained;
  for (const std::int64_t r_prime : ReducedResidueSystem(q).residues) {
    const std::int64_t r = modular_inverse(r_prime, q);
    const auto family = prime_locating_family(pair, window, r);
    const IntervalSet set = normalize(family);

    std::vector<std::uint64_t> located;
    for (const auto& part : set.parts) {
      const BigInt lo_big = numerator(part.left) * n / denominator(part.left);
      const BigInt hi_big = numerator(part.right) * n / denominator(part.right);
      if (hi_big > cfg.ceiling)
        throw ResourceLimitError("scaled interval bound exceeds sieve ceiling");
      const auto in_part = primes_in(lo_big.convert_to<std::uint64_t>(),
                                     hi_big.convert_to<std::uint64_t>(), q, r_prime, cfg);
      located.insert(located.end(), in_part.begin(), in_part.end());
    }

    const auto& supported = support.classes.at(r_prime);
    std::vector<std::uint64_t> difference;
    std::set_symmetric_difference(located.begin(), located.end(), supported.begin(),
                                  supported.end(), std::back_inserter(difference));

    for (const std::uint64_t p : difference) {
      if (abs_det % p == 0 || static_cast<std::uint64_t>(q) % p == 0) continue;
      if (p <= m_bound) continue;
      bool near_boundary = false;
      const BigRational scaled_p = BigRational(p);
      for (const auto& part : family) {
        if (abs(scaled_p - part.left * n) <= slack || abs(scaled_p - part.right * n) <= slack) {
          near_boundary = true;
          break;
        }
      }
      if (!near_boundary) unexplained.push_back(p);
    }
  }
  return unexplained;
}

} // namespace qlcm
