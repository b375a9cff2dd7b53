#include "qlcm/residue.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "qlcm/errors.hpp"

namespace qlcm {

std::int64_t floor_div(__int128 numerator, __int128 denominator) {
  if (denominator == 0) throw std::invalid_argument("floor_div by zero");
  if (denominator < 0) { numerator = -numerator; denominator = -denominator; }
  __int128 quotient = numerator / denominator;
  if (numerator % denominator != 0 && numerator < 0) --quotient;
  return static_cast<std::int64_t>(quotient);
}

std::int64_t smallest_positive_residue(std::int64_t b, std::int64_t a) {
  if (a < 1 || b < 1)
    throw std::invalid_argument("smallest_positive_residue requires a >= 1 and b >= 1");
  const std::int64_t rem = b % a;
  return rem == 0 ? a : rem;
}

std::int64_t smallest_positive_residue_wide(__int128 b, std::int64_t a) {
  if (a < 1 || b < 1)
    throw std::invalid_argument("smallest_positive_residue requires a >= 1 and b >= 1");
  const auto rem = static_cast<std::int64_t>(b % a);
  return rem == 0 ? a : rem;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) throw std::invalid_argument("lcm of zero");
  const __int128 wide = (__int128)(a / std::gcd(a, b)) * b;
  if (wide > INT64_MAX) throw std::overflow_error("lcm overflows 64 bits");
  return static_cast<std::int64_t>(wide);
}

std::int64_t euler_phi(std::int64_t q) {
  if (q < 1) throw std::invalid_argument("euler_phi requires q >= 1");
  std::int64_t result = q;
  std::int64_t rest = q;
  for (std::int64_t p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    result -= result / p;
    while (rest % p == 0) rest /= p;
  }
  if (rest > 1) result -= result / rest;
  return result;
}

std::int64_t modular_inverse(std::int64_t r_prime, std::int64_t q) {
  if (q < 1) throw std::invalid_argument("modular_inverse requires q >= 1");
  if (q == 1) return 1;
  if (r_prime < 1 || std::gcd(r_prime % q, q) != 1)
    throw std::invalid_argument("modular_inverse: " + std::to_string(r_prime) +
                                " is not coprime to " + std::to_string(q));
  // extended Euclid on (r_prime mod q, q)
  std::int64_t a = r_prime % q, b = q;
  std::int64_t x0 = 1, x1 = 0;
  while (b != 0) {
    const std::int64_t t = a / b;
    a -= t * b; std::swap(a, b);
    x0 -= t * x1; std::swap(x0, x1);
  }
  std::int64_t inv = x0 % q;
  if (inv <= 0) inv += q;
  return inv;
}

ReducedResidueSystem::ReducedResidueSystem(std::int64_t q) : modulus(q) {
  if (q < 1) throw std::invalid_argument("ReducedResidueSystem requires q >= 1");
  if (q > kResidueEnumerationLimit)
    throw ResourceLimitError("reduced residue system of modulus " + std::to_string(q) +
                             " exceeds enumeration limit");
  for (std::int64_t e = 1; e <= q; ++e)
    if (std::gcd(e, q) == 1) residues.push_back(e);
}

} // namespace qlcm
