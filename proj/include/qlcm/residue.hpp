#pragma once

#include <cstdint>
#include <vector>

namespace qlcm {

// Coefficients, window bounds and residues are machine integers; this limit
// keeps every intermediate product (triple products in the cutoff
// numerators) inside __int128.
inline constexpr std::int64_t kCoefficientLimit = 1'000'000;

// Enumerating a reduced residue system costs O(modulus); refuse absurd moduli
// instead of spinning.
inline constexpr std::int64_t kResidueEnumerationLimit = 10'000'000;

// Mathematical floor division, correct for negative numerators.
std::int64_t floor_div(__int128 numerator, __int128 denominator);

// Smallest positive integer congruent to b modulo a, in [1, a].
// Multiples of a map to a, not 0.
std::int64_t smallest_positive_residue(std::int64_t b, std::int64_t a);

// As above with a wide numerator (products like b*r can exceed 64 bits).
std::int64_t smallest_positive_residue_wide(__int128 b, std::int64_t a);

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

std::int64_t euler_phi(std::int64_t q);

// The unique r in [1, q] with r * r_prime == 1 (mod q); identity for q = 1.
// Rejects inputs not coprime to q.
std::int64_t modular_inverse(std::int64_t r_prime, std::int64_t q);

// The positive integers in [1, q] coprime to q, ascending.
struct ReducedResidueSystem {
  std::int64_t modulus;
  std::vector<std::int64_t> residues;

  explicit ReducedResidueSystem(std::int64_t q);

  std::int64_t phi() const { return static_cast<std::int64_t>(residues.size()); }
};

} // namespace qlcm
