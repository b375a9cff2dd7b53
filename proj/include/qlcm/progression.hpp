#pragma once

#include <cstdint>

#include "qlcm/residue.hpp"

namespace qlcm {

// Index window (m*n, l*n]. l > m >= 0; the length per unit n is l - m.
struct Window {
  std::int64_t l;
  std::int64_t m;

  Window(std::int64_t l_, std::int64_t m_);

  std::int64_t span() const { return l - m; }
};

// The reducible quadratic f(x) = (a1*x + b1)(a2*x + b2) with positive
// coprime coefficient pairs and distinct linear forms.
struct ProgressionPair {
  std::int64_t a1;
  std::int64_t b1;
  std::int64_t a2;
  std::int64_t b2;

  ProgressionPair(std::int64_t a1_, std::int64_t b1_, std::int64_t a2_, std::int64_t b2_);

  // Modulus classifying primes by residue.
  std::int64_t q() const { return lcm64(a1, a2); }

  // a1*b2 - a2*b1; primes dividing it may divide both linear factors.
  std::int64_t cross_determinant() const { return a1 * b2 - a2 * b1; }

  ProgressionPair swapped() const { return ProgressionPair(a2, b2, a1, b1); }
};

} // namespace qlcm
