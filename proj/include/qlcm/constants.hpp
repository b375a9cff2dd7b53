#pragma once

#include <cstdint>

#include "qlcm/progression.hpp"
#include "qlcm/rational.hpp"

namespace qlcm {

// The index set {0, ..., last}; empty when last < 0, so sums over it vanish.
struct PrefixRange {
  std::int64_t last;

  struct iterator {
    std::int64_t i;
    std::int64_t operator*() const { return i; }
    iterator& operator++() { ++i; return *this; }
    bool operator!=(const iterator& o) const { return i != o.i; }
  };

  iterator begin() const { return {0}; }
  iterator end() const { return {last < 0 ? 0 : last + 1}; }
  bool empty() const { return last < 0; }
};

// Orientation of a (pair, residue) tuple: the roles (x, y, z, w) with the
// residues <z*r>_x and <w*r>_y precomputed. `swapped` records whether the
// two linear forms were exchanged to satisfy x*<w*r>_y >= y*<z*r>_x.
struct Orientation {
  std::int64_t x;
  std::int64_t y;
  std::int64_t z;
  std::int64_t w;
  std::int64_t zres; // <z*r>_x
  std::int64_t wres; // <w*r>_y
  bool swapped;
};

Orientation orient(const ProgressionPair& pair, std::int64_t r);

// Cutoff indices of the interval chain. merge_cutoff is never negative;
// pair_cutoff may be.
std::int64_t merge_cutoff(std::int64_t x, std::int64_t y, std::int64_t z, std::int64_t w,
                          const Window& window, std::int64_t r);
std::int64_t pair_cutoff(std::int64_t x, std::int64_t y, std::int64_t z, std::int64_t w,
                         const Window& window, std::int64_t r);

// Per-residue weight in the oriented variable order: the exact length of the
// residue's prime-locating interval union, as a closed-form sum.
BigRational oriented_weight(std::int64_t x, std::int64_t y, std::int64_t z, std::int64_t w,
                            const Window& window, std::int64_t r);

// Weight of residue r for the pair, orientation chosen internally.
// Requires gcd(r, q) = 1, 1 <= r <= q.
BigRational residue_constant(const ProgressionPair& pair, const Window& window, std::int64_t r);

// The constant A with log lcm = A*n + o(n): averaged residue weights.
BigRational asymptotic_constant(const ProgressionPair& pair, const Window& window);

// Arithmetic-progression analogue for a single linear form a*x + b.
// Requires a >= 1, a + b >= 1, gcd(a, b) = 1, gcd(r, a) = 1; b itself may be
// zero or negative, only r and a enter the value.
BigRational linear_residue_constant(std::int64_t a, std::int64_t b, const Window& window,
                                    std::int64_t r);

// (a/phi(a)) * sum of linear residue constants: log lcm{a*i+b} ~ that * n.
BigRational linear_constant(std::int64_t a, std::int64_t b, const Window& window);

// Constant for the squared progression (a*i+b)^2: twice the linear one.
BigRational squared_constant(std::int64_t a, std::int64_t b, const Window& window);

} // namespace qlcm
