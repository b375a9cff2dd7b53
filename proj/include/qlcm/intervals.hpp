#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qlcm/constants.hpp"
#include "qlcm/progression.hpp"
#include "qlcm/rational.hpp"

namespace qlcm {

// (left*n, right*n] with rational endpoints measured per n.
struct HalfOpenInterval {
  BigRational left;
  BigRational right;

  HalfOpenInterval(BigRational l, BigRational r);

  BigRational length() const { return right - left; }
  bool operator==(const HalfOpenInterval& o) const = default;
};

// Finite union of half-open intervals. Normalized form is sorted, pairwise
// disjoint, no touching pair (right_i < left_{i+1}).
struct IntervalSet {
  std::vector<HalfOpenInterval> parts;

  bool is_normalized() const;
  bool operator==(const IntervalSet& o) const = default;
};

// Sort and merge (touching intervals (a,b],(b,c] merge to (a,c]).
// Empty intervals are rejected.
IntervalSet normalize(std::vector<HalfOpenInterval> parts);

// Total length of a normalized set.
BigRational measure(const IntervalSet& set);

// JSON list of {"left": "p/q", "right": "p/q"} objects.
std::string to_json_string(const IntervalSet& set);

// Largest index i for which the i-th interval of the family with leading
// coefficient a and residue offset `residue_value` still reaches past the
// base block (0, l-m].
std::int64_t interval_reach(std::int64_t a, std::int64_t residue_value, const Window& window);

// The raw interval family locating the primes of residue class r:
// both per-form families for 0 <= i <= reach_j plus the base block (0, l-m].
std::vector<HalfOpenInterval> prime_locating_family(const ProgressionPair& pair,
                                                    const Window& window, std::int64_t r);

// Normalized union of the family above.
IntervalSet prime_locating_set(const ProgressionPair& pair, const Window& window,
                               std::int64_t r);

enum class DecompositionCase {
  kMergeDominant, // merge_cutoff >= pair_cutoff + 1
  kPairDominant,  // merge_cutoff <= pair_cutoff
};

// Explicit disjoint piece list whose union is the prime-locating set,
// in the oriented variable order.
struct CaseDecomposition {
  DecompositionCase tag;
  std::int64_t merge_cutoff;
  std::int64_t pair_cutoff;
  std::int64_t reach1; // oriented x-family reach
  std::int64_t reach2; // oriented y-family reach
  std::vector<HalfOpenInterval> pieces;
};

// Builds the case decomposition; orientation is recomputed internally.
// Throws std::logic_error naming the offending pieces if they overlap
// (that would falsify the implementation).
CaseDecomposition decompose_locating_set(const ProgressionPair& pair, const Window& window,
                                         std::int64_t r);

} // namespace qlcm
