#include "qlcm/verify.hpp"

#include <cmath>
#include <cstdio>

#include "qlcm/constants.hpp"
#include "qlcm/intervals.hpp"

namespace qlcm {

namespace {

std::string tuple_label(const RandomTuple& t) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "pair=(%lld,%lld,%lld,%lld) window=(%lld,%lld) r=%lld",
                (long long)t.pair.a1, (long long)t.pair.b1, (long long)t.pair.a2,
                (long long)t.pair.b2, (long long)t.window.l, (long long)t.window.m,
                (long long)t.r);
  return buf;
}

} // namespace

RandomTuple sample_tuple(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> coefficient(1, 20);
  std::uniform_int_distribution<std::int64_t> upper(1, 12);
  while (true) {
    const std::int64_t a1 = coefficient(rng);
    const std::int64_t b1 = coefficient(rng);
    const std::int64_t a2 = coefficient(rng);
    const std::int64_t b2 = coefficient(rng);
    if (gcd64(a1, b1) != 1 || gcd64(a2, b2) != 1) continue;
    if (a1 * b2 == a2 * b1) continue;
    const std::int64_t l = upper(rng);
    const std::int64_t m = std::uniform_int_distribution<std::int64_t>(0, l - 1)(rng);
    const ProgressionPair pair(a1, b1, a2, b2);
    const ReducedResidueSystem system(pair.q());
    const std::size_t pick =
        std::uniform_int_distribution<std::size_t>(0, system.residues.size() - 1)(rng);
    return {pair, Window(l, m), system.residues[pick]};
  }
}

SuiteOutcome verify_measure(std::uint64_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SuiteOutcome out;
  for (; out.samples < samples; ++out.samples) {
    const RandomTuple t = sample_tuple(rng);
    const IntervalSet set = prime_locating_set(t.pair, t.window, t.r);
    const BigRational lhs = measure(set);
    const BigRational rhs = residue_constant(t.pair, t.window, t.r);
    if (lhs != rhs) {
      out.passed = false;
      out.counterexample = tuple_label(t) + ": measure " + to_fraction_string(lhs) +
                           " != weight " + to_fraction_string(rhs) +
                           " intervals=" + to_json_string(set);
      return out;
    }
  }
  return out;
}

SuiteOutcome verify_decomposition(std::uint64_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SuiteOutcome out;
  for (; out.samples < samples; ++out.samples) {
    const RandomTuple t = sample_tuple(rng);
    try {
      const CaseDecomposition d = decompose_locating_set(t.pair, t.window, t.r);
      const IntervalSet rebuilt = normalize(d.pieces);
      const IntervalSet expected = prime_locating_set(t.pair, t.window, t.r);
      if (!(rebuilt == expected)) {
        out.passed = false;
        out.counterexample = tuple_label(t) + ": piece union " + to_json_string(rebuilt) +
                             " != locating set " + to_json_string(expected);
        return out;
      }
    } catch (const std::logic_error& e) {
      out.passed = false;
      out.counterexample = tuple_label(t) + ": " + e.what();
      return out;
    }
  }
  return out;
}

SuiteOutcome verify_support(std::uint64_t samples, std::uint64_t seed, std::int64_t n,
                            const SieveConfig& cfg) {
  std::mt19937_64 rng(seed);
  SuiteOutcome out;
  for (; out.samples < samples; ++out.samples) {
    const RandomTuple t = sample_tuple(rng);
    const auto leftovers = unexplained_support_difference(t.pair, t.window, n, cfg);
    if (!leftovers.empty()) {
      out.passed = false;
      out.counterexample = tuple_label(t) + " n=" + std::to_string(n) +
                           ": unexplained prime " + std::to_string(leftovers.front());
      return out;
    }
  }
  return out;
}

SuiteOutcome verify_oracle(std::uint64_t samples, std::uint64_t seed, std::int64_t max_n,
                           std::int64_t oracle_ceiling, const SieveConfig& cfg) {
  std::mt19937_64 rng(seed);
  SuiteOutcome out;
  for (; out.samples < samples; ++out.samples) {
    const RandomTuple t = sample_tuple(rng);
    const std::int64_t n = std::uniform_int_distribution<std::int64_t>(1, max_n)(rng);
    const double exact = exact_log_lcm(t.pair, t.window, n, cfg).log_value;
    const double oracle = log_of_bigint(bigint_lcm(t.pair, t.window, n, oracle_ceiling));
    if (std::abs(exact - oracle) > 1e-9 * std::abs(oracle)) {
      out.passed = false;
      char buf[160];
      std::snprintf(buf, sizeof(buf), " n=%lld: exact %.15g vs oracle %.15g", (long long)n,
                    exact, oracle);
      out.counterexample = tuple_label(t) + buf;
      return out;
    }
  }
  return out;
}

} // namespace qlcm
