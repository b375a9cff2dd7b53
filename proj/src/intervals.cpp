#include "qlcm/intervals.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace qlcm {

namespace {

std::string describe(const HalfOpenInterval& v) {
  return "(" + to_fraction_string(v.left) + ", " + to_fraction_string(v.right) + "]";
}

void check_residue_argument(const ProgressionPair& pair, std::int64_t r) {
  const std::int64_t q = pair.q();
  if (r < 1 || r > q || gcd64(r, q) != 1)
    throw std::invalid_argument("residue " + std::to_string(r) + " is not a reduced residue mod " +
                                std::to_string(q));
}

} // namespace

HalfOpenInterval::HalfOpenInterval(BigRational l, BigRational r)
    : left(std::move(l)), right(std::move(r)) {
  if (left < 0 || right < left)
    throw std::invalid_argument("interval requires 0 <= left <= right, got " + describe(*this));
}

bool IntervalSet::is_normalized() const {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!(parts[i].left < parts[i].right)) return false;
    if (i + 1 < parts.size() && !(parts[i].right < parts[i + 1].left)) return false;
  }
  return true;
}

IntervalSet normalize(std::vector<HalfOpenInterval> parts) {
  for (const auto& p : parts)
    if (p.left == p.right)
      throw std::invalid_argument("cannot normalize empty interval " + describe(p));
  std::sort(parts.begin(), parts.end(), [](const HalfOpenInterval& a, const HalfOpenInterval& b) {
    return a.left != b.left ? a.left < b.left : a.right < b.right;
  });
  IntervalSet out;
  for (auto& p : parts) {
    if (!out.parts.empty() && p.left <= out.parts.back().right) {
      if (p.right > out.parts.back().right) out.parts.back().right = std::move(p.right);
    } else {
      out.parts.push_back(std::move(p));
    }
  }
  return out;
}

BigRational measure(const IntervalSet& set) {
  if (!set.is_normalized()) throw std::invalid_argument("measure requires a normalized set");
  BigRational total = 0;
  for (const auto& p : set.parts) total += p.length();
  return total;
}

std::string to_json_string(const IntervalSet& set) {
  std::string out = "[";
  for (std::size_t i = 0; i < set.parts.size(); ++i) {
    if (i) out += ",";
    out += "{\"left\":\"" + to_fraction_string(set.parts[i].left) + "\",\"right\":\"" +
           to_fraction_string(set.parts[i].right) + "\"}";
  }
  out += "]";
  return out;
}

std::int64_t interval_reach(std::int64_t a, std::int64_t residue_value, const Window& window) {
  if (a < 1 || residue_value < 1 || residue_value > a)
    throw std::invalid_argument("interval_reach requires 1 <= residue_value <= a");
  const __int128 num = (__int128)a * window.l - (__int128)window.span() * residue_value;
  return floor_div(num, (__int128)a * window.span());
}

std::vector<HalfOpenInterval> prime_locating_family(const ProgressionPair& pair,
                                                    const Window& window, std::int64_t r) {
  check_residue_argument(pair, r);
  std::vector<HalfOpenInterval> family;
  const std::int64_t forms[2][2] = {{pair.a1, pair.b1}, {pair.a2, pair.b2}};
  for (const auto& [a, b] : forms) {
    const std::int64_t res = smallest_positive_residue_wide((__int128)b * r, a);
    const std::int64_t reach = interval_reach(a, res, window);
    for (std::int64_t i = 0; i <= reach; ++i) {
      const std::int64_t den = res + a * i;
      family.emplace_back(make_rational(a * window.m, den), make_rational(a * window.l, den));
    }
  }
  family.emplace_back(BigRational(0), BigRational(window.span()));
  return family;
}

IntervalSet prime_locating_set(const ProgressionPair& pair, const Window& window,
                               std::int64_t r) {
  return normalize(prime_locating_family(pair, window, r));
}

namespace {

void require(bool condition, const std::string& what) {
  if (!condition) throw std::logic_error("case decomposition violates " + what);
}

} // namespace

CaseDecomposition decompose_locating_set(const ProgressionPair& pair, const Window& window,
                                         std::int64_t r) {
  check_residue_argument(pair, r);
  const Orientation o = orient(pair, r);
  const std::int64_t cut1 = merge_cutoff(o.x, o.y, o.z, o.w, window, r);
  const std::int64_t cut2 = pair_cutoff(o.x, o.y, o.z, o.w, window, r);

  CaseDecomposition d{
      cut1 >= cut2 + 1 ? DecompositionCase::kMergeDominant : DecompositionCase::kPairDominant,
      cut1,
      cut2,
      interval_reach(o.x, o.zres, window),
      interval_reach(o.y, o.wres, window),
      {}};

  const auto x_block = [&](std::int64_t i) {
    const std::int64_t den = o.zres + o.x * i;
    return HalfOpenInterval(make_rational(o.x * window.m, den), make_rational(o.x * window.l, den));
  };
  const auto y_block = [&](std::int64_t i) {
    const std::int64_t den = o.wres + o.y * i;
    return HalfOpenInterval(make_rational(o.y * window.m, den), make_rational(o.y * window.l, den));
  };

  if (d.tag == DecompositionCase::kMergeDominant) {
    require(cut1 >= 0, "merge_cutoff >= 0");
    require(cut1 <= d.reach2, "merge_cutoff <= reach2");
    require(cut2 + 1 <= d.reach2, "pair_cutoff + 1 <= reach2");
    for (const std::int64_t i : PrefixRange{cut2}) {
      d.pieces.push_back(x_block(i));
      d.pieces.push_back(y_block(i));
    }
    for (std::int64_t i = cut2 + 1; i <= cut1 - 1; ++i)
      d.pieces.emplace_back(make_rational(o.y * window.m, o.wres + o.y * i),
                            make_rational(o.x * window.l, o.zres + o.x * i));
    d.pieces.emplace_back(BigRational(0), make_rational(o.x * window.l, o.zres + o.x * cut1));
  } else {
    require(cut1 >= 0, "merge_cutoff >= 0");
    require(cut2 >= cut1, "pair_cutoff >= merge_cutoff");
    for (const std::int64_t i : PrefixRange{cut1 - 1}) {
      d.pieces.push_back(x_block(i));
      d.pieces.push_back(y_block(i));
    }
    d.pieces.push_back(x_block(cut1));
    for (std::int64_t i = cut1; i <= cut2 - 1; ++i)
      d.pieces.emplace_back(make_rational(o.x * window.m, o.zres + o.x * (i + 1)),
                            make_rational(o.y * window.l, o.wres + o.y * i));
    d.pieces.emplace_back(BigRational(0), make_rational(o.y * window.l, o.wres + o.y * cut2));
  }

  // Disjointness is part of the contract; overlap means the implementation
  // (not the decomposition) is wrong.
  std::vector<HalfOpenInterval> sorted = d.pieces;
  std::sort(sorted.begin(), sorted.end(),
            [](const HalfOpenInterval& a, const HalfOpenInterval& b) { return a.left < b.left; });
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
    if (sorted[i + 1].left < sorted[i].right)
      throw std::logic_error("decomposition pieces overlap: " + describe(sorted[i]) + " and " +
                             describe(sorted[i + 1]));
  return d;
}

} // namespace qlcm
