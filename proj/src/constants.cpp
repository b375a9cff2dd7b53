#include "qlcm/constants.hpp"

#include <stdexcept>
#include <string>

namespace qlcm {

namespace {

void check_positive(std::int64_t v, const char* name) {
  if (v < 1) throw std::invalid_argument(std::string(name) + " must be positive");
  if (v > kCoefficientLimit)
    throw std::invalid_argument(std::string(name) + " exceeds coefficient limit");
}

void check_cutoff_args(std::int64_t x, std::int64_t y, std::int64_t z, std::int64_t w,
                       std::int64_t r) {
  check_positive(x, "x");
  check_positive(y, "y");
  check_positive(z, "z");
  check_positive(w, "w");
  if (r < 1) throw std::invalid_argument("residue r must be positive");
}

} // namespace

Orientation orient(const ProgressionPair& pair, std::int64_t r) {
  const std::int64_t res1 = smallest_positive_residue_wide((__int128)pair.b1 * r, pair.a1);
  const std::int64_t res2 = smallest_positive_residue_wide((__int128)pair.b2 * r, pair.a2);
  if ((__int128)pair.a1 * res2 >= (__int128)pair.a2 * res1)
    return {pair.a1, pair.a2, pair.b1, pair.b2, res1, res2, false};
  return {pair.a2, pair.a1, pair.b2, pair.b1, res2, res1, true};
}

std::int64_t merge_cutoff(std::int64_t x, std::int64_t y, std::int64_t z, std::int64_t w,
                          const Window& window, std::int64_t r) {
  check_cutoff_args(x, y, z, w, r);
  const std::int64_t zres = smallest_positive_residue_wide((__int128)z * r, x);
  const std::int64_t wres = smallest_positive_residue_wide((__int128)w * r, y);
  const __int128 num = (__int128)x * y * window.l + (__int128)y * window.m * zres -
                       (__int128)x * window.l * wres;
  return floor_div(num, (__int128)x * y * window.span());
}

std::int64_t pair_cutoff(std::int64_t x, std::int64_t y, std::int64_t z, std::int64_t w,
                         const Window& window, std::int64_t r) {
  check_cutoff_args(x, y, z, w, r);
  const std::int64_t zres = smallest_positive_residue_wide((__int128)z * r, x);
  const std::int64_t wres = smallest_positive_residue_wide((__int128)w * r, y);
  const __int128 num = (__int128)x * window.m * wres - (__int128)y * window.l * zres;
  return floor_div(num, (__int128)x * y * window.span());
}

BigRational oriented_weight(std::int64_t x, std::int64_t y, std::int64_t z, std::int64_t w,
                            const Window& window, std::int64_t r) {
  check_cutoff_args(x, y, z, w, r);
  const std::int64_t zres = smallest_positive_residue_wide((__int128)z * r, x);
  const std::int64_t wres = smallest_positive_residue_wide((__int128)w * r, y);
  const std::int64_t g = merge_cutoff(x, y, z, w, window, r);
  const std::int64_t h = pair_cutoff(x, y, z, w, window, r);

  BigRational total = 0;
  for (const std::int64_t i : PrefixRange{g})
    total += make_rational(x * window.l, zres + x * i);
  for (const std::int64_t i : PrefixRange{g - 1})
    total -= make_rational(y * window.m, wres + y * i);
  for (const std::int64_t i : PrefixRange{h})
    total += make_rational(y * window.l, wres + y * i) - make_rational(x * window.m, zres + x * i);
  return total;
}

BigRational residue_constant(const ProgressionPair& pair, const Window& window, std::int64_t r) {
  const std::int64_t q = pair.q();
  if (r < 1 || r > q || gcd64(r, q) != 1)
    throw std::invalid_argument("residue " + std::to_string(r) + " is not a reduced residue mod " +
                                std::to_string(q));
  const Orientation o = orient(pair, r);
  return oriented_weight(o.x, o.y, o.z, o.w, window, r);
}

BigRational asymptotic_constant(const ProgressionPair& pair, const Window& window) {
  const ReducedResidueSystem system(pair.q());
  BigRational sum = 0;
  for (const std::int64_t r : system.residues) sum += residue_constant(pair, window, r);
  return sum / system.phi();
}

BigRational linear_residue_constant(std::int64_t a, std::int64_t b, const Window& window,
                                    std::int64_t r) {
  check_positive(a, "a");
  if (a + b < 1) throw std::invalid_argument("linear form requires a + b >= 1");
  if (gcd64(a, b < 0 ? -b : b) != 1) throw std::invalid_argument("gcd(a, b) must be 1");
  if (r < 1 || r > a || gcd64(r, a) != 1)
    throw std::invalid_argument("residue r must be a reduced residue mod a");

  if ((__int128)r * window.l >= (__int128)(a + r) * window.m)
    return make_rational(window.l, r);

  const std::int64_t cut = floor_div((__int128)a * window.l - (__int128)window.span() * r,
                                     (__int128)a * window.span());
  BigRational total = 0;
  for (std::int64_t i = 0; i < cut; ++i) total += make_rational(window.span(), r + a * i);
  total += make_rational(window.l, r + a * cut);
  return total;
}

BigRational linear_constant(std::int64_t a, std::int64_t b, const Window& window) {
  const ReducedResidueSystem system(a);
  BigRational sum = 0;
  for (const std::int64_t r : system.residues)
    sum += linear_residue_constant(a, b, window, r);
  return sum * make_rational(a, system.phi());
}

BigRational squared_constant(std::int64_t a, std::int64_t b, const Window& window) {
  return 2 * linear_constant(a, b, window);
}

} // namespace qlcm
