#include "qlcm/rational.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace qlcm {

std::string to_fraction_string(const BigRational& value) {
  const BigInt num = numerator(value);
  const BigInt den = denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_decimal_string(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

std::string to_decimal_string(const BigRational& value) {
  return to_decimal_string(value.convert_to<double>());
}

double log_of_bigint(const BigInt& value) {
  if (value <= 0) throw std::invalid_argument("log_of_bigint requires a positive integer");
  if (value == 1) return 0.0;
  const unsigned bits = msb(value); // index of the highest set bit
  if (bits <= 62) return std::log(value.convert_to<double>());
  const unsigned shift = bits - 52;
  const double mantissa = BigInt(value >> shift).convert_to<double>();
  return std::log(mantissa) + static_cast<double>(shift) * std::log(2.0);
}

} // namespace qlcm
