#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace qlcm {

// All asymptotic constants are exact rationals; doubles appear only at the
// CLI boundary and in the theta/log-lcm engines.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigRational make_rational(std::int64_t num, std::int64_t den) {
  return BigRational(BigInt(num), BigInt(den));
}

// Canonical "num/den" form; whole numbers print without the "/1".
std::string to_fraction_string(const BigRational& value);

// 12 significant digits, round-half-even (via the binary double rounding).
std::string to_decimal_string(const BigRational& value);
std::string to_decimal_string(double value);

// Natural log of a positive big integer, exact mantissa/exponent split so the
// value may exceed the double range.
double log_of_bigint(const BigInt& value);

} // namespace qlcm
