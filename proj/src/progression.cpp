#include "qlcm/progression.hpp"

#include <stdexcept>
#include <string>

namespace qlcm {

namespace {

void check_coefficient(std::int64_t v, const char* name) {
  if (v < 1 || v > kCoefficientLimit)
    throw std::invalid_argument(std::string(name) + " must lie in [1, " +
                                std::to_string(kCoefficientLimit) + "], got " +
                                std::to_string(v));
}

} // namespace

Window::Window(std::int64_t l_, std::int64_t m_) : l(l_), m(m_) {
  if (m < 0 || l <= m)
    throw std::invalid_argument("window requires l > m >= 0, got l=" + std::to_string(l) +
                                " m=" + std::to_string(m));
  if (l > kCoefficientLimit)
    throw std::invalid_argument("window bound l exceeds coefficient limit");
}

ProgressionPair::ProgressionPair(std::int64_t a1_, std::int64_t b1_, std::int64_t a2_,
                                 std::int64_t b2_)
    : a1(a1_), b1(b1_), a2(a2_), b2(b2_) {
  check_coefficient(a1, "a1");
  check_coefficient(b1, "b1");
  check_coefficient(a2, "a2");
  check_coefficient(b2, "b2");
  if (gcd64(a1, b1) != 1 || gcd64(a2, b2) != 1)
    throw std::invalid_argument("each pair (a_i, b_i) must be coprime");
  if (a1 * b2 == a2 * b1)
    throw std::invalid_argument("a1*b2 = a2*b1: the two linear forms coincide up to scale");
}

} // namespace qlcm
