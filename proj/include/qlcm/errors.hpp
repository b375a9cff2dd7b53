#pragma once

#include <stdexcept>
#include <string>

namespace qlcm {

// Thrown when a computation would exceed a configured ceiling (sieve bound,
// oracle size, residue-system enumeration). The CLI maps this to exit code 3.
class ResourceLimitError : public std::runtime_error {
public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qlcm
