#pragma once

#include <stdexcept>
#include <string>

namespace rholie {

/// Malformed or self-contradictory input data: bad scalars, dimension
/// mismatches, out-of-range indices, entries that conflict after skew
/// expansion.  Distinct from a mathematical check that fails.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rholie
