#pragma once

#include <gmpxx.h>
#include <Eigen/Core>

#include <optional>
#include <string>

namespace Eigen {

// Exact rational scalar for dense matrices.  Cost weights only steer Eigen's
// lazy-evaluation heuristics; correctness does not depend on them.
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace rholie {

using Rat = mpq_class;

/// Parses "p", "-p" or "p/q" with decimal digits.  Returns nullopt on any
/// malformed input, including a zero denominator.
std::optional<Rat> rat_from_string(const std::string& s);

std::string rat_to_string(const Rat& r);

/// r^e for any integer exponent; requires r != 0 when e < 0.
Rat rat_pow(const Rat& r, long long e);

inline bool rat_is_zero(const Rat& r) { return sgn(r) == 0; }

}  // namespace rholie
