#pragma once

#include "rholie/grading.hpp"
#include "rholie/report.hpp"
#include "rholie/types.hpp"

namespace rholie {

/// Two-cycle bicharacter rho : G x G -> k*, stored by its values on the
/// chosen generators of G: rho(a, c) = prod_{i,j} q(i,j)^(a_i * c_j).
/// A valid q makes rho(a,b)rho(b,a) = 1 and rho(a+b,c) = rho(a,c)rho(b,c)
/// hold for all degrees, and makes rho well defined on torsion coordinates.
struct Bicharacter {
  Mat q;
};

/// Structural validation of the generator matrix:
///   * q(j,i) = q(i,j)^-1 for all i, j (hence q(i,i) = +-1),
///   * q(i,j)^m = q(j,i)^m = 1 whenever coordinate i has torsion order m.
/// Dimension mismatches and zero entries throw InputError; law violations
/// come back as a fail report whose witness is the first offending (i, j).
CheckReport validate_bicharacter(const GradingGroup& g, const Mat& q);

Rat rho_eval(const Bicharacter& b, const Degree& a, const Degree& c);

}  // namespace rholie
