#pragma once

#include "rholie/algebra.hpp"

namespace rholie {

// Homogeneous linear operator on A together with its degree shift.
struct GradedOperator {
  Mat matrix;
  Degree x_degree;
};

struct OperatorClassification {
  CheckReport gder;
  CheckReport qder;
  CheckReport centroid;
  CheckReport qcentroid;
};

CheckReport is_phi_k_derivation(const Algebra3& a, const GradedOperator& x,
                                int k);

// Basis of the space of degree-`x_degree` operators commuting with phi and
// satisfying the twisted Leibniz rule with phi^k on the undisturbed slots.
std::vector<GradedOperator> derivation_space(const Algebra3& a, int k,
                                             const Degree& x_degree);

// ad_k(e_i, e_j): g -> [e_i, e_j, phi^k(g)].  Requires phi-fixed e_i, e_j;
// the result satisfies is_phi_k_derivation at k+1.
GradedOperator inner_derivation(const Algebra3& a, int i, int j, int k);

OperatorClassification classify_operator(const Algebra3& a,
                                         const GradedOperator& x, int k);

}  // namespace rholie
