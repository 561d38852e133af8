#pragma once

#include "rholie/algebra.hpp"

#include <array>

namespace rholie {

/// Action of the canonical pair basis of wedge^2 A on a graded space V: beta
/// twists V, mu holds one matrix per canonical pair, and arbitrary ordered
/// pairs reduce to canonical ones with the rho-skew sign.
struct Representation {
  GradedBasis space;
  Mat beta;
  PairBasis pb;
  std::vector<Mat> mu;

  int dim() const { return space.dim(); }
};

/// Same data viewed through the action (f1,f2).m = mu(f1,f2)(m).
struct ModuleAction {
  GradedBasis space;
  Mat beta;
  PairBasis pb;
  std::vector<Mat> mu;
};

ModuleAction rep_to_module(const Representation& r);
Representation module_to_rep(const ModuleAction& m);

/// Assembles a representation from explicit pair entries, expanding the
/// rho-skew pair rule.  Throws InputError on shape problems, out-of-range
/// indices, or inconsistent duplicate entries.
Representation make_representation(
    const Algebra3& a, GradedBasis space, Mat beta,
    const std::vector<std::pair<std::array<int, 2>, Mat>>& entries);

/// mu(e_i, e_j) for an arbitrary ordered pair.
Mat rep_action(const Algebra3& a, const Representation& r, int i, int j);

/// Bilinear extension of mu to coordinate vectors.
Mat mu_bilinear(const Algebra3& a, const Representation& r, const Vec& x,
                const Vec& y);

Vec mu_apply(const Algebra3& a, const Representation& r, const Vec& x,
             const Vec& y, const Vec& u);

/// Degree rule plus the four defining operator identities, each verified on
/// every basis instantiation.  The witness names the condition and the tuple.
CheckReport check_representation(const Algebra3& a, const Representation& r,
                                 Exec ex = {});

CheckReport check_module(const Algebra3& a, const ModuleAction& m,
                         Exec ex = {});

/// V = A, beta = phi, mu(f1,f2)(f3) = [f1,f2,f3].
Representation adjoint_rep(const Algebra3& a);

struct DualRep {
  Representation rep;
  std::vector<CheckReport> conditions;  // the four dual-validity conditions

  bool valid() const {
    for (const auto& c : conditions)
      if (!c.pass()) return false;
    return true;
  }
};

/// Dual action on V*: beta~ = beta^T and
///   mu~(f1,f2)(alpha) = -rho(|f1|+|f2|, |alpha|) alpha o mu(f1,f2),
/// with |e_m*| = -|e_m|.  The attached condition reports decide whether the
/// dual is again a representation.
DualRep dual_rep(const Algebra3& a, const Representation& r);

/// Dual of the adjoint.
Representation coadjoint_rep(const Algebra3& a);

}  // namespace rholie
