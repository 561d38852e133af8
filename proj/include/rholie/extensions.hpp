#pragma once

#include "rholie/cohomology.hpp"
#include "rholie/representation.hpp"

namespace rholie {

/// Short exact sequence 0 -> V -(i)-> B -(p)-> A -> 0 with a twist on V.
/// V lives inside B through i; exactness is checked by rank, not by basis
/// bookkeeping.
struct ExtensionData {
  Algebra3 A;
  Algebra3 B;
  Mat i;  // dim B x dim V
  Mat p;  // dim A x dim B
  GradedBasis V;
  Mat phi_V;
};

struct Section {
  Mat delta;  // dim B x dim A, p.delta = id, delta.phi_A = phi_B.delta
};

/// Algebra on A + A* with bracket
///   [f1+a1, f2+a2, f3+a3] = [f1,f2,f3]_A + w(f1,f2,f3)
///     + mu~(f1,f2)(a3) + rho(|f1|+|f2|,|f3|) mu~(f3,f1)(a2)
///     + rho(|f1|,|f2|+|f3|) mu~(f2,f3)(a1)
/// and twist diag(phi, phi^T), where mu~ is the coadjoint action.  w must be
/// a level-1 cochain with values in A* (dimension dim A), degree 0.
Algebra3 tstar_extension(const Algebra3& a, const Cochain& w);

/// Bundles the T*-extension with its canonical injection/projection so it can
/// be analyzed as an extension of A by A*.
ExtensionData tstar_extension_data(const Algebra3& a, const Cochain& w);

CheckReport check_extension(const ExtensionData& e);
CheckReport is_abelian(const ExtensionData& e);

/// Deterministic section from the pivoted affine solver.  Throws InputError
/// when no twist-compatible section exists.
Section find_section(const ExtensionData& e);

/// Directions delta may move in while staying a section (kernel of the same
/// affine system); used to produce distinct sections.
std::vector<Mat> section_freedom(const ExtensionData& e);

/// mu(f1,f2)(u) = [delta f1, delta f2, i(u)]_B pulled back through i.
Representation induced_rep(const ExtensionData& e, const Section& s);

/// w(f1,f2,f3) = [delta f1, delta f2, delta f3]_B - delta [f1,f2,f3]_A,
/// pulled back through i.
Cochain induced_cocycle(const ExtensionData& e, const Section& s);

CheckReport check_equivalence(const ExtensionData& e1, const ExtensionData& e2,
                              const Mat& F);

/// The explicit 1-cocycle identity satisfied by induced cocycles, verified on
/// all basis 5-tuples.  When beta is the identity the result is cross-checked
/// against the coboundary route (d1 w = 0); a disagreement turns the report
/// into an error.
CheckReport check_extension_cocycle(const Algebra3& a, const Representation& r,
                                    const Cochain& w, Exec ex = {});

}  // namespace rholie
