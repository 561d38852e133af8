#pragma once

#include "rholie/cohomology.hpp"
#include "rholie/derivations.hpp"

namespace rholie {

struct DeformationReport {
  bool is_deformation = false;
  bool w_is_structure = false;
  bool w_is_cocycle = false;
  CheckReport cocycle;      // t^1 coefficient of the fundamental identity
  CheckReport structure;    // t^2 coefficient
  CheckReport consistency;  // agreement with the independent routes
};

/// Expands the fundamental identity of [.,.,.] + t.w into t-power
/// coefficients on all basis 5-tuples.  w must be level 1, valued in the
/// algebra, degree 0, graded, and stored on canonical tuples; phi must be
/// invertible.  The t^1 coefficients vanish iff w is a 1-cocycle for the
/// adjoint action, the t^2 coefficients iff w is itself a bracket satisfying
/// the fundamental identity; both equivalences are re-derived through
/// independent code paths and any disagreement is surfaced as an error
/// report.
DeformationReport check_infinitesimal_deformation(const Algebra3& a,
                                                  const Cochain& w,
                                                  Exec ex = {});

/// N^2[x,y,z] = N([Nx,y,z]+[x,Ny,z]+[x,y,Nz])
///            - ([Nx,Ny,z]+[Nx,y,Nz]+[x,Ny,Nz]) on all basis triples.
CheckReport is_nijenhuis(const Algebra3& a, const GradedOperator& n);

/// w_N(x,y,z) = [Nx,y,z]+[x,Ny,z]+[x,y,Nz]-N[x,y,z] as a level-1 cochain.
Cochain nijenhuis_bracket(const Algebra3& a, const GradedOperator& n);

/// T_t = id + t.N against the bracket deformed by w_N: coefficientwise
/// comparison of T_t[x,y,z]_t with [T_t x, T_t y, T_t z] at t^0..t^3, plus
/// the equivalent identity N[x,y,z]_N = sum of the two-N brackets.  Throws
/// when N fails is_nijenhuis (the message cites the witness).
CheckReport check_trivial_deformation(const Algebra3& a,
                                      const GradedOperator& n);

/// The bracket of a, repackaged as a level-1 cochain.
Cochain bracket_cochain(const Algebra3& a);

TriTensor cochain_to_tritensor(const Algebra3& a, const Cochain& w);

/// Finite deterministic search for Nijenhuis operators: zero, a small
/// rational diagonal grid, and scaled (anti)symmetrized elementary matrices,
/// every candidate filtered through is_nijenhuis.  Existence of nonzero
/// solutions is never implied; the list feeds property runs.
std::vector<GradedOperator> nijenhuis_candidates(const Algebra3& a);

}  // namespace rholie
