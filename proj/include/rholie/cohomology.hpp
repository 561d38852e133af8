#pragma once

#include "rholie/representation.hpp"

#include <map>

namespace rholie {

/// Level-n cochain: a (2n+1)-linear V-valued map of degree omega_degree.
/// Arity-3 cochains are fully rho-skew; at higher levels the skew rule binds
/// inside each of the n leading argument pairs while the last slot is free.
/// Values are stored on canonical tuples (constrained blocks nondecreasing),
/// nonzero entries only.
struct Cochain {
  int level = 0;
  Degree omega_degree;
  int value_dim = 0;
  std::map<std::vector<int>, Vec> values;

  int arity() const { return 2 * level + 1; }
};

/// Canonical form of an argument tuple under the level's skew structure:
/// canonical tuple plus sign, or nullopt when a repeat forces zero.
std::optional<std::pair<std::vector<int>, Rat>> reduce_cochain_tuple(
    const Algebra3& a, int level, std::span<const int> idx);

/// All canonical tuples of the level, in lexicographic order.
std::vector<std::vector<int>> canonical_tuples(const Algebra3& a, int level);

/// Builds a cochain from explicit entries; reduces every tuple to canonical,
/// rejecting conflicting or forced-zero-violating input with InputError.
Cochain make_cochain(
    const Algebra3& a, int level, Degree omega_degree, int value_dim,
    const std::vector<std::pair<std::vector<int>, Vec>>& entries);

Vec cochain_eval_idx(const Algebra3& a, const Cochain& w,
                     std::span<const int> idx);

/// Multilinear extension to coordinate-vector arguments.
Vec cochain_eval_vecs(const Algebra3& a, const Cochain& w,
                      const std::vector<const Vec*>& args);

/// Equality as maps (missing entries count as zero).
bool cochain_equal(const Cochain& x, const Cochain& y);

/// Degree rule: w(t) must land in V_{sum of argument degrees + |w|}.
CheckReport check_cochain_degree(const Algebra3& a,
                                 const std::vector<Degree>& vdeg,
                                 const Cochain& w);

/// beta o w = w o phi on every argument, checked on canonical tuples.
CheckReport is_hom_cochain(const Algebra3& a, const Representation& r,
                           const Cochain& w);

/// General coboundary, raising the level by one; |dw| = |w|.
Cochain coboundary(const Algebra3& a, const Representation& r,
                   const Cochain& w);

/// The two displayed low-level coboundaries, implemented independently of the
/// general formula so the two routes can be compared.
Cochain d0_direct(const Algebra3& a, const Representation& r,
                  const Cochain& nu);
Cochain d1_direct(const Algebra3& a, const Representation& r,
                  const Cochain& w);

CheckReport is_0_cocycle(const Algebra3& a, const Representation& r,
                         const Cochain& nu, Exec ex = {});
CheckReport is_1_cocycle(const Algebra3& a, const Representation& r,
                         const Cochain& w, Exec ex = {});

/// Basis of the space of degree-homogeneous Hom-cochains killed by the
/// coboundary, for level 0 or 1.  Coordinates are ordered tuples-lex then
/// V-index; the kernel basis is deterministic.
std::vector<Cochain> cocycle_space(const Algebra3& a, const Representation& r,
                                   int level, const Degree& omega_degree);

}  // namespace rholie
