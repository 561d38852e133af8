#pragma once

#include "rholie/bicharacter.hpp"
#include "rholie/exec.hpp"
#include "rholie/grading.hpp"
#include "rholie/report.hpp"
#include "rholie/types.hpp"

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rholie {

struct GradedBasis {
  std::vector<std::string> names;
  std::vector<Degree> degrees;

  int dim() const { return static_cast<int>(names.size()); }
};

/// Trilinear structure constants, stored fully expanded: one value vector per
/// ordered basis triple.  The argument space and value space may differ (the
/// bracket of an algebra has both equal; a dual-valued form does not).
class TriTensor {
 public:
  TriTensor() = default;
  TriTensor(int arg_dim, int value_dim)
      : arg_dim_(arg_dim),
        value_dim_(value_dim),
        entries_(static_cast<size_t>(arg_dim) * arg_dim * arg_dim,
                 Vec::Zero(value_dim)),
        nonzero_(entries_.size(), false) {}

  int arg_dim() const { return arg_dim_; }
  int value_dim() const { return value_dim_; }

  const Vec& entry(int i, int j, int k) const { return entries_[flat(i, j, k)]; }
  bool nonzero(int i, int j, int k) const { return nonzero_[flat(i, j, k)]; }

  void set_entry(int i, int j, int k, Vec v) {
    size_t f = flat(i, j, k);
    nonzero_[f] = !is_zero_vec(v);
    entries_[f] = std::move(v);
  }

 private:
  size_t flat(int i, int j, int k) const {
    return (static_cast<size_t>(i) * arg_dim_ + j) * arg_dim_ + k;
  }

  int arg_dim_ = 0;
  int value_dim_ = 0;
  std::vector<Vec> entries_;
  std::vector<bool> nonzero_;
};

struct Algebra3 {
  GradingGroup group;
  Bicharacter rho;
  GradedBasis basis;
  TriTensor bracket;  // value_dim == dim()
  Mat phi;

  int dim() const { return basis.dim(); }
  const Degree& degree(int i) const { return basis.degrees[i]; }
};

inline Rat rho_deg(const Algebra3& a, const Degree& x, const Degree& y) {
  return rho_eval(a.rho, x, y);
}

Degree tuple_degree(const Algebra3& a, std::span<const int> idx);

// ---------------------------------------------------------------------------
// Skew reduction.  The sign convention throughout: swapping two adjacent
// homogeneous arguments x, y (x currently first) multiplies the value by
// -rho(|x|, |y|).  A repeated index with rho(d, d) = 1 forces the value to 0;
// with rho(d, d) = -1 repeats are allowed.

/// Sorts idx ascending by bubble swaps and accumulates the sign factor, so
/// value(idx) = factor * value(sorted).  Returns nullopt when the tuple is
/// forced to zero by a repeat.
std::optional<std::pair<std::vector<int>, Rat>> sort_tuple_skew(
    const Algebra3& a, std::span<const int> idx);

/// Expands partial entries through all argument permutations and checks that
/// overlapping expansions agree.  Throws InputError on a conflict.  Grading is
/// not enforced here; check_grading reports on it.
TriTensor canonicalize_tritensor(
    const GradingGroup& g, const Bicharacter& rho,
    const std::vector<Degree>& arg_degrees, int value_dim,
    const std::vector<std::pair<std::array<int, 3>, Vec>>& entries);

Vec bracket_eval(const TriTensor& t, const Vec& x, const Vec& y, const Vec& z);

// ---------------------------------------------------------------------------
// Structural checks.

CheckReport check_grading(const Algebra3& a);
CheckReport check_skew_symmetry(const Algebra3& a);

/// rho-twisted fundamental identity over all basis 5-tuples
/// (f1, f2, g1, g2, g3):
///   [phi f1, phi f2, [g1,g2,g3]] = [[f1,f2,g1], phi g2, phi g3]
///     + rho(|f1|+|f2|, |g1|)      [phi g1, [f1,f2,g2], phi g3]
///     + rho(|f1|+|f2|, |g1|+|g2|) [phi g1, phi g2, [f1,f2,g3]].
CheckReport check_fundamental_identity(const Algebra3& a, Exec ex = {});

CheckReport check_multiplicative(const Algebra3& a);

/// alpha . [x,y,z]_a = [alpha x, alpha y, alpha z]_b and alpha . phi_a =
/// phi_b . alpha on the basis of a.  Both algebras must share group and rho.
CheckReport check_morphism(const Mat& alpha, const Algebra3& a,
                           const Algebra3& b);

// ---------------------------------------------------------------------------
// Pair space (the fundamental set L = wedge^2 A).

struct PairBasis {
  std::vector<std::pair<int, int>> pairs;  // (i, j) with i < j, plus (i, i)
                                           // whenever rho(d_i, d_i) = -1
  std::map<std::pair<int, int>, int> index;

  int dim() const { return static_cast<int>(pairs.size()); }
};

PairBasis pair_basis(const Algebra3& a);

/// Canonical form of e_i ^ e_j: pair-basis position and sign, or nullopt when
/// the wedge is forced to zero.
std::optional<std::pair<int, Rat>> reduce_pair(const Algebra3& a,
                                               const PairBasis& pb, int i,
                                               int j);

/// Coordinates of x ^ y in the canonical pair basis.
Vec wedge_coords(const Algebra3& a, const PairBasis& pb, const Vec& x,
                 const Vec& y);

/// The algebra on L induced by a multiplicative 3-Hom-rho-Lie algebra:
///   [(f1,f2),(g1,g2)] = ([f1,f2,g1], phi g2)
///                        + rho(|f1|+|f2|, |g1|) (phi g1, [f1,f2,g2]),
/// with twist phi1(f1, f2) = (phi f1, phi f2).
struct PairAlgebra {
  GradingGroup group;
  Bicharacter rho;
  PairBasis pb;
  std::vector<Degree> degrees;      // degree of each pair-basis element
  std::vector<std::vector<Vec>> sc; // sc[p][q] = [p, q] in pair coordinates
  Mat phi1;
};

PairAlgebra fundamental_algebra(const Algebra3& a);

/// Definition of a Hom-rho-Lie algebra for (L, [.,.], rho, phi1): grading,
/// binary rho-antisymmetry, and the twisted rho-Jacobi identity
///   rho(h,f)[phi1 f, [g,h]] + rho(g,h)[phi1 h, [f,g]]
///     + rho(f,g)[phi1 g, [h,f]] = 0.
CheckReport check_hom_rho_lie2(const PairAlgebra& L, Exec ex = {});

}  // namespace rholie
