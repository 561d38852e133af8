#pragma once

#include "rholie/algebra.hpp"
#include "rholie/cohomology.hpp"

#include <array>
#include <utility>
#include <vector>

namespace fixtures {

using namespace rholie;

inline Vec unit4(int l, const Rat& c) {
  Vec v = Vec::Zero(4);
  v[l] = c;
  return v;
}

// The 4-dimensional algebra whose bracket is the alternating quadruple form:
// [e1,e2,e3]=e4, [e1,e2,e4]=-e3, [e1,e3,e4]=e2, [e2,e3,e4]=-e1 (names are
// 1-based, indices 0-based), trivial grading, identity twist.
inline Algebra3 a4() {
  GradingGroup g;
  Bicharacter rho{Mat::Zero(0, 0)};
  GradedBasis b{{"e1", "e2", "e3", "e4"},
                {Degree{}, Degree{}, Degree{}, Degree{}}};
  std::vector<std::pair<std::array<int, 3>, Vec>> ent;
  ent.push_back({{0, 1, 2}, unit4(3, 1)});
  ent.push_back({{0, 1, 3}, unit4(2, -1)});
  ent.push_back({{0, 2, 3}, unit4(1, 1)});
  ent.push_back({{1, 2, 3}, unit4(0, -1)});
  TriTensor t = canonicalize_tritensor(g, rho, b.degrees, 4, ent);
  return Algebra3{g, rho, b, std::move(t), Mat::Identity(4, 4)};
}

// Zero bracket on an even and an odd generator over Z/2 with the super sign
// rule rho(a,b) = (-1)^{ab}.
inline Algebra3 z2_super_zero() {
  GradingGroup g{0, {2}};
  Mat q(1, 1);
  q(0, 0) = -1;
  GradedBasis b{{"x", "y"}, {Degree{{0}}, Degree{{1}}}};
  return Algebra3{g, Bicharacter{q}, b, TriTensor(2, 2), Mat::Identity(2, 2)};
}

// Three-dimensional zero bracket, Z/2-graded with a trivial bicharacter.
inline Algebra3 zero3() {
  GradingGroup g{0, {2}};
  Mat q(1, 1);
  q(0, 0) = 1;
  GradedBasis b{{"a", "b", "c"}, {Degree{{0}}, Degree{{0}}, Degree{{1}}}};
  return Algebra3{g, Bicharacter{q}, b, TriTensor(3, 3), Mat::Identity(3, 3)};
}

// Deterministic generator for reproducible pseudo-random test data.
struct Lcg {
  unsigned long long s;

  explicit Lcg(unsigned long long seed) : s(seed) {}

  long next(long lo, long hi) {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    return lo + static_cast<long>((s >> 33) %
                                  static_cast<unsigned long long>(hi - lo + 1));
  }

  Rat rat() {
    Rat r(next(-4, 4), next(1, 3));
    r.canonicalize();
    return r;
  }
};

// Random values on every canonical tuple of the level; no degree constraint,
// so the result exercises the full coboundary formulas.
inline Cochain random_cochain(const Algebra3& a, int level, int value_dim,
                              Lcg& rng) {
  std::vector<std::pair<std::vector<int>, Vec>> ent;
  for (const auto& t : canonical_tuples(a, level)) {
    Vec v(value_dim);
    for (int m = 0; m < value_dim; ++m) v[m] = rng.rat();
    ent.emplace_back(t, std::move(v));
  }
  return make_cochain(a, level, zero_degree(a.group), value_dim, ent);
}

inline bool cochain_is_zero(const Cochain& w) {
  for (const auto& [t, v] : w.values)
    if (!is_zero_vec(v)) return false;
  return true;
}

}  // namespace fixtures
