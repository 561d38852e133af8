#include "doctest.h"

#include "rholie/deformation.hpp"
#include "rholie/error.hpp"

#include "fixtures.hpp"

#include <string>

using namespace rholie;
using fixtures::a4;
using fixtures::unit4;
using fixtures::z2_super_zero;

namespace {

// On the quadruple algebra every structure constant is a single output
// component, so a diagonal operator diag(d) satisfies the Nijenhuis
// identity iff for each bracket (i,j,k) -> e_l
//   d_l^2 - (d_i+d_j+d_k) d_l + (d_i d_j + d_i d_k + d_j d_k) = 0.
bool diag_is_nijenhuis_scalar(const std::array<Rat, 4>& d) {
  const int out[4] = {3, 2, 1, 0};  // complement of each increasing triple
  const int tri[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  for (int t = 0; t < 4; ++t) {
    Rat di = d[tri[t][0]], dj = d[tri[t][1]], dk = d[tri[t][2]];
    Rat dl = d[out[t]];
    Rat val = Rat(dl * dl) - Rat((di + dj + dk) * dl) +
              Rat(di * dj + di * dk + dj * dk);
    if (!rat_is_zero(val)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("deformation flags agree with the independent routes") {
  Algebra3 a = a4();

  Cochain zero = make_cochain(a, 1, zero_degree(a.group), 4, {});
  auto rz = check_infinitesimal_deformation(a, zero);
  CHECK(rz.is_deformation);
  CHECK(rz.w_is_cocycle);
  CHECK(rz.w_is_structure);
  CHECK(rz.consistency.pass());

  auto rb = check_infinitesimal_deformation(a, bracket_cochain(a));
  CHECK(rb.is_deformation);
  CHECK(rb.consistency.pass());

  Cochain bad = make_cochain(a, 1, zero_degree(a.group), 4,
                             {{{0, 1, 2}, unit4(0, 1)}});
  auto rbad = check_infinitesimal_deformation(a, bad);
  CHECK(!rbad.w_is_cocycle);
  CHECK(!rbad.cocycle.pass());
  CHECK(rbad.is_deformation == (rbad.w_is_cocycle && rbad.w_is_structure));
  CHECK(rbad.consistency.pass());

  fixtures::Lcg rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    Cochain w = fixtures::random_cochain(a, 1, 4, rng);
    auto r = check_infinitesimal_deformation(a, w);
    CHECK(r.is_deformation == (r.w_is_cocycle && r.w_is_structure));
    CHECK(r.consistency.pass());
  }
}

TEST_CASE("deformation cochain preconditions") {
  Algebra3 a = a4();
  Cochain wrong_dim = make_cochain(a, 1, zero_degree(a.group), 3, {});
  CHECK_THROWS_AS(check_infinitesimal_deformation(a, wrong_dim), InputError);

  Algebra3 z = fixtures::zero3();
  Vec v = Vec::Zero(3);
  v[0] = 1;  // lands in the wrong graded component
  Cochain off = make_cochain(z, 1, zero_degree(z.group), 3, {{{0, 1, 2}, v}});
  CHECK_THROWS_AS(check_infinitesimal_deformation(z, off), InputError);
}

TEST_CASE("nijenhuis operators on the quadruple algebra") {
  Algebra3 a = a4();
  Degree dz = zero_degree(a.group);

  CHECK(is_nijenhuis(a, {Mat::Zero(4, 4), dz}).pass());
  CHECK(!is_nijenhuis(a, {Mat::Identity(4, 4), dz}).pass());
  CHECK(!diag_is_nijenhuis_scalar({Rat(1), Rat(1), Rat(1), Rat(1)}));

  auto cands = nijenhuis_candidates(a);
  REQUIRE(cands.size() == 1);
  CHECK(is_zero_mat(cands[0].matrix));

  // independent scan: over the same diagonal grid, only zero satisfies the
  // per-triple scalar condition
  std::vector<Rat> grid = {Rat(-2), Rat(-1), Rat(-1, 2), Rat(0),
                           Rat(1, 2), Rat(1), Rat(2)};
  int hits = 0;
  for (const Rat& d0 : grid)
    for (const Rat& d1 : grid)
      for (const Rat& d2 : grid)
        for (const Rat& d3 : grid)
          if (diag_is_nijenhuis_scalar({d0, d1, d2, d3})) ++hits;
  CHECK(hits == 1);

  for (const auto& nop : cands) {
    Cochain wn = nijenhuis_bracket(a, nop);
    CHECK(fixtures::cochain_is_zero(wn));
    auto rep = check_infinitesimal_deformation(a, wn);
    CHECK(rep.is_deformation);
    CHECK(rep.consistency.pass());
    CHECK(check_trivial_deformation(a, nop).pass());
  }

  GradedOperator inner{Mat::Zero(4, 4), dz};
  inner.matrix(3, 2) = 1;
  inner.matrix(2, 3) = -1;
  CHECK(!is_nijenhuis(a, inner).pass());
  try {
    check_trivial_deformation(a, inner);
    FAIL("expected a precondition failure");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("not Hom-Nijenhuis") != std::string::npos);
  }
}

TEST_CASE("nijenhuis operators on a zero bracket") {
  Algebra3 s = z2_super_zero();
  auto cands = nijenhuis_candidates(s);
  CHECK(cands.size() == 49);  // the full 7x7 diagonal grid
  for (const auto& nop : cands) {
    CHECK(is_nijenhuis(s, nop).pass());
    Cochain wn = nijenhuis_bracket(s, nop);
    CHECK(fixtures::cochain_is_zero(wn));
    CHECK(check_trivial_deformation(s, nop).pass());
  }

  Mat proj = Mat::Zero(2, 2);
  proj(0, 0) = 1;
  CHECK(is_nijenhuis(s, {proj, zero_degree(s.group)}).pass());
  CHECK(check_trivial_deformation(s, {proj, zero_degree(s.group)}).pass());

  Mat off = Mat::Zero(2, 2);
  off(0, 1) = 1;  // crosses the grading
  CheckReport r = is_nijenhuis(s, {off, zero_degree(s.group)});
  CHECK(!r.pass());
  CHECK(r.identity == "operator-degree");

  CHECK_THROWS_AS(is_nijenhuis(s, {Mat::Zero(2, 2), Degree{{1}}}), InputError);
}

TEST_CASE("cochain and tensor views of the bracket coincide") {
  Algebra3 a = a4();
  Cochain br = bracket_cochain(a);
  TriTensor t = cochain_to_tritensor(a, br);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        CHECK(vec_equal(t.entry(i, j, k), a.bracket.entry(i, j, k)));
}
