#include "doctest.h"

#include "rholie/bicharacter.hpp"
#include "rholie/error.hpp"
#include "rholie/linalg.hpp"

#include "fixtures.hpp"

using namespace rholie;

TEST_CASE("scalar string parsing") {
  CHECK(*rat_from_string("3") == Rat(3));
  CHECK(*rat_from_string("-7") == Rat(-7));
  CHECK(*rat_from_string("-4/6") == Rat(-2, 3));
  CHECK(*rat_from_string("0") == Rat(0));
  CHECK(rat_to_string(*rat_from_string("2/4")) == "1/2");
  CHECK(rat_to_string(Rat(-2, 3)) == "-2/3");
  CHECK(rat_to_string(Rat(5)) == "5");

  CHECK(!rat_from_string("1/0"));
  CHECK(!rat_from_string(""));
  CHECK(!rat_from_string("+2"));
  CHECK(!rat_from_string("1.5"));
  CHECK(!rat_from_string("1/ 2"));
  CHECK(!rat_from_string("a"));
  CHECK(!rat_from_string("1/-2"));
}

TEST_CASE("rational powers") {
  CHECK(rat_pow(Rat(2), -3) == Rat(1, 8));
  CHECK(rat_pow(Rat(3, 2), 2) == Rat(9, 4));
  CHECK(rat_pow(Rat(7), 0) == Rat(1));
  CHECK(rat_pow(Rat(-1), 5) == Rat(-1));
  CHECK(rat_pow(Rat(-2, 3), -2) == Rat(9, 4));
}

TEST_CASE("group validation") {
  CHECK_THROWS_AS(validate_group(GradingGroup{-1, {}}), InputError);
  CHECK_THROWS_AS(validate_group(GradingGroup{0, {1}}), InputError);
  CHECK_THROWS_AS(validate_group(GradingGroup{1, {0}}), InputError);
  CHECK_NOTHROW(validate_group(GradingGroup{2, {2, 4}}));
  CHECK_NOTHROW(validate_group(GradingGroup{0, {}}));
}

TEST_CASE("degree arithmetic and canonicalization") {
  GradingGroup g{1, {2}};
  CHECK(canonical_degree(g, Degree{{5, 7}}) == Degree{{5, 1}});
  CHECK(canonical_degree(g, Degree{{0, -1}}) == Degree{{0, 1}});
  CHECK(add_degrees(g, Degree{{1, 1}}, Degree{{2, 1}}) == Degree{{3, 0}});
  CHECK(negate_degree(g, Degree{{2, 1}}) == Degree{{-2, 1}});
  CHECK(is_zero_degree(zero_degree(g)));
  CHECK(!is_zero_degree(Degree{{0, 1}}));
}

namespace {

// Exhaustive representatives: free coordinates swept over [lo, hi], torsion
// coordinates over their full cyclic range.
std::vector<Degree> degree_samples(const GradingGroup& g, long lo, long hi) {
  std::vector<std::vector<long>> ranges;
  for (int i = 0; i < g.free_rank; ++i) {
    std::vector<long> r;
    for (long v = lo; v <= hi; ++v) r.push_back(v);
    ranges.push_back(std::move(r));
  }
  for (long m : g.torsion_orders) {
    std::vector<long> r;
    for (long v = 0; v < m; ++v) r.push_back(v);
    ranges.push_back(std::move(r));
  }
  std::vector<Degree> out{Degree{std::vector<long>(g.coord_count(), 0)}};
  out.clear();
  std::vector<size_t> idx(ranges.size(), 0);
  while (true) {
    Degree d;
    for (size_t i = 0; i < ranges.size(); ++i) d.c.push_back(ranges[i][idx[i]]);
    out.push_back(std::move(d));
    size_t p = 0;
    for (; p < ranges.size(); ++p) {
      if (++idx[p] < ranges[p].size()) break;
      idx[p] = 0;
    }
    if (p == ranges.size()) break;
  }
  return out;
}

bool bicharacter_laws_hold(const GradingGroup& g, const Mat& q, long lo,
                           long hi) {
  Bicharacter b{q};
  auto ds = degree_samples(g, lo, hi);
  for (const auto& x : ds) {
    if (rho_eval(b, zero_degree(g), x) != Rat(1)) return false;
    Rat dd = rho_eval(b, x, x);
    if (dd != Rat(1) && dd != Rat(-1)) return false;
    for (const auto& y : ds) {
      if (rho_eval(b, x, y) * rho_eval(b, y, x) != Rat(1)) return false;
      for (const auto& z : ds) {
        Degree xy = add_degrees(g, x, y);
        if (rho_eval(b, xy, z) != rho_eval(b, x, z) * rho_eval(b, y, z))
          return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("bicharacter validation") {
  GradingGroup z{1, {}};
  Mat q1(1, 1);
  q1(0, 0) = 1;
  CHECK(validate_bicharacter(z, q1).pass());

  Mat q2(1, 1);
  q2(0, 0) = 2;
  CheckReport bad = validate_bicharacter(z, q2);
  CHECK(!bad.pass());
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->tuple == std::vector<int>{0, 0});

  GradingGroup z2{0, {2}};
  Mat qm(1, 1);
  qm(0, 0) = -1;
  CHECK(validate_bicharacter(z2, qm).pass());
  CheckReport tor = validate_bicharacter(z2, q2);
  CHECK(!tor.pass());
  REQUIRE(tor.witness.has_value());
  CHECK(tor.witness->tuple == std::vector<int>{0, 0});

  Mat qz(1, 1);
  qz(0, 0) = 0;
  CHECK_THROWS_AS(validate_bicharacter(z, qz), InputError);
  CHECK_THROWS_AS(validate_bicharacter(z, Mat::Identity(2, 2)), InputError);

  GradingGroup zz{2, {}};
  Mat qq(2, 2);
  qq(0, 0) = 1;
  qq(0, 1) = 2;
  qq(1, 0) = Rat(1, 2);
  qq(1, 1) = 1;
  CHECK(validate_bicharacter(zz, qq).pass());
  qq(1, 0) = 2;  // breaks q(j,i) = q(i,j)^-1
  CHECK(!validate_bicharacter(zz, qq).pass());
}

TEST_CASE("bicharacter laws on validated generator matrices") {
  GradingGroup z{1, {}};
  Mat q1(1, 1);
  q1(0, 0) = 1;
  CHECK(bicharacter_laws_hold(z, q1, -2, 2));

  GradingGroup zz{2, {}};
  Mat qq(2, 2);
  qq(0, 0) = 1;
  qq(0, 1) = 3;
  qq(1, 0) = Rat(1, 3);
  qq(1, 1) = -1;
  REQUIRE(validate_bicharacter(zz, qq).pass());
  CHECK(bicharacter_laws_hold(zz, qq, -2, 2));

  GradingGroup z2{0, {2}};
  Mat qm(1, 1);
  qm(0, 0) = -1;
  CHECK(bicharacter_laws_hold(z2, qm, 0, 0));

  GradingGroup mix{1, {2}};
  Mat qx(2, 2);
  qx(0, 0) = 1;
  qx(0, 1) = -1;
  qx(1, 0) = -1;
  qx(1, 1) = -1;
  REQUIRE(validate_bicharacter(mix, qx).pass());
  CHECK(bicharacter_laws_hold(mix, qx, -2, 2));
}

TEST_CASE("elimination pivots are deterministic") {
  Mat m(2, 2);
  m(0, 0) = 1;
  m(0, 1) = 2;
  m(1, 0) = 2;
  m(1, 1) = 4;
  CHECK(rank(m) == 1);
  auto k = kernel_basis(m);
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == Rat(-2));
  CHECK(k[0][1] == Rat(1));

  Mat s(1, 2);
  s(0, 0) = 1;
  s(0, 1) = 1;
  Vec b(1);
  b[0] = 2;
  auto sol = solve_affine(s, b);
  REQUIRE(sol.has_value());
  CHECK(sol->particular[0] == Rat(2));
  CHECK(sol->particular[1] == Rat(0));
  REQUIRE(sol->kernel.size() == 1);
  CHECK(sol->kernel[0][0] == Rat(-1));
  CHECK(sol->kernel[0][1] == Rat(1));

  Mat id3 = Mat::Identity(3, 3);
  CHECK(rank(id3) == 3);
  CHECK(kernel_basis(id3).empty());
}

TEST_CASE("elimination properties on pseudo-random systems") {
  fixtures::Lcg rng(20240817);
  for (int trial = 0; trial < 30; ++trial) {
    int r = static_cast<int>(rng.next(1, 5));
    int c = static_cast<int>(rng.next(1, 6));
    Mat m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m(i, j) = rng.rat();

    int rk = rank(m);
    auto kern = kernel_basis(m);
    CHECK(rk + static_cast<int>(kern.size()) == c);
    for (const auto& v : kern) CHECK(is_zero_vec(m * v));

    Vec x0(c);
    for (int j = 0; j < c; ++j) x0[j] = rng.rat();
    Vec b = m * x0;
    auto sol = solve_affine(m, b);
    REQUIRE(sol.has_value());
    CHECK(is_zero_vec(m * sol->particular - b));
    CHECK(sol->kernel.size() == kern.size());

    // appending 0 = 1 makes any system inconsistent
    Mat m2(r + 1, c);
    m2.topRows(r) = m;
    for (int j = 0; j < c; ++j) m2(r, j) = 0;
    Vec b2(r + 1);
    b2.head(r) = b;
    b2[r] = 1;
    CHECK(!solve_affine(m2, b2).has_value());
  }
}
