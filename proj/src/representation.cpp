#include "rholie/representation.hpp"

#include "rholie/error.hpp"

#include <functional>
#include <sstream>

namespace rholie {

namespace {

void require_shapes(const Algebra3& a, const Representation& r) {
  const int dv = r.space.dim();
  if (r.space.names.size() != r.space.degrees.size())
    throw InputError("space names and degrees differ in length");
  if (r.beta.rows() != dv || r.beta.cols() != dv)
    throw InputError("beta has wrong shape");
  if (r.pb.pairs != pair_basis(a).pairs)
    throw InputError("pair basis does not match the algebra");
  if (static_cast<int>(r.mu.size()) != r.pb.dim())
    throw InputError("mu entry count does not match the pair basis");
  for (const Mat& m : r.mu)
    if (m.rows() != dv || m.cols() != dv)
      throw InputError("mu matrix has wrong shape");
}

struct Tables {
  std::vector<Vec> phicol;
  std::vector<std::vector<Mat>> act;   // act[i][j] = mu(e_i, e_j)
  std::vector<std::vector<Mat>> mupp;  // mupp[i][j] = mu(phi e_i, phi e_j)
};

Tables make_tables(const Algebra3& a, const Representation& r) {
  const int n = a.dim();
  Tables t;
  t.phicol.resize(n);
  for (int i = 0; i < n; ++i) t.phicol[i] = a.phi.col(i);
  t.act.assign(n, std::vector<Mat>(n));
  t.mupp.assign(n, std::vector<Mat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      t.act[i][j] = rep_action(a, r, i, j);
      t.mupp[i][j] = mu_bilinear(a, r, t.phicol[i], t.phicol[j]);
    }
  return t;
}

std::array<int, 4> unpack4(size_t idx, int n) {
  std::array<int, 4> t;
  t[3] = static_cast<int>(idx % n);
  idx /= n;
  t[2] = static_cast<int>(idx % n);
  idx /= n;
  t[1] = static_cast<int>(idx % n);
  t[0] = static_cast<int>(idx / n);
  return t;
}

std::optional<Witness> matrix_witness(const std::array<int, 4>& t,
                                      const Mat& lhs, const Mat& rhs,
                                      const char* note) {
  if (mat_equal(lhs, rhs)) return std::nullopt;
  return Witness{{t[0], t[1], t[2], t[3]}, format_mat(lhs), format_mat(rhs),
                 note};
}

}  // namespace

ModuleAction rep_to_module(const Representation& r) {
  return ModuleAction{r.space, r.beta, r.pb, r.mu};
}

Representation module_to_rep(const ModuleAction& m) {
  return Representation{m.space, m.beta, m.pb, m.mu};
}

Representation make_representation(
    const Algebra3& a, GradedBasis space, Mat beta,
    const std::vector<std::pair<std::array<int, 2>, Mat>>& entries) {
  Representation r;
  if (space.names.size() != space.degrees.size())
    throw InputError("space names and degrees differ in length");
  r.space = std::move(space);
  const int dv = r.space.dim();
  if (beta.rows() != dv || beta.cols() != dv)
    throw InputError("beta has wrong shape");
  r.beta = std::move(beta);
  r.pb = pair_basis(a);
  std::vector<std::optional<Mat>> slots(r.pb.dim());
  for (const auto& [ij, m] : entries) {
    int i = ij[0], j = ij[1];
    if (i < 0 || i >= a.dim() || j < 0 || j >= a.dim())
      throw InputError("mu pair index out of range");
    if (m.rows() != dv || m.cols() != dv)
      throw InputError("mu matrix has wrong shape");
    auto red = reduce_pair(a, r.pb, i, j);
    if (!red) {
      if (!is_zero_mat(m)) {
        std::ostringstream os;
        os << "mu(" << i << ", " << j
           << ") must vanish: the pair is forced to zero by the rho-skew rule";
        throw InputError(os.str());
      }
      continue;
    }
    Mat canon = (m / red->second).eval();
    auto& slot = slots[red->first];
    if (slot) {
      if (!mat_equal(*slot, canon)) {
        std::ostringstream os;
        os << "inconsistent mu entries for the pair (" << i << ", " << j
           << ") after rho-skew reduction";
        throw InputError(os.str());
      }
    } else {
      slot = std::move(canon);
    }
  }
  r.mu.reserve(slots.size());
  for (auto& slot : slots)
    r.mu.push_back(slot ? std::move(*slot) : Mat::Zero(dv, dv));
  return r;
}

Mat rep_action(const Algebra3& a, const Representation& r, int i, int j) {
  auto red = reduce_pair(a, r.pb, i, j);
  if (!red) return Mat::Zero(r.dim(), r.dim());
  return (red->second * r.mu[red->first]).eval();
}

Mat mu_bilinear(const Algebra3& a, const Representation& r, const Vec& x,
                const Vec& y) {
  const int dv = r.dim();
  Mat acc = Mat::Zero(dv, dv);
  for (int i = 0; i < a.dim(); ++i) {
    if (rat_is_zero(x(i))) continue;
    for (int j = 0; j < a.dim(); ++j) {
      if (rat_is_zero(y(j))) continue;
      auto red = reduce_pair(a, r.pb, i, j);
      if (!red) continue;
      acc += Rat(x(i) * y(j) * red->second) * r.mu[red->first];
    }
  }
  return acc;
}

Vec mu_apply(const Algebra3& a, const Representation& r, const Vec& x,
             const Vec& y, const Vec& u) {
  return mu_bilinear(a, r, x, y) * u;
}

Representation adjoint_rep(const Algebra3& a) {
  Representation r;
  r.space = a.basis;
  r.beta = a.phi;
  r.pb = pair_basis(a);
  const int n = a.dim();
  r.mu.reserve(r.pb.pairs.size());
  for (auto [i, j] : r.pb.pairs) {
    Mat m(n, n);
    for (int l = 0; l < n; ++l) m.col(l) = a.bracket.entry(i, j, l);
    r.mu.push_back(std::move(m));
  }
  return r;
}

CheckReport check_representation(const Algebra3& a, const Representation& r,
                                 Exec ex) {
  require_shapes(a, r);
  const int n = a.dim();
  const int dv = r.dim();
  const auto& vdeg = r.space.degrees;

  for (int c = 0; c < dv; ++c)
    for (int row = 0; row < dv; ++row)
      if (!rat_is_zero(r.beta(row, c)) && !(vdeg[row] == vdeg[c]))
        return fail_report("representation", "degree-rule",
                           Witness{{row, c},
                                   degree_to_string(vdeg[row]),
                                   degree_to_string(vdeg[c]),
                                   "beta must preserve degree"});
  for (int p = 0; p < r.pb.dim(); ++p) {
    auto [i, j] = r.pb.pairs[p];
    Degree dij = add_degrees(a.group, a.degree(i), a.degree(j));
    for (int c = 0; c < dv; ++c) {
      Degree want = add_degrees(a.group, vdeg[c], dij);
      for (int row = 0; row < dv; ++row)
        if (!rat_is_zero(r.mu[p](row, c)) && !(vdeg[row] == want))
          return fail_report(
              "representation", "degree-rule",
              Witness{{i, j, row, c},
                      degree_to_string(vdeg[row]),
                      degree_to_string(want),
                      "mu(e_i,e_j) must shift degree by |e_i|+|e_j|"});
    }
  }

  Tables tb = make_tables(a, r);
  auto D = [&](int i) -> const Degree& { return a.degree(i); };
  auto D2 = [&](int i, int j) { return add_degrees(a.group, D(i), D(j)); };
  auto rho2 = [&](const Degree& x, const Degree& y) {
    return rho_eval(a.rho, x, y);
  };
  const auto& E = [&a](int i, int j, int k) -> const Vec& {
    return a.bracket.entry(i, j, k);
  };
  const size_t total = static_cast<size_t>(n) * n * n * n;

  auto cond1 = [&](size_t idx) -> std::optional<Witness> {
    auto [f1, f2, g1, g2] = unpack4(idx, n);
    Mat inner = mu_bilinear(a, r, E(f1, f2, g1), tb.phicol[g2]) +
                rho2(D2(f1, f2), D(g1)) *
                    mu_bilinear(a, r, tb.phicol[g1], E(f1, f2, g2));
    Mat lhs = inner * r.beta;
    Mat rhs = tb.mupp[f1][f2] * tb.act[g1][g2] -
              rho2(D2(f1, f2), D2(g1, g2)) *
                  (tb.mupp[g1][g2] * tb.act[f1][f2]);
    return matrix_witness({f1, f2, g1, g2}, lhs, rhs,
                          "condition 1 on (f1, f2, g1, g2)");
  };
  auto cond2 = [&](size_t idx) -> std::optional<Witness> {
    auto [g1, g2, g3, f] = unpack4(idx, n);
    Mat lhs = mu_bilinear(a, r, E(g1, g2, g3), tb.phicol[f]) * r.beta;
    Mat rhs = tb.mupp[g1][g2] * tb.act[g3][f] +
              rho2(D(g1), D2(g2, g3)) * (tb.mupp[g2][g3] * tb.act[g1][f]) +
              rho2(D2(g1, g2), D(g3)) * (tb.mupp[g3][g1] * tb.act[g2][f]);
    return matrix_witness({g1, g2, g3, f}, lhs, rhs,
                          "condition 2 on (g1, g2, g3, f)");
  };
  auto cond3 = [&](size_t idx) -> std::optional<Witness> {
    auto [g, f1, f2, f3] = unpack4(idx, n);
    Mat lhs = mu_bilinear(a, r, tb.phicol[g], E(f1, f2, f3)) * r.beta;
    Mat rhs =
        rho2(D(g), D2(f1, f2)) * (tb.mupp[f1][f2] * tb.act[g][f3]) +
        Rat(rho2(D(g), D2(f2, f3)) * rho2(D(f1), D2(f2, f3))) *
            (tb.mupp[f2][f3] * tb.act[g][f1]) +
        Rat(rho2(D(g), D2(f1, f3)) * rho2(D2(f1, f2), D(f3))) *
            (tb.mupp[f3][f1] * tb.act[g][f2]);
    return matrix_witness({g, f1, f2, f3}, lhs, rhs,
                          "condition 3 on (g, f1, f2, f3)");
  };
  auto cond4 = [&](size_t idx) -> std::optional<Witness> {
    auto [f1, f2, g1, g2] = unpack4(idx, n);
    Mat lhs = tb.mupp[f1][f2] * tb.act[g1][g2];
    Mat rhs = rho2(D2(f1, f2), D2(g1, g2)) *
                  (tb.mupp[g1][g2] * tb.act[f1][f2]) +
              rho2(D2(f1, f2), D(g1)) *
                  (mu_bilinear(a, r, tb.phicol[g1], E(f1, f2, g2)) * r.beta) +
              mu_bilinear(a, r, E(f1, f2, g1), tb.phicol[g2]) * r.beta;
    return matrix_witness({f1, f2, g1, g2}, lhs, rhs,
                          "condition 4 on (f1, f2, g1, g2)");
  };

  const char* names[4] = {"representation-condition-1",
                          "representation-condition-2",
                          "representation-condition-3",
                          "representation-condition-4"};
  std::function<std::optional<Witness>(size_t)> conds[4] = {cond1, cond2,
                                                            cond3, cond4};
  for (int c = 0; c < 4; ++c) {
    auto hit = first_hit<Witness>(total, ex.threads, conds[c]);
    if (hit)
      return fail_report("representation", names[c], std::move(hit->second));
  }
  return pass_report(
      "representation",
      "degree-rule, representation-conditions 1-4 on all basis tuples");
}

CheckReport check_module(const Algebra3& a, const ModuleAction& m, Exec ex) {
  CheckReport rep = check_representation(a, module_to_rep(m), ex);
  rep.check = "module";
  if (rep.pass())
    rep.detail = "verified through the equivalent representation conditions";
  return rep;
}

DualRep dual_rep(const Algebra3& a, const Representation& r) {
  require_shapes(a, r);
  DualRep out;
  Representation& d = out.rep;
  d.space.names.reserve(r.space.names.size());
  for (const auto& nm : r.space.names) d.space.names.push_back(nm + "*");
  d.space.degrees.reserve(r.space.degrees.size());
  for (const auto& dg : r.space.degrees)
    d.space.degrees.push_back(negate_degree(a.group, dg));
  d.beta = r.beta.transpose();
  d.pb = r.pb;
  const int dv = r.dim();
  d.mu.reserve(r.mu.size());
  for (int p = 0; p < r.pb.dim(); ++p) {
    auto [i, j] = r.pb.pairs[p];
    Degree dij = add_degrees(a.group, a.degree(i), a.degree(j));
    Mat md(dv, dv);
    for (int m = 0; m < dv; ++m) {
      Rat factor =
          -rho_eval(a.rho, dij, negate_degree(a.group, r.space.degrees[m]));
      for (int l = 0; l < dv; ++l) md(l, m) = Rat(factor * r.mu[p](m, l));
    }
    d.mu.push_back(std::move(md));
  }

  // Validity: the four conditions on the original representation deciding
  // whether the dual action is again a representation.
  const int n = a.dim();
  Tables tb = make_tables(a, r);
  auto D = [&](int i) -> const Degree& { return a.degree(i); };
  auto D2 = [&](int i, int j) { return add_degrees(a.group, D(i), D(j)); };
  auto rho2 = [&](const Degree& x, const Degree& y) {
    return rho_eval(a.rho, x, y);
  };
  const auto& E = [&a](int i, int j, int k) -> const Vec& {
    return a.bracket.entry(i, j, k);
  };
  const size_t total = static_cast<size_t>(n) * n * n * n;

  auto dcond1 = [&](size_t idx) -> std::optional<Witness> {
    auto [f1, f2, g1, g2] = unpack4(idx, n);
    Mat inner = mu_bilinear(a, r, E(f1, f2, g1), tb.phicol[g2]) +
                rho2(D2(f1, f2), D(g1)) *
                    mu_bilinear(a, r, tb.phicol[g1], E(f1, f2, g2));
    Mat lhs = r.beta * inner;
    Mat rhs = tb.act[f1][f2] * tb.mupp[g1][g2] -
              rho2(D2(f1, f2), D2(g1, g2)) *
                  (tb.act[g1][g2] * tb.mupp[f1][f2]);
    return matrix_witness({f1, f2, g1, g2}, lhs, rhs,
                          "dual condition 1 on (f1, f2, g1, g2)");
  };
  auto dcond2 = [&](size_t idx) -> std::optional<Witness> {
    auto [g1, g2, g3, f] = unpack4(idx, n);
    Mat lhs = r.beta * mu_bilinear(a, r, E(g1, g2, g3), tb.phicol[f]);
    Mat pos = rho2(D2(g1, g2), D2(g3, f)) * (tb.act[g3][f] * tb.mupp[g1][g2]) +
              rho2(D2(g2, g3), D2(g1, f)) * (tb.act[g1][f] * tb.mupp[g2][g3]) +
              rho2(D2(g3, g1), D2(g2, f)) * (tb.act[g2][f] * tb.mupp[g3][g1]);
    Mat rhs = -pos;
    return matrix_witness({g1, g2, g3, f}, lhs, rhs,
                          "dual condition 2 on (g1, g2, g3, f)");
  };
  auto dcond3 = [&](size_t idx) -> std::optional<Witness> {
    auto [g, f1, f2, f3] = unpack4(idx, n);
    Mat lhs = r.beta * mu_bilinear(a, r, tb.phicol[g], E(f1, f2, f3));
    Mat pos = rho2(D2(f1, f2), D(f3)) * (tb.act[g][f3] * tb.mupp[f1][f2]) +
              tb.act[g][f1] * tb.mupp[f2][f3] +
              Rat(rho2(D2(f1, f2), D(f3)) * rho2(D2(f1, f3), D(f2))) *
                  (tb.act[g][f2] * tb.mupp[f3][f1]);
    Mat rhs = -pos;
    return matrix_witness({g, f1, f2, f3}, lhs, rhs,
                          "dual condition 3 on (g, f1, f2, f3)");
  };
  auto dcond4 = [&](size_t idx) -> std::optional<Witness> {
    auto [f1, f2, g1, g2] = unpack4(idx, n);
    Mat lhs = rho2(D2(f1, f2), D(g1)) *
                  (r.beta * mu_bilinear(a, r, tb.phicol[g1], E(f1, f2, g2))) +
              r.beta * mu_bilinear(a, r, E(f1, f2, g1), tb.phicol[g2]);
    Mat rhs = tb.act[f1][f2] * tb.mupp[g1][g2] -
              rho2(D2(f1, f2), D2(g1, g2)) *
                  (tb.act[g1][g2] * tb.mupp[f1][f2]);
    return matrix_witness({f1, f2, g1, g2}, lhs, rhs,
                          "dual condition 4 on (f1, f2, g1, g2)");
  };

  const char* names[4] = {"dual-condition-1", "dual-condition-2",
                          "dual-condition-3", "dual-condition-4"};
  std::function<std::optional<Witness>(size_t)> conds[4] = {dcond1, dcond2,
                                                            dcond3, dcond4};
  for (int c = 0; c < 4; ++c) {
    auto hit = first_hit<Witness>(total, 1, conds[c]);
    if (hit)
      out.conditions.push_back(
          fail_report("dual-validity", names[c], std::move(hit->second)));
    else
      out.conditions.push_back(pass_report("dual-validity", names[c]));
  }
  return out;
}

Representation coadjoint_rep(const Algebra3& a) {
  return dual_rep(a, adjoint_rep(a)).rep;
}

}  // namespace rholie
