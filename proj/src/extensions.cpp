#include "rholie/extensions.hpp"

#include "rholie/error.hpp"
#include "rholie/linalg.hpp"

#include <sstream>

namespace rholie {

namespace {

void require_tstar_cochain(const Algebra3& a, const Cochain& w) {
  if (w.level != 1)
    throw InputError("the extension cochain must be a level-1 cochain");
  if (w.value_dim != a.dim())
    throw InputError(
        "the extension cochain must take values in the dual space "
        "(one component per basis vector)");
  if (!is_zero_degree(w.omega_degree))
    throw InputError("the extension cochain must have degree zero");
  std::vector<Degree> dual_degrees;
  dual_degrees.reserve(a.dim());
  for (int m = 0; m < a.dim(); ++m)
    dual_degrees.push_back(negate_degree(a.group, a.degree(m)));
  CheckReport deg = check_cochain_degree(a, dual_degrees, w);
  if (!deg.pass()) {
    std::ostringstream os;
    os << "the extension cochain violates the grading rule";
    if (deg.witness) os << " at " << format_tuple(deg.witness->tuple);
    throw InputError(os.str());
  }
}

std::string witness_location(const CheckReport& r) {
  std::ostringstream os;
  os << r.check;
  if (!r.identity.empty()) os << " (" << r.identity << ")";
  if (r.witness) os << " at " << format_tuple(r.witness->tuple);
  return os.str();
}

void require_shapes(const ExtensionData& e) {
  if (e.A.group.free_rank != e.B.group.free_rank ||
      e.A.group.torsion_orders != e.B.group.torsion_orders ||
      !mat_equal(e.A.rho.q, e.B.rho.q))
    throw InputError(
        "extension requires a shared grading group and rho on A and B");
  if (e.i.rows() != e.B.dim() || e.i.cols() != e.V.dim())
    throw InputError("injection matrix has wrong shape");
  if (e.p.rows() != e.A.dim() || e.p.cols() != e.B.dim())
    throw InputError("projection matrix has wrong shape");
  if (e.phi_V.rows() != e.V.dim() || e.phi_V.cols() != e.V.dim())
    throw InputError("V twist matrix has wrong shape");
  if (static_cast<int>(e.V.degrees.size()) != e.V.dim())
    throw InputError("V names and degrees differ in length");
}

// Solves i.y = v; nullopt when v is outside the image of i.
std::optional<Vec> pull_back(const Mat& i, const Vec& v) {
  auto sol = solve_affine(i, v);
  if (!sol) return std::nullopt;
  return sol->particular;
}

size_t delta_coord(int r, int c, int acols) {
  return static_cast<size_t>(r) * acols + c;
}

// Stacked affine system for sections: p.delta = id_A, delta.phi_A =
// phi_B.delta.  Unknowns are delta entries, lex by (row, col).
std::pair<Mat, Vec> section_system(const ExtensionData& e) {
  const int nb = e.B.dim();
  const int na = e.A.dim();
  const size_t unknowns = static_cast<size_t>(nb) * na;
  const size_t rows =
      static_cast<size_t>(na) * na + static_cast<size_t>(nb) * na;
  Mat sys = Mat::Zero(rows, unknowns);
  Vec rhs = Vec::Zero(rows);
  size_t row = 0;
  for (int r = 0; r < na; ++r)
    for (int c = 0; c < na; ++c) {
      for (int b = 0; b < nb; ++b)
        sys(row, delta_coord(b, c, na)) = e.p(r, b);
      rhs(row) = (r == c) ? 1 : 0;
      ++row;
    }
  for (int r = 0; r < nb; ++r)
    for (int c = 0; c < na; ++c) {
      for (int b = 0; b < na; ++b)
        sys(row, delta_coord(r, b, na)) += e.A.phi(b, c);
      for (int b = 0; b < nb; ++b)
        sys(row, delta_coord(b, c, na)) -= e.B.phi(r, b);
      ++row;
    }
  return {std::move(sys), std::move(rhs)};
}

}  // namespace

Algebra3 tstar_extension(const Algebra3& a, const Cochain& w) {
  require_tstar_cochain(a, w);
  DualRep coad = dual_rep(a, adjoint_rep(a));
  if (!coad.valid()) {
    for (const auto& c : coad.conditions)
      if (!c.pass())
        throw InputError("the coadjoint action is not a representation: " +
                         witness_location(c) + " fails");
  }
  const Representation& mu = coad.rep;
  const int n = a.dim();

  Algebra3 b;
  b.group = a.group;
  b.rho = a.rho;
  b.basis.names = a.basis.names;
  b.basis.degrees = a.basis.degrees;
  for (int m = 0; m < n; ++m) {
    b.basis.names.push_back(a.basis.names[m] + "*");
    b.basis.degrees.push_back(negate_degree(a.group, a.degree(m)));
  }
  b.phi = Mat::Zero(2 * n, 2 * n);
  b.phi.topLeftCorner(n, n) = a.phi;
  b.phi.bottomRightCorner(n, n) = a.phi.transpose();

  b.bracket = TriTensor(2 * n, 2 * n);
  auto dual_part = [&](int x, int y, int z) -> Vec {
    // exactly one of x, y, z is a dual index here
    if (z >= n) {
      return rep_action(a, mu, x, y).col(z - n);
    }
    if (y >= n) {
      int m = y - n;
      Rat f = rho_deg(a,
                      add_degrees(a.group, a.degree(x),
                                  negate_degree(a.group, a.degree(m))),
                      a.degree(z));
      return (f * rep_action(a, mu, z, x).col(m)).eval();
    }
    int m = x - n;
    Rat f = rho_deg(a, negate_degree(a.group, a.degree(m)),
                    add_degrees(a.group, a.degree(y), a.degree(z)));
    return (f * rep_action(a, mu, y, z).col(m)).eval();
  };
  for (int x = 0; x < 2 * n; ++x)
    for (int y = 0; y < 2 * n; ++y)
      for (int z = 0; z < 2 * n; ++z) {
        int duals = (x >= n) + (y >= n) + (z >= n);
        Vec v = Vec::Zero(2 * n);
        if (duals == 0) {
          v.head(n) = a.bracket.entry(x, y, z);
          v.tail(n) = cochain_eval_idx(a, w, std::array<int, 3>{x, y, z});
        } else if (duals == 1) {
          v.tail(n) = dual_part(x, y, z);
        }
        b.bracket.set_entry(x, y, z, std::move(v));
      }
  return b;
}

ExtensionData tstar_extension_data(const Algebra3& a, const Cochain& w) {
  ExtensionData e;
  e.A = a;
  e.B = tstar_extension(a, w);
  const int n = a.dim();
  e.i = Mat::Zero(2 * n, n);
  e.i.bottomRows(n) = Mat::Identity(n, n);
  e.p = Mat::Zero(n, 2 * n);
  e.p.leftCols(n) = Mat::Identity(n, n);
  for (int m = 0; m < n; ++m) {
    e.V.names.push_back(a.basis.names[m] + "*");
    e.V.degrees.push_back(negate_degree(a.group, a.degree(m)));
  }
  e.phi_V = a.phi.transpose();
  return e;
}

CheckReport check_extension(const ExtensionData& e) {
  require_shapes(e);
  const int nb = e.B.dim();
  const int na = e.A.dim();
  const int nv = e.V.dim();
  if (rank(e.i) != nv)
    return fail_report(
        "extension", "injectivity",
        Witness{{}, std::to_string(rank(e.i)), std::to_string(nv),
                "rank of the injection vs dim V"});
  if (rank(e.p) != na)
    return fail_report(
        "extension", "surjectivity",
        Witness{{}, std::to_string(rank(e.p)), std::to_string(na),
                "rank of the projection vs dim A"});
  Mat pi = (e.p * e.i).eval();
  for (int r = 0; r < na; ++r)
    for (int c = 0; c < nv; ++c)
      if (!rat_is_zero(pi(r, c)))
        return fail_report("extension", "exactness",
                           Witness{{r, c}, rat_to_string(pi(r, c)), "0",
                                   "p.i must vanish"});
  if (rank(e.i) != nb - rank(e.p))
    return fail_report(
        "extension", "exactness",
        Witness{{}, std::to_string(rank(e.i)),
                std::to_string(nb - rank(e.p)),
                "image of i vs kernel of p (dimension count)"});
  CheckReport morphism = check_morphism(e.p, e.B, e.A);
  if (!morphism.pass()) {
    morphism.check = "extension";
    morphism.detail = "the projection is not an algebra morphism (" +
                      morphism.identity + ")";
    morphism.identity = "projection-morphism";
    return morphism;
  }
  {
    Mat lhs = (e.i * e.phi_V).eval();
    Mat rhs = (e.B.phi * e.i).eval();
    Mat both(nb, lhs.cols() + rhs.cols());
    both.leftCols(lhs.cols()) = lhs;
    both.rightCols(rhs.cols()) = rhs;
    int rl = rank(lhs), rr = rank(rhs), rb = rank(both);
    if (rl != rb || rr != rb)
      return fail_report(
          "extension", "twist-compatibility",
          Witness{{}, std::to_string(rl) + ", " + std::to_string(rr),
                  std::to_string(rb),
                  "column spans of i.phi_V and phi_B.i disagree"});
  }
  for (int c = 0; c < nv; ++c)
    for (int r = 0; r < nb; ++r)
      if (!rat_is_zero(e.i(r, c)) && !(e.B.degree(r) == e.V.degrees[c]))
        return fail_report(
            "extension", "degree-preservation",
            Witness{{r, c}, degree_to_string(e.B.degree(r)),
                    degree_to_string(e.V.degrees[c]),
                    "nonzero injection entry between different degrees"});
  for (int c = 0; c < nb; ++c)
    for (int r = 0; r < na; ++r)
      if (!rat_is_zero(e.p(r, c)) && !(e.A.degree(r) == e.B.degree(c)))
        return fail_report(
            "extension", "degree-preservation",
            Witness{{r, c}, degree_to_string(e.A.degree(r)),
                    degree_to_string(e.B.degree(c)),
                    "nonzero projection entry between different degrees"});
  return pass_report("extension",
                     "injectivity, surjectivity, exactness, "
                     "projection-morphism, twist-compatibility, "
                     "degree-preservation");
}

CheckReport is_abelian(const ExtensionData& e) {
  require_shapes(e);
  const int nb = e.B.dim();
  const int nv = e.V.dim();
  for (int x = 0; x < nb; ++x) {
    Vec ex = Vec::Zero(nb);
    ex(x) = 1;
    for (int u = 0; u < nv; ++u)
      for (int v = 0; v < nv; ++v) {
        Vec br = bracket_eval(e.B.bracket, ex, e.i.col(u), e.i.col(v));
        if (!is_zero_vec(br))
          return fail_report(
              "abelian", "abelian-ideal",
              Witness{{x, u, v}, format_vec(br),
                      format_vec(Vec::Zero(nb)),
                      "[e_x, i(e_u), i(e_v)]_B must vanish"});
      }
  }
  return pass_report("abelian", "abelian-ideal");
}

Section find_section(const ExtensionData& e) {
  require_shapes(e);
  auto [sys, rhs] = section_system(e);
  auto sol = solve_affine(sys, rhs);
  if (!sol) throw InputError("no twist-compatible section exists");
  const int na = e.A.dim();
  Mat delta = Mat::Zero(e.B.dim(), na);
  for (int r = 0; r < e.B.dim(); ++r)
    for (int c = 0; c < na; ++c)
      delta(r, c) = sol->particular(delta_coord(r, c, na));
  return Section{std::move(delta)};
}

std::vector<Mat> section_freedom(const ExtensionData& e) {
  require_shapes(e);
  auto [sys, rhs] = section_system(e);
  (void)rhs;
  const int na = e.A.dim();
  std::vector<Mat> out;
  for (const Vec& k : kernel_basis(sys)) {
    Mat d = Mat::Zero(e.B.dim(), na);
    for (int r = 0; r < e.B.dim(); ++r)
      for (int c = 0; c < na; ++c) d(r, c) = k(delta_coord(r, c, na));
    out.push_back(std::move(d));
  }
  return out;
}

Representation induced_rep(const ExtensionData& e, const Section& s) {
  require_shapes(e);
  if (s.delta.rows() != e.B.dim() || s.delta.cols() != e.A.dim())
    throw InputError("section matrix has wrong shape");
  PairBasis pb = pair_basis(e.A);
  std::vector<std::pair<std::array<int, 2>, Mat>> entries;
  for (auto [f1, f2] : pb.pairs) {
    Mat m = Mat::Zero(e.V.dim(), e.V.dim());
    for (int u = 0; u < e.V.dim(); ++u) {
      Vec br = bracket_eval(e.B.bracket, s.delta.col(f1), s.delta.col(f2),
                            e.i.col(u));
      auto y = pull_back(e.i, br);
      if (!y) {
        std::ostringstream os;
        os << "inconsistent extension: [delta " << e.A.basis.names[f1]
           << ", delta " << e.A.basis.names[f2] << ", i(" << e.V.names[u]
           << ")] lies outside i(V)";
        throw InputError(os.str());
      }
      m.col(u) = *y;
    }
    entries.push_back({{f1, f2}, std::move(m)});
  }
  return make_representation(e.A, e.V, e.phi_V, entries);
}

Cochain induced_cocycle(const ExtensionData& e, const Section& s) {
  require_shapes(e);
  if (s.delta.rows() != e.B.dim() || s.delta.cols() != e.A.dim())
    throw InputError("section matrix has wrong shape");
  std::vector<std::pair<std::vector<int>, Vec>> entries;
  for (const auto& t : canonical_tuples(e.A, 1)) {
    Vec br = bracket_eval(e.B.bracket, s.delta.col(t[0]), s.delta.col(t[1]),
                          s.delta.col(t[2]));
    br -= s.delta * e.A.bracket.entry(t[0], t[1], t[2]);
    auto y = pull_back(e.i, br);
    if (!y) {
      std::ostringstream os;
      os << "inconsistent extension: the section defect at ("
         << e.A.basis.names[t[0]] << ", " << e.A.basis.names[t[1]] << ", "
         << e.A.basis.names[t[2]] << ") lies outside i(V)";
      throw InputError(os.str());
    }
    entries.push_back({t, std::move(*y)});
  }
  return make_cochain(e.A, 1, zero_degree(e.A.group), e.V.dim(), entries);
}

CheckReport check_equivalence(const ExtensionData& e1, const ExtensionData& e2,
                              const Mat& F) {
  require_shapes(e1);
  require_shapes(e2);
  if (e1.A.dim() != e2.A.dim() || e1.V.dim() != e2.V.dim())
    throw InputError("equivalence requires the same A and V on both sides");
  if (F.rows() != e2.B.dim() || F.cols() != e1.B.dim())
    throw InputError("equivalence map has wrong shape");
  CheckReport morphism = check_morphism(F, e1.B, e2.B);
  if (!morphism.pass()) {
    morphism.check = "equivalence";
    morphism.detail =
        "the map is not an algebra morphism (" + morphism.identity + ")";
    morphism.identity = "algebra-morphism";
    return morphism;
  }
  {
    Mat lhs = (F * e1.i).eval();
    for (int r = 0; r < lhs.rows(); ++r)
      for (int c = 0; c < lhs.cols(); ++c)
        if (lhs(r, c) != e2.i(r, c))
          return fail_report(
              "equivalence", "ideal-compatibility",
              Witness{{r, c}, rat_to_string(lhs(r, c)),
                      rat_to_string(e2.i(r, c)), "entry of F.i1 vs i2"});
  }
  {
    Mat lhs = (e2.p * F).eval();
    for (int r = 0; r < lhs.rows(); ++r)
      for (int c = 0; c < lhs.cols(); ++c)
        if (lhs(r, c) != e1.p(r, c))
          return fail_report(
              "equivalence", "projection-compatibility",
              Witness{{r, c}, rat_to_string(lhs(r, c)),
                      rat_to_string(e1.p(r, c)), "entry of p2.F vs p1"});
  }
  return pass_report("equivalence",
                     "algebra-morphism, ideal-compatibility, "
                     "projection-compatibility");
}

CheckReport check_extension_cocycle(const Algebra3& a, const Representation& r,
                                    const Cochain& w, Exec ex) {
  if (w.level != 1)
    throw InputError("the cocycle identity expects a level-1 cochain");
  if (w.value_dim != r.dim())
    throw InputError(
        "cochain value dimension does not match the representation space");
  const int n = a.dim();
  std::vector<Vec> phicol(n);
  for (int i = 0; i < n; ++i) phicol[i] = a.phi.col(i);
  std::vector<std::vector<Mat>> mupp(n, std::vector<Mat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      mupp[i][j] = mu_bilinear(a, r, phicol[i], phicol[j]);
  auto D = [&](int i) -> const Degree& { return a.degree(i); };
  auto D2 = [&](int x, int y) {
    return add_degrees(a.group, a.degree(x), a.degree(y));
  };
  const size_t total = static_cast<size_t>(n) * n * n * n * n;
  auto probe = [&](size_t idx) -> std::optional<Witness> {
    int g3 = static_cast<int>(idx % n);
    idx /= n;
    int g2 = static_cast<int>(idx % n);
    idx /= n;
    int g1 = static_cast<int>(idx % n);
    idx /= n;
    int f2 = static_cast<int>(idx % n);
    int f1 = static_cast<int>(idx / n);
    Degree Df = D2(f1, f2);
    const Vec& brg = a.bracket.entry(g1, g2, g3);
    Vec br1 = a.bracket.entry(f1, f2, g1);
    Vec br2 = a.bracket.entry(f1, f2, g2);
    Vec br3 = a.bracket.entry(f1, f2, g3);
    Vec lhs = cochain_eval_vecs(a, w, {&phicol[f1], &phicol[f2], &brg});
    lhs += mupp[f1][f2] *
           cochain_eval_idx(a, w, std::array<int, 3>{g1, g2, g3});
    Vec rhs = cochain_eval_vecs(a, w, {&br1, &phicol[g2], &phicol[g3]});
    rhs += rho_deg(a, Df, D(g1)) *
           cochain_eval_vecs(a, w, {&phicol[g1], &br2, &phicol[g3]});
    rhs += rho_deg(a, Df, D2(g1, g2)) *
           cochain_eval_vecs(a, w, {&phicol[g1], &phicol[g2], &br3});
    rhs += Rat(rho_deg(a, Df, D(g1)) *
               rho_deg(a, add_degrees(a.group, Df, D(g2)), D(g3)) *
               rho_deg(a, D(g1), D(g3))) *
           (mupp[g3][g1] *
            cochain_eval_idx(a, w, std::array<int, 3>{f1, f2, g2}));
    rhs += rho_deg(a, Df, D2(g1, g2)) *
           (mupp[g1][g2] *
            cochain_eval_idx(a, w, std::array<int, 3>{f1, f2, g3}));
    rhs += rho_deg(a, add_degrees(a.group, Df, D(g1)), D2(g2, g3)) *
           (mupp[g2][g3] *
            cochain_eval_idx(a, w, std::array<int, 3>{f1, f2, g1}));
    if (vec_equal(lhs, rhs)) return std::nullopt;
    return Witness{{f1, f2, g1, g2, g3}, format_vec(lhs), format_vec(rhs),
                   "explicit cocycle identity, left vs right"};
  };
  auto hit = first_hit<Witness>(total, ex.threads, probe);
  CheckReport direct =
      hit ? fail_report("extension-cocycle", "induced-cocycle-identity",
                        std::move(hit->second))
          : pass_report("extension-cocycle", "induced-cocycle-identity");
  if (mat_equal(r.beta, Mat::Identity(r.dim(), r.dim()))) {
    CheckReport via_d1 = is_1_cocycle(a, r, w, ex);
    if (via_d1.pass() != direct.pass())
      return error_report(
          "extension-cocycle", "induced-cocycle-identity",
          "the explicit identity and the coboundary route disagree");
    direct.detail = "cross-checked against the coboundary route";
  }
  return direct;
}

}  // namespace rholie
