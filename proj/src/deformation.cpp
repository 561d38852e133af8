#include "rholie/deformation.hpp"

#include "rholie/error.hpp"
#include "rholie/linalg.hpp"
#include "rholie/representation.hpp"

#include <sstream>

namespace rholie {

namespace {

void require_deformation_cochain(const Algebra3& a, const Cochain& w) {
  if (w.level != 1)
    throw InputError("a deformation cochain must be a level-1 cochain");
  if (w.value_dim != a.dim())
    throw InputError("a deformation cochain must take values in the algebra");
  if (!is_zero_degree(w.omega_degree))
    throw InputError(
        "a deformation cochain must have degree zero (grade-preserving)");
  CheckReport deg = check_cochain_degree(a, a.basis.degrees, w);
  if (!deg.pass()) {
    std::ostringstream os;
    os << "the deformation cochain violates the grading rule";
    if (deg.witness) os << " at " << format_tuple(deg.witness->tuple);
    throw InputError(os.str());
  }
  for (const auto& [t, v] : w.values) {
    (void)v;
    auto red = reduce_cochain_tuple(a, 1, t);
    if (!red || red->first != t || red->second != Rat(1))
      throw InputError(
          "deformation cochain entries must sit on canonical skew-reduced "
          "tuples");
  }
}

void require_degree_zero_operator(const Algebra3& a, const GradedOperator& n) {
  if (n.matrix.rows() != a.dim() || n.matrix.cols() != a.dim())
    throw InputError("operator matrix has wrong shape");
  if (!is_zero_degree(canonical_degree(a.group, n.x_degree)))
    throw InputError("Nijenhuis operators must have degree zero");
}

std::optional<Witness> grade_defect(const Algebra3& a, const Mat& m) {
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c)
      if (!rat_is_zero(m(r, c)) && !(a.degree(r) == a.degree(c)))
        return Witness{{r, c}, degree_to_string(a.degree(r)),
                       degree_to_string(a.degree(c)),
                       "nonzero entry between different degrees"};
  return std::nullopt;
}

Vec one_n_sum(const Algebra3& a, const Mat& n, int i, int j, int k) {
  Vec ei = Vec::Zero(a.dim()), ej = Vec::Zero(a.dim()),
      ek = Vec::Zero(a.dim());
  ei(i) = 1;
  ej(j) = 1;
  ek(k) = 1;
  Vec v = bracket_eval(a.bracket, n.col(i), ej, ek);
  v += bracket_eval(a.bracket, ei, n.col(j), ek);
  v += bracket_eval(a.bracket, ei, ej, n.col(k));
  return v;
}

Vec two_n_sum(const Algebra3& a, const Mat& n, int i, int j, int k) {
  Vec ei = Vec::Zero(a.dim()), ej = Vec::Zero(a.dim()),
      ek = Vec::Zero(a.dim());
  ei(i) = 1;
  ej(j) = 1;
  ek(k) = 1;
  Vec v = bracket_eval(a.bracket, n.col(i), n.col(j), ek);
  v += bracket_eval(a.bracket, n.col(i), ej, n.col(k));
  v += bracket_eval(a.bracket, ei, n.col(j), n.col(k));
  return v;
}

}  // namespace

DeformationReport check_infinitesimal_deformation(const Algebra3& a,
                                                  const Cochain& w, Exec ex) {
  require_deformation_cochain(a, w);
  if (rank(a.phi) != a.dim())
    throw InputError("the deformation expansion requires an invertible twist");
  const int n = a.dim();
  std::vector<Vec> phicol(n);
  for (int i = 0; i < n; ++i) phicol[i] = a.phi.col(i);

  // Coefficients of [phi f1, phi f2, [g1,g2,g3]_t]_t minus the three
  // right-side terms, at a fixed t power: 1 collects the mixed bracket/omega
  // terms, 2 the omega-of-omega terms.
  auto defect = [&](int power, int f1, int f2, int g1, int g2,
                    int g3) -> Vec {
    Degree df = add_degrees(a.group, a.degree(f1), a.degree(f2));
    Rat c1 = rho_deg(a, df, a.degree(g1));
    Rat c2 = rho_deg(a, df,
                     add_degrees(a.group, a.degree(g1), a.degree(g2)));
    const Vec& tg = a.bracket.entry(g1, g2, g3);
    Vec wg = cochain_eval_idx(a, w, std::array<int, 3>{g1, g2, g3});
    const Vec& t1 = a.bracket.entry(f1, f2, g1);
    const Vec& t2 = a.bracket.entry(f1, f2, g2);
    const Vec& t3 = a.bracket.entry(f1, f2, g3);
    Vec w1 = cochain_eval_idx(a, w, std::array<int, 3>{f1, f2, g1});
    Vec w2 = cochain_eval_idx(a, w, std::array<int, 3>{f1, f2, g2});
    Vec w3 = cochain_eval_idx(a, w, std::array<int, 3>{f1, f2, g3});
    if (power == 1) {
      Vec v = bracket_eval(a.bracket, phicol[f1], phicol[f2], wg);
      v += cochain_eval_vecs(a, w, {&phicol[f1], &phicol[f2], &tg});
      v -= bracket_eval(a.bracket, w1, phicol[g2], phicol[g3]);
      v -= cochain_eval_vecs(a, w, {&t1, &phicol[g2], &phicol[g3]});
      v -= c1 * bracket_eval(a.bracket, phicol[g1], w2, phicol[g3]);
      v -= c1 * cochain_eval_vecs(a, w, {&phicol[g1], &t2, &phicol[g3]});
      v -= c2 * bracket_eval(a.bracket, phicol[g1], phicol[g2], w3);
      v -= c2 * cochain_eval_vecs(a, w, {&phicol[g1], &phicol[g2], &t3});
      return v;
    }
    Vec v = cochain_eval_vecs(a, w, {&phicol[f1], &phicol[f2], &wg});
    v -= cochain_eval_vecs(a, w, {&w1, &phicol[g2], &phicol[g3]});
    v -= c1 * cochain_eval_vecs(a, w, {&phicol[g1], &w2, &phicol[g3]});
    v -= c2 * cochain_eval_vecs(a, w, {&phicol[g1], &phicol[g2], &w3});
    return v;
  };

  const size_t total = static_cast<size_t>(n) * n * n * n * n;
  auto scan = [&](int power) -> std::optional<Witness> {
    auto probe = [&](size_t idx) -> std::optional<Witness> {
      int g3 = static_cast<int>(idx % n);
      idx /= n;
      int g2 = static_cast<int>(idx % n);
      idx /= n;
      int g1 = static_cast<int>(idx % n);
      idx /= n;
      int f2 = static_cast<int>(idx % n);
      int f1 = static_cast<int>(idx / n);
      Vec v = defect(power, f1, f2, g1, g2, g3);
      if (is_zero_vec(v)) return std::nullopt;
      std::ostringstream note;
      note << "t^" << power << " coefficient of the fundamental identity";
      return Witness{{f1, f2, g1, g2, g3}, format_vec(v),
                     format_vec(Vec::Zero(n)), note.str()};
    };
    auto hit = first_hit<Witness>(total, ex.threads, probe);
    if (hit) return hit->second;
    return std::nullopt;
  };

  DeformationReport out;
  auto w1 = scan(1);
  out.w_is_cocycle = !w1;
  out.cocycle = w1 ? fail_report("deformation-cocycle", "t1-vanishing",
                                 std::move(*w1))
                   : pass_report("deformation-cocycle", "t1-vanishing");
  auto w2 = scan(2);
  out.w_is_structure = !w2;
  out.structure = w2 ? fail_report("deformation-structure", "t2-vanishing",
                                   std::move(*w2))
                     : pass_report("deformation-structure", "t2-vanishing");
  out.is_deformation = out.w_is_cocycle && out.w_is_structure;

  Algebra3 aw = a;
  aw.bracket = cochain_to_tritensor(a, w);
  bool fi_route = check_fundamental_identity(aw, ex).pass();
  bool cocycle_route = is_1_cocycle(a, adjoint_rep(a), w, ex).pass();
  if (fi_route != out.w_is_structure || cocycle_route != out.w_is_cocycle) {
    std::ostringstream os;
    os << "t-expansion flags disagree with the independent routes:";
    if (fi_route != out.w_is_structure)
      os << " fundamental identity of the cochain says "
         << (fi_route ? "pass" : "fail");
    if (cocycle_route != out.w_is_cocycle)
      os << " the adjoint coboundary says "
         << (cocycle_route ? "pass" : "fail");
    out.consistency =
        error_report("deformation-consistency", "route-agreement", os.str());
  } else {
    out.consistency = pass_report(
        "deformation-consistency", "route-agreement",
        "t-expansion flags match the independent fundamental-identity and "
        "coboundary routes");
  }
  return out;
}

CheckReport is_nijenhuis(const Algebra3& a, const GradedOperator& nop) {
  require_degree_zero_operator(a, nop);
  if (auto w = grade_defect(a, nop.matrix))
    return fail_report("nijenhuis", "operator-degree", std::move(*w));
  const Mat& m = nop.matrix;
  const int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec lhs = m * (m * a.bracket.entry(i, j, k));
        Vec rhs = m * one_n_sum(a, m, i, j, k);
        rhs -= two_n_sum(a, m, i, j, k);
        if (!vec_equal(lhs, rhs))
          return fail_report(
              "nijenhuis", "nijenhuis-identity",
              Witness{{i, j, k}, format_vec(lhs), format_vec(rhs),
                      "N^2[x,y,z] vs N(one-N brackets) - two-N brackets"});
      }
  return pass_report("nijenhuis", "nijenhuis-identity");
}

Cochain nijenhuis_bracket(const Algebra3& a, const GradedOperator& nop) {
  require_degree_zero_operator(a, nop);
  std::vector<std::pair<std::vector<int>, Vec>> entries;
  for (const auto& t : canonical_tuples(a, 1)) {
    Vec v = one_n_sum(a, nop.matrix, t[0], t[1], t[2]);
    v -= nop.matrix * a.bracket.entry(t[0], t[1], t[2]);
    entries.push_back({t, std::move(v)});
  }
  return make_cochain(a, 1, zero_degree(a.group), a.dim(), entries);
}

CheckReport check_trivial_deformation(const Algebra3& a,
                                      const GradedOperator& nop) {
  CheckReport nij = is_nijenhuis(a, nop);
  if (!nij.pass()) {
    std::ostringstream os;
    os << "the operator is not Hom-Nijenhuis";
    if (nij.witness)
      os << ": " << nij.identity << " fails at "
         << format_tuple(nij.witness->tuple);
    throw InputError(os.str());
  }
  const Mat& m = nop.matrix;
  const int n = a.dim();
  Cochain w = nijenhuis_bracket(a, nop);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec wv = cochain_eval_idx(a, w, std::array<int, 3>{i, j, k});
        const Vec& tv = a.bracket.entry(i, j, k);
        Vec left[4] = {tv, (wv + m * tv).eval(), m * wv, Vec::Zero(n)};
        Vec right[4] = {tv, one_n_sum(a, m, i, j, k),
                        two_n_sum(a, m, i, j, k),
                        bracket_eval(a.bracket, m.col(i), m.col(j), m.col(k))};
        for (int s = 0; s < 4; ++s)
          if (!vec_equal(left[s], right[s])) {
            std::ostringstream note;
            note << "t^" << s
                 << " coefficient of T_t[x,y,z]_t vs [T_t x, T_t y, T_t z]";
            return fail_report("trivial-deformation", "t-polynomial-identity",
                               Witness{{i, j, k}, format_vec(left[s]),
                                       format_vec(right[s]), note.str()});
          }
        Vec eq_l = m * wv;
        Vec eq_r = two_n_sum(a, m, i, j, k);
        if (!vec_equal(eq_l, eq_r))
          return fail_report(
              "trivial-deformation", "n-bracket-identity",
              Witness{{i, j, k}, format_vec(eq_l), format_vec(eq_r),
                      "N[x,y,z]_N vs the two-N brackets"});
      }
  return pass_report("trivial-deformation",
                     "t-polynomial-identity, n-bracket-identity",
                     "coefficientwise at t^0..t^3 on all basis triples");
}

Cochain bracket_cochain(const Algebra3& a) {
  std::vector<std::pair<std::vector<int>, Vec>> entries;
  for (const auto& t : canonical_tuples(a, 1))
    entries.push_back({t, a.bracket.entry(t[0], t[1], t[2])});
  return make_cochain(a, 1, zero_degree(a.group), a.dim(), entries);
}

TriTensor cochain_to_tritensor(const Algebra3& a, const Cochain& w) {
  if (w.level != 1)
    throw InputError("only level-1 cochains convert to bracket tensors");
  TriTensor t(a.dim(), w.value_dim);
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      for (int k = 0; k < a.dim(); ++k)
        t.set_entry(i, j, k,
                    cochain_eval_idx(a, w, std::array<int, 3>{i, j, k}));
  return t;
}

std::vector<GradedOperator> nijenhuis_candidates(const Algebra3& a) {
  const int n = a.dim();
  Degree zero = zero_degree(a.group);
  std::vector<GradedOperator> out;
  auto consider = [&](Mat m) {
    if (grade_defect(a, m)) return;
    for (const auto& g : out)
      if (mat_equal(g.matrix, m)) return;
    GradedOperator cand{std::move(m), zero};
    if (is_nijenhuis(a, cand).pass()) out.push_back(std::move(cand));
  };
  consider(Mat::Zero(n, n));

  std::vector<Rat> grid;
  if (n <= 4)
    grid = {Rat(-2), Rat(-1), Rat(-1, 2), Rat(0), Rat(1, 2), Rat(1), Rat(2)};
  else if (n <= 8)
    grid = {Rat(-1), Rat(0), Rat(1)};
  if (!grid.empty()) {
    std::vector<size_t> pick(n, 0);
    while (true) {
      Mat m = Mat::Zero(n, n);
      for (int i = 0; i < n; ++i) m(i, i) = grid[pick[i]];
      consider(std::move(m));
      int pos = 0;
      while (pos < n && ++pick[pos] == grid.size()) pick[pos++] = 0;
      if (pos == n) break;
    }
  }

  const Rat scales[] = {Rat(1), Rat(-1), Rat(2), Rat(1, 2)};
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      if (r == c || !(a.degree(r) == a.degree(c))) continue;
      for (const Rat& s : scales) {
        Mat e = Mat::Zero(n, n);
        e(r, c) = s;
        consider(e);
        e(c, r) = s;
        consider(e);
        e(c, r) = -s;
        consider(e);
      }
    }
  return out;
}

}  // namespace rholie
