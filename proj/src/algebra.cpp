#include "rholie/algebra.hpp"

#include "rholie/error.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace rholie {

Degree tuple_degree(const Algebra3& a, std::span<const int> idx) {
  Degree d = zero_degree(a.group);
  for (int i : idx) d = add_degrees(a.group, d, a.degree(i));
  return d;
}

std::optional<std::pair<std::vector<int>, Rat>> sort_tuple_skew(
    const Algebra3& a, std::span<const int> idx) {
  std::vector<int> t(idx.begin(), idx.end());
  Rat factor = 1;
  for (size_t pass = 0; pass + 1 < t.size(); ++pass)
    for (size_t p = 0; p + 1 < t.size(); ++p)
      if (t[p] > t[p + 1]) {
        factor *= -rho_deg(a, a.degree(t[p]), a.degree(t[p + 1]));
        std::swap(t[p], t[p + 1]);
      }
  for (size_t p = 0; p + 1 < t.size(); ++p)
    if (t[p] == t[p + 1] &&
        rho_deg(a, a.degree(t[p]), a.degree(t[p])) == 1)
      return std::nullopt;
  return std::make_pair(std::move(t), std::move(factor));
}

TriTensor canonicalize_tritensor(
    const GradingGroup& g, const Bicharacter& rho,
    const std::vector<Degree>& arg_degrees, int value_dim,
    const std::vector<std::pair<std::array<int, 3>, Vec>>& entries) {
  (void)g;
  const int n = static_cast<int>(arg_degrees.size());
  std::vector<std::optional<Vec>> assigned(static_cast<size_t>(n) * n * n);
  auto flat = [n](const std::array<int, 3>& x) {
    return (static_cast<size_t>(x[0]) * n + x[1]) * n + x[2];
  };
  std::deque<std::array<int, 3>> queue;
  auto put = [&](const std::array<int, 3>& x, const Vec& v) {
    auto& slot = assigned[flat(x)];
    if (slot) {
      if (!vec_equal(*slot, v)) {
        std::ostringstream os;
        os << "inconsistent bracket: entry (" << x[0] << ", " << x[1] << ", "
           << x[2] << ") expands to both " << format_vec(*slot) << " and "
           << format_vec(v);
        throw InputError(os.str());
      }
      return;
    }
    slot = v;
    queue.push_back(x);
  };
  for (const auto& [tri, v] : entries) {
    for (int c : tri)
      if (c < 0 || c >= n) throw InputError("bracket index out of range");
    if (v.size() != value_dim)
      throw InputError("bracket value has wrong dimension");
    put(tri, v);
  }
  // Close each provided entry under adjacent transpositions.  Overlapping
  // orbits (or a repeated index forcing zero) surface as a put() conflict.
  while (!queue.empty()) {
    std::array<int, 3> x = queue.front();
    queue.pop_front();
    Vec v = *assigned[flat(x)];
    for (int p = 0; p < 2; ++p) {
      std::array<int, 3> y = x;
      std::swap(y[p], y[p + 1]);
      Rat f = -rho_eval(rho, arg_degrees[y[p]], arg_degrees[y[p + 1]]);
      put(y, (f * v).eval());
    }
  }
  TriTensor t(n, value_dim);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        auto& slot = assigned[flat({i, j, k})];
        if (slot) t.set_entry(i, j, k, std::move(*slot));
      }
  return t;
}

Vec bracket_eval(const TriTensor& t, const Vec& x, const Vec& y,
                 const Vec& z) {
  Vec acc = Vec::Zero(t.value_dim());
  for (int i = 0; i < t.arg_dim(); ++i) {
    if (rat_is_zero(x(i))) continue;
    for (int j = 0; j < t.arg_dim(); ++j) {
      if (rat_is_zero(y(j))) continue;
      Rat xy = x(i) * y(j);
      for (int k = 0; k < t.arg_dim(); ++k) {
        if (rat_is_zero(z(k)) || !t.nonzero(i, j, k)) continue;
        acc += (xy * z(k)) * t.entry(i, j, k);
      }
    }
  }
  return acc;
}

CheckReport check_grading(const Algebra3& a) {
  const int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (!a.bracket.nonzero(i, j, k)) continue;
        Degree want = add_degrees(
            a.group, add_degrees(a.group, a.degree(i), a.degree(j)),
            a.degree(k));
        const Vec& v = a.bracket.entry(i, j, k);
        for (int l = 0; l < n; ++l)
          if (!rat_is_zero(v(l)) && !(a.degree(l) == want))
            return fail_report(
                "grading", "bracket-degree",
                Witness{{i, j, k, l},
                        degree_to_string(a.degree(l)),
                        degree_to_string(want),
                        "degree of a nonzero component vs sum of argument "
                        "degrees"});
      }
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r)
      if (!rat_is_zero(a.phi(r, c)) && !(a.degree(r) == a.degree(c)))
        return fail_report(
            "grading", "twist-degree",
            Witness{{r, c},
                    degree_to_string(a.degree(r)),
                    degree_to_string(a.degree(c)),
                    "phi must preserve degree; entry (row, col) is nonzero"});
  return pass_report("grading", "bracket-degree, twist-degree");
}

CheckReport check_skew_symmetry(const Algebra3& a) {
  const int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int p = 0; p < 2; ++p) {
          std::array<int, 3> t{i, j, k};
          std::array<int, 3> s = t;
          std::swap(s[p], s[p + 1]);
          Rat f = -rho_deg(a, a.degree(s[p]), a.degree(s[p + 1]));
          Vec want = (f * a.bracket.entry(t[0], t[1], t[2])).eval();
          const Vec& got = a.bracket.entry(s[0], s[1], s[2]);
          if (!vec_equal(got, want))
            return fail_report(
                "skew-symmetry", "rho-antisymmetry",
                Witness{{i, j, k}, format_vec(got), format_vec(want),
                        p == 0 ? "swap of arguments 1,2" : "swap of arguments 2,3"});
        }
  return pass_report("skew-symmetry", "rho-antisymmetry");
}

CheckReport check_fundamental_identity(const Algebra3& a, Exec ex) {
  const int n = a.dim();
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
    Degree df = add_degrees(a.group, a.degree(f1), a.degree(f2));
    Vec lhs = bracket_eval(a.bracket, a.phi.col(f1), a.phi.col(f2),
                           a.bracket.entry(g1, g2, g3));
    Vec rhs = bracket_eval(a.bracket, a.bracket.entry(f1, f2, g1),
                           a.phi.col(g2), a.phi.col(g3));
    rhs += rho_deg(a, df, a.degree(g1)) *
           bracket_eval(a.bracket, a.phi.col(g1),
                        a.bracket.entry(f1, f2, g2), a.phi.col(g3));
    rhs += rho_deg(a, df, add_degrees(a.group, a.degree(g1), a.degree(g2))) *
           bracket_eval(a.bracket, a.phi.col(g1), a.phi.col(g2),
                        a.bracket.entry(f1, f2, g3));
    if (vec_equal(lhs, rhs)) return std::nullopt;
    return Witness{{f1, f2, g1, g2, g3}, format_vec(lhs), format_vec(rhs),
                   "left side vs sum of the three right-side terms"};
  };
  auto hit = first_hit<Witness>(total, ex.threads, probe);
  if (hit)
    return fail_report("fundamental-identity", "rho-fundamental-identity",
                       std::move(hit->second));
  return pass_report("fundamental-identity", "rho-fundamental-identity");
}

CheckReport check_multiplicative(const Algebra3& a) {
  const int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec lhs = a.phi * a.bracket.entry(i, j, k);
        Vec rhs = bracket_eval(a.bracket, a.phi.col(i), a.phi.col(j),
                               a.phi.col(k));
        if (!vec_equal(lhs, rhs))
          return fail_report(
              "multiplicativity", "phi-bracket-compatibility",
              Witness{{i, j, k}, format_vec(lhs), format_vec(rhs),
                      "phi[x,y,z] vs [phi x, phi y, phi z]"});
      }
  return pass_report("multiplicativity", "phi-bracket-compatibility");
}

CheckReport check_morphism(const Mat& alpha, const Algebra3& a,
                           const Algebra3& b) {
  if (a.group.free_rank != b.group.free_rank ||
      a.group.torsion_orders != b.group.torsion_orders ||
      !mat_equal(a.rho.q, b.rho.q))
    throw InputError("morphism check requires a shared grading group and rho");
  if (alpha.rows() != b.dim() || alpha.cols() != a.dim())
    throw InputError("morphism matrix has wrong shape");
  for (int c = 0; c < a.dim(); ++c)
    for (int r = 0; r < b.dim(); ++r)
      if (!rat_is_zero(alpha(r, c)) && !(b.degree(r) == a.degree(c)))
        return fail_report(
            "morphism", "degree-preservation",
            Witness{{r, c}, degree_to_string(b.degree(r)),
                    degree_to_string(a.degree(c)),
                    "nonzero matrix entry between different degrees"});
  {
    Mat lhs = alpha * a.phi;
    Mat rhs = b.phi * alpha;
    if (!mat_equal(lhs, rhs))
      for (int c = 0; c < a.dim(); ++c)
        for (int r = 0; r < b.dim(); ++r)
          if (lhs(r, c) != rhs(r, c))
            return fail_report(
                "morphism", "twist-intertwining",
                Witness{{r, c}, rat_to_string(lhs(r, c)),
                        rat_to_string(rhs(r, c)),
                        "entry of alpha.phi vs phi'.alpha"});
  }
  const int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec lhs = alpha * a.bracket.entry(i, j, k);
        Vec rhs = bracket_eval(b.bracket, alpha.col(i), alpha.col(j),
                               alpha.col(k));
        if (!vec_equal(lhs, rhs))
          return fail_report(
              "morphism", "bracket-preservation",
              Witness{{i, j, k}, format_vec(lhs), format_vec(rhs),
                      "alpha[x,y,z] vs [alpha x, alpha y, alpha z]"});
      }
  return pass_report(
      "morphism", "degree-preservation, twist-intertwining, "
                  "bracket-preservation");
}

PairBasis pair_basis(const Algebra3& a) {
  PairBasis pb;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i; j < a.dim(); ++j) {
      if (i == j && rho_deg(a, a.degree(i), a.degree(i)) == 1) continue;
      pb.index[{i, j}] = pb.dim();
      pb.pairs.emplace_back(i, j);
    }
  return pb;
}

std::optional<std::pair<int, Rat>> reduce_pair(const Algebra3& a,
                                               const PairBasis& pb, int i,
                                               int j) {
  if (i > j) {
    auto it = pb.index.find({j, i});
    if (it == pb.index.end()) return std::nullopt;
    return std::make_pair(it->second,
                          Rat(-rho_deg(a, a.degree(i), a.degree(j))));
  }
  auto it = pb.index.find({i, j});
  if (it == pb.index.end()) return std::nullopt;  // forced-zero diagonal
  return std::make_pair(it->second, Rat(1));
}

Vec wedge_coords(const Algebra3& a, const PairBasis& pb, const Vec& x,
                 const Vec& y) {
  Vec out = Vec::Zero(pb.dim());
  for (int i = 0; i < a.dim(); ++i) {
    if (rat_is_zero(x(i))) continue;
    for (int j = 0; j < a.dim(); ++j) {
      if (rat_is_zero(y(j))) continue;
      auto red = reduce_pair(a, pb, i, j);
      if (!red) continue;
      out(red->first) += red->second * x(i) * y(j);
    }
  }
  return out;
}

PairAlgebra fundamental_algebra(const Algebra3& a) {
  PairAlgebra L;
  L.group = a.group;
  L.rho = a.rho;
  L.pb = pair_basis(a);
  const int m = L.pb.dim();
  L.degrees.reserve(m);
  for (auto [i, j] : L.pb.pairs)
    L.degrees.push_back(add_degrees(a.group, a.degree(i), a.degree(j)));
  L.phi1 = Mat::Zero(m, m);
  for (int p = 0; p < m; ++p) {
    auto [i, j] = L.pb.pairs[p];
    L.phi1.col(p) = wedge_coords(a, L.pb, a.phi.col(i), a.phi.col(j));
  }
  L.sc.assign(m, std::vector<Vec>(m));
  for (int p = 0; p < m; ++p) {
    auto [f1, f2] = L.pb.pairs[p];
    Degree df = add_degrees(a.group, a.degree(f1), a.degree(f2));
    for (int q = 0; q < m; ++q) {
      auto [g1, g2] = L.pb.pairs[q];
      Vec v = wedge_coords(a, L.pb, a.bracket.entry(f1, f2, g1),
                           a.phi.col(g2));
      v += rho_deg(a, df, a.degree(g1)) *
           wedge_coords(a, L.pb, a.phi.col(g1), a.bracket.entry(f1, f2, g2));
      L.sc[p][q] = std::move(v);
    }
  }
  return L;
}

CheckReport check_hom_rho_lie2(const PairAlgebra& L, Exec ex) {
  const int m = L.pb.dim();
  const Bicharacter& rho = L.rho;
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q) {
      Degree want = add_degrees(L.group, L.degrees[p], L.degrees[q]);
      const Vec& v = L.sc[p][q];
      for (int r = 0; r < m; ++r)
        if (!rat_is_zero(v(r)) && !(L.degrees[r] == want))
          return fail_report(
              "pair-algebra", "grading",
              Witness{{p, q, r}, degree_to_string(L.degrees[r]),
                      degree_to_string(want),
                      "pair-basis bracket component outside the expected "
                      "degree"});
    }
  for (int p = 0; p < m; ++p)
    for (int c = 0; c < m; ++c)
      if (!rat_is_zero(L.phi1(p, c)) && !(L.degrees[p] == L.degrees[c]))
        return fail_report(
            "pair-algebra", "twist-degree",
            Witness{{p, c}, degree_to_string(L.degrees[p]),
                    degree_to_string(L.degrees[c]),
                    "phi1 must preserve degree"});
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q) {
      Vec want =
          (Rat(-rho_eval(rho, L.degrees[p], L.degrees[q])) * L.sc[q][p])
              .eval();
      if (!vec_equal(L.sc[p][q], want))
        return fail_report(
            "pair-algebra", "rho-antisymmetry",
            Witness{{p, q}, format_vec(L.sc[p][q]), format_vec(want),
                    "[p,q] vs -rho(|p|,|q|)[q,p]"});
    }
  auto brk = [&](const Vec& u, const Vec& v) {
    Vec acc = Vec::Zero(m);
    for (int p = 0; p < m; ++p) {
      if (rat_is_zero(u(p))) continue;
      for (int q = 0; q < m; ++q) {
        if (rat_is_zero(v(q))) continue;
        acc += (u(p) * v(q)) * L.sc[p][q];
      }
    }
    return acc;
  };
  const size_t total = static_cast<size_t>(m) * m * m;
  auto probe = [&](size_t idx) -> std::optional<Witness> {
    int h = static_cast<int>(idx % m);
    idx /= m;
    int g = static_cast<int>(idx % m);
    int f = static_cast<int>(idx / m);
    Vec sum = (rho_eval(rho, L.degrees[h], L.degrees[f]) *
               brk(L.phi1.col(f), L.sc[g][h]))
                  .eval();
    sum += rho_eval(rho, L.degrees[g], L.degrees[h]) *
           brk(L.phi1.col(h), L.sc[f][g]);
    sum += rho_eval(rho, L.degrees[f], L.degrees[g]) *
           brk(L.phi1.col(g), L.sc[h][f]);
    if (is_zero_vec(sum)) return std::nullopt;
    return Witness{{f, g, h}, format_vec(sum), format_vec(Vec::Zero(m)),
                   "rho-twisted Jacobi sum over the cyclic terms"};
  };
  auto hit = first_hit<Witness>(total, ex.threads, probe);
  if (hit)
    return fail_report("pair-algebra", "rho-jacobi", std::move(hit->second));
  return pass_report("pair-algebra",
                     "grading, twist-degree, rho-antisymmetry, rho-jacobi");
}

}  // namespace rholie
