#include "rholie/cohomology.hpp"

#include "rholie/error.hpp"
#include "rholie/linalg.hpp"

#include <functional>
#include <sstream>

namespace rholie {

namespace {

struct RTab {
  std::vector<Vec> phicol;             // columns of phi
  std::vector<std::vector<Mat>> act;   // mu(e_i, e_j)
  std::vector<std::vector<Mat>> mupp;  // mu(phi e_i, phi e_j)
};

RTab rtab(const Algebra3& a, const Representation& r) {
  const int n = a.dim();
  RTab t;
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

Vec d0_value(const Algebra3& a, const Representation& r, const RTab& t,
             const Cochain& nu, int i, int j, int k) {
  auto rho2 = [&](const Degree& x, const Degree& y) {
    return rho_eval(a.rho, x, y);
  };
  auto D2 = [&](int x, int y) {
    return add_degrees(a.group, a.degree(x), a.degree(y));
  };
  Vec nk = cochain_eval_idx(a, nu, std::array<int, 1>{k});
  Vec nj = cochain_eval_idx(a, nu, std::array<int, 1>{j});
  Vec ni = cochain_eval_idx(a, nu, std::array<int, 1>{i});
  const Vec& br = a.bracket.entry(i, j, k);
  Vec v = t.act[i][j] * nk;
  v += rho2(D2(i, j), a.degree(k)) * (t.act[k][i] * nj);
  v += rho2(a.degree(i), D2(j, k)) * (t.act[j][k] * ni);
  v -= cochain_eval_vecs(a, nu, {&br});
  return v;
}

Vec d1_value(const Algebra3& a, const Representation& r, const RTab& t,
             const Cochain& w, int f1, int f2, int g1, int g2, int g3) {
  auto rho2 = [&](const Degree& x, const Degree& y) {
    return rho_eval(a.rho, x, y);
  };
  auto D = [&](int i) -> const Degree& { return a.degree(i); };
  auto D2 = [&](int x, int y) {
    return add_degrees(a.group, a.degree(x), a.degree(y));
  };
  Degree Df = D2(f1, f2);
  const Vec& brg = a.bracket.entry(g1, g2, g3);
  Vec br1 = a.bracket.entry(f1, f2, g1);
  Vec br2 = a.bracket.entry(f1, f2, g2);
  Vec br3 = a.bracket.entry(f1, f2, g3);
  Vec w_g = cochain_eval_idx(a, w, std::array<int, 3>{g1, g2, g3});
  Vec w_fg1 = cochain_eval_idx(a, w, std::array<int, 3>{f1, f2, g1});
  Vec w_fg2 = cochain_eval_idx(a, w, std::array<int, 3>{f1, f2, g2});
  Vec w_fg3 = cochain_eval_idx(a, w, std::array<int, 3>{f1, f2, g3});

  Vec v = cochain_eval_vecs(a, w, {&t.phicol[f1], &t.phicol[f2], &brg});
  v += t.mupp[f1][f2] * w_g;
  v -= cochain_eval_vecs(a, w, {&br1, &t.phicol[g2], &t.phicol[g3]});
  v -= rho2(Df, D(g1)) *
       cochain_eval_vecs(a, w, {&t.phicol[g1], &br2, &t.phicol[g3]});
  v -= rho2(Df, D2(g1, g2)) *
       cochain_eval_vecs(a, w, {&t.phicol[g1], &t.phicol[g2], &br3});
  v -= Rat(rho2(Df, D2(g2, g3)) * rho2(D(g1), D2(g2, g3))) *
       (t.mupp[g2][g3] * w_fg1);
  v -= Rat(rho2(Df, D2(g1, g3)) * rho2(D2(g1, g2), D(g3))) *
       (t.mupp[g3][g1] * w_fg2);
  v -= rho2(Df, D2(g1, g2)) * (t.mupp[g1][g2] * w_fg3);
  return v;
}

// General coboundary value on an arbitrary output tuple f (0-based indices,
// length 2n+1 where n = w.level + 1).  Positions below are 1-based to match
// the term bookkeeping.
Vec dgen_value(const Algebra3& a, const Representation& r, const Cochain& w,
               const Mat& phip, const std::vector<Vec>& phipcol,
               const std::vector<Vec>& phicol, std::span<const int> f) {
  (void)phip;
  const int n = w.level + 1;
  const int m = 2 * n + 1;
  auto D = [&](int pos) -> const Degree& { return a.degree(f[pos - 1]); };
  auto addD = [&](const Degree& x, const Degree& y) {
    return add_degrees(a.group, x, y);
  };
  auto rangeD = [&](int from, int to) {
    Degree d = zero_degree(a.group);
    for (int s = from; s <= to; ++s) d = addD(d, D(s));
    return d;
  };
  auto rho2 = [&](const Degree& x, const Degree& y) {
    return rho_eval(a.rho, x, y);
  };
  const Rat sgn_np1 = (n % 2 == 1) ? Rat(1) : Rat(-1);  // (-1)^(n+1)
  Vec acc = Vec::Zero(w.value_dim);

  {  // T1: mu(phi^(n-1) f_{2n+1}, phi^(n-1) f_{2n-1}) w(f_1..f_{2n-2}, f_{2n})
    std::vector<int> args(f.begin(), f.begin() + (2 * n - 2));
    args.push_back(f[2 * n - 1]);
    Rat c = Rat(sgn_np1 *
                rho2(rangeD(1, 2 * n - 2), addD(D(2 * n - 1), D(2 * n + 1))) *
                rho2(addD(D(2 * n - 1), D(2 * n)), D(2 * n + 1)));
    Mat mu = mu_bilinear(a, r, phipcol[f[2 * n]], phipcol[f[2 * n - 2]]);
    acc += c * (mu * cochain_eval_idx(a, w, args));
  }
  {  // T2: mu(phi^(n-1) f_{2n}, phi^(n-1) f_{2n+1}) w(f_1..f_{2n-1})
    std::vector<int> args(f.begin(), f.begin() + (2 * n - 1));
    Rat c = Rat(sgn_np1 *
                rho2(rangeD(1, 2 * n - 2), addD(D(2 * n), D(2 * n + 1))) *
                rho2(D(2 * n - 1), addD(D(2 * n), D(2 * n + 1))));
    Mat mu = mu_bilinear(a, r, phipcol[f[2 * n - 1]], phipcol[f[2 * n]]);
    acc += c * (mu * cochain_eval_idx(a, w, args));
  }
  for (int k = 1; k <= n; ++k) {  // T3: hat-omission mu terms
    std::vector<int> args;
    args.reserve(m - 2);
    for (int p = 1; p <= m; ++p)
      if (p != 2 * k - 1 && p != 2 * k) args.push_back(f[p - 1]);
    Rat c = Rat(((k % 2 == 1) ? Rat(1) : Rat(-1)) *
                rho2(rangeD(1, 2 * k - 2), addD(D(2 * k - 1), D(2 * k))));
    Mat mu = mu_bilinear(a, r, phipcol[f[2 * k - 2]], phipcol[f[2 * k - 1]]);
    acc += c * (mu * cochain_eval_idx(a, w, args));
  }
  for (int k = 1; k <= n; ++k) {  // T4: bracket-insertion terms
    Rat ksgn = (k % 2 == 1) ? Rat(-1) : Rat(1);  // (-1)^k
    for (int j = 2 * k + 1; j <= m; ++j) {
      Rat c = Rat(ksgn * rho2(rangeD(1, 2 * k), rangeD(2 * k + 1, j - 1)));
      Vec br = a.bracket.entry(f[2 * k - 2], f[2 * k - 1], f[j - 1]);
      std::vector<const Vec*> argv;
      argv.reserve(m - 2);
      for (int p = 1; p <= m; ++p) {
        if (p == 2 * k - 1 || p == 2 * k) continue;
        argv.push_back(p == j ? &br : &phicol[f[p - 1]]);
      }
      acc += c * cochain_eval_vecs(a, w, argv);
    }
  }
  return acc;
}

}  // namespace

std::optional<std::pair<std::vector<int>, Rat>> reduce_cochain_tuple(
    const Algebra3& a, int level, std::span<const int> idx) {
  if (level <= 0)
    return std::make_pair(std::vector<int>(idx.begin(), idx.end()), Rat(1));
  if (level == 1) return sort_tuple_skew(a, idx);
  std::vector<int> t(idx.begin(), idx.end());
  Rat factor = 1;
  for (int k = 0; k < level; ++k) {
    int& x = t[2 * k];
    int& y = t[2 * k + 1];
    if (x > y) {
      factor *= -rho_deg(a, a.degree(x), a.degree(y));
      std::swap(x, y);
    }
    if (x == y && rho_deg(a, a.degree(x), a.degree(x)) == 1)
      return std::nullopt;
  }
  return std::make_pair(std::move(t), std::move(factor));
}

std::vector<std::vector<int>> canonical_tuples(const Algebra3& a, int level) {
  const int n = a.dim();
  std::vector<std::vector<int>> out;
  if (level == 0) {
    for (int i = 0; i < n; ++i) out.push_back({i});
    return out;
  }
  if (level == 1) {
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        if (i == j && rho_deg(a, a.degree(i), a.degree(i)) == 1) continue;
        for (int k = j; k < n; ++k) {
          if (j == k && rho_deg(a, a.degree(j), a.degree(j)) == 1) continue;
          out.push_back({i, j, k});
        }
      }
    return out;
  }
  PairBasis pb = pair_basis(*&a);
  std::vector<int> choice(level, 0);
  std::vector<int> tuple(2 * level + 1);
  std::function<void(int)> rec = [&](int block) {
    if (block == level) {
      for (int last = 0; last < n; ++last) {
        tuple[2 * level] = last;
        out.push_back(tuple);
      }
      return;
    }
    for (int p = 0; p < pb.dim(); ++p) {
      tuple[2 * block] = pb.pairs[p].first;
      tuple[2 * block + 1] = pb.pairs[p].second;
      rec(block + 1);
    }
  };
  rec(0);
  return out;
}

Cochain make_cochain(
    const Algebra3& a, int level, Degree omega_degree, int value_dim,
    const std::vector<std::pair<std::vector<int>, Vec>>& entries) {
  Cochain w;
  w.level = level;
  w.omega_degree = canonical_degree(a.group, std::move(omega_degree));
  w.value_dim = value_dim;
  const int arity = w.arity();
  for (const auto& [t, v] : entries) {
    if (static_cast<int>(t.size()) != arity)
      throw InputError("cochain tuple has wrong arity");
    for (int c : t)
      if (c < 0 || c >= a.dim())
        throw InputError("cochain tuple index out of range");
    if (v.size() != value_dim)
      throw InputError("cochain value has wrong dimension");
    auto red = reduce_cochain_tuple(a, level, t);
    if (!red) {
      if (!is_zero_vec(v))
        throw InputError("cochain entry at " + format_tuple(t) +
                         " must vanish: a repeated argument forces zero");
      continue;
    }
    if (is_zero_vec(v)) continue;
    Vec canon = (v / red->second).eval();
    auto it = w.values.find(red->first);
    if (it != w.values.end()) {
      if (!vec_equal(it->second, canon))
        throw InputError("inconsistent cochain entries at " +
                         format_tuple(t) + " after skew reduction");
    } else {
      w.values.emplace(std::move(red->first), std::move(canon));
    }
  }
  return w;
}

Vec cochain_eval_idx(const Algebra3& a, const Cochain& w,
                     std::span<const int> idx) {
  auto red = reduce_cochain_tuple(a, w.level, idx);
  if (!red) return Vec::Zero(w.value_dim);
  auto it = w.values.find(red->first);
  if (it == w.values.end()) return Vec::Zero(w.value_dim);
  return (red->second * it->second).eval();
}

Vec cochain_eval_vecs(const Algebra3& a, const Cochain& w,
                      const std::vector<const Vec*>& args) {
  const int arity = w.arity();
  if (static_cast<int>(args.size()) != arity)
    throw InputError("cochain applied to the wrong number of arguments");
  Vec acc = Vec::Zero(w.value_dim);
  std::vector<int> idx(arity);
  std::function<void(int, const Rat&)> rec = [&](int pos, const Rat& coeff) {
    if (pos == arity) {
      acc += coeff * cochain_eval_idx(a, w, idx);
      return;
    }
    const Vec& v = *args[pos];
    for (int i = 0; i < v.size(); ++i) {
      if (rat_is_zero(v(i))) continue;
      idx[pos] = i;
      rec(pos + 1, Rat(coeff * v(i)));
    }
  };
  rec(0, Rat(1));
  return acc;
}

bool cochain_equal(const Cochain& x, const Cochain& y) {
  if (x.level != y.level || !(x.omega_degree == y.omega_degree) ||
      x.value_dim != y.value_dim)
    return false;
  for (const auto& [t, v] : x.values) {
    auto it = y.values.find(t);
    if (it == y.values.end()) {
      if (!is_zero_vec(v)) return false;
    } else if (!vec_equal(v, it->second)) {
      return false;
    }
  }
  for (const auto& [t, v] : y.values)
    if (!x.values.count(t) && !is_zero_vec(v)) return false;
  return true;
}

CheckReport check_cochain_degree(const Algebra3& a,
                                 const std::vector<Degree>& vdeg,
                                 const Cochain& w) {
  for (const auto& [t, v] : w.values) {
    Degree want = w.omega_degree;
    for (int c : t) want = add_degrees(a.group, want, a.degree(c));
    for (int m = 0; m < v.size(); ++m)
      if (!rat_is_zero(v(m)) && !(vdeg[m] == want)) {
        std::vector<int> wt(t.begin(), t.end());
        wt.push_back(m);
        return fail_report(
            "cochain-degree", "degree-rule",
            Witness{wt, degree_to_string(vdeg[m]), degree_to_string(want),
                    "value component degree vs argument degrees plus the "
                    "cochain degree"});
      }
  }
  return pass_report("cochain-degree", "degree-rule");
}

CheckReport is_hom_cochain(const Algebra3& a, const Representation& r,
                           const Cochain& w) {
  std::vector<Vec> phicol(a.dim());
  for (int i = 0; i < a.dim(); ++i) phicol[i] = a.phi.col(i);
  for (const auto& t : canonical_tuples(a, w.level)) {
    Vec lhs = r.beta * cochain_eval_idx(a, w, t);
    std::vector<const Vec*> argv;
    argv.reserve(t.size());
    for (int c : t) argv.push_back(&phicol[c]);
    Vec rhs = cochain_eval_vecs(a, w, argv);
    if (!vec_equal(lhs, rhs))
      return fail_report("hom-cochain", "twist-intertwining",
                         Witness{t, format_vec(lhs), format_vec(rhs),
                                 "beta o w vs w o phi on every argument"});
  }
  return pass_report("hom-cochain", "twist-intertwining");
}

Cochain coboundary(const Algebra3& a, const Representation& r,
                   const Cochain& w) {
  if (w.value_dim != r.dim())
    throw InputError(
        "cochain value dimension does not match the representation space");
  const int nout = w.level + 1;
  Mat phip = Mat::Identity(a.dim(), a.dim());
  for (int e = 0; e < nout - 1; ++e) phip = (phip * a.phi).eval();
  std::vector<Vec> phipcol(a.dim()), phicol(a.dim());
  for (int i = 0; i < a.dim(); ++i) {
    phipcol[i] = phip.col(i);
    phicol[i] = a.phi.col(i);
  }
  Cochain out;
  out.level = nout;
  out.omega_degree = w.omega_degree;
  out.value_dim = w.value_dim;
  for (const auto& t : canonical_tuples(a, nout)) {
    Vec v = dgen_value(a, r, w, phip, phipcol, phicol, t);
    if (!is_zero_vec(v)) out.values[t] = std::move(v);
  }
  return out;
}

Cochain d0_direct(const Algebra3& a, const Representation& r,
                  const Cochain& nu) {
  if (nu.level != 0) throw InputError("d0 expects a level-0 cochain");
  if (nu.value_dim != r.dim())
    throw InputError(
        "cochain value dimension does not match the representation space");
  RTab t = rtab(a, r);
  Cochain out;
  out.level = 1;
  out.omega_degree = nu.omega_degree;
  out.value_dim = nu.value_dim;
  for (const auto& tu : canonical_tuples(a, 1)) {
    Vec v = d0_value(a, r, t, nu, tu[0], tu[1], tu[2]);
    if (!is_zero_vec(v)) out.values[tu] = std::move(v);
  }
  return out;
}

Cochain d1_direct(const Algebra3& a, const Representation& r,
                  const Cochain& w) {
  if (w.level != 1) throw InputError("d1 expects a level-1 cochain");
  if (w.value_dim != r.dim())
    throw InputError(
        "cochain value dimension does not match the representation space");
  RTab t = rtab(a, r);
  Cochain out;
  out.level = 2;
  out.omega_degree = w.omega_degree;
  out.value_dim = w.value_dim;
  for (const auto& tu : canonical_tuples(a, 2)) {
    Vec v = d1_value(a, r, t, w, tu[0], tu[1], tu[2], tu[3], tu[4]);
    if (!is_zero_vec(v)) out.values[tu] = std::move(v);
  }
  return out;
}

CheckReport is_0_cocycle(const Algebra3& a, const Representation& r,
                         const Cochain& nu, Exec ex) {
  if (nu.level != 0) throw InputError("0-cocycle test expects level 0");
  if (nu.value_dim != r.dim())
    throw InputError(
        "cochain value dimension does not match the representation space");
  RTab t = rtab(a, r);
  const int n = a.dim();
  const size_t total = static_cast<size_t>(n) * n * n;
  auto probe = [&](size_t idx) -> std::optional<Witness> {
    int k = static_cast<int>(idx % n);
    idx /= n;
    int j = static_cast<int>(idx % n);
    int i = static_cast<int>(idx / n);
    Vec v = d0_value(a, r, t, nu, i, j, k);
    if (is_zero_vec(v)) return std::nullopt;
    return Witness{{i, j, k}, format_vec(v),
                   format_vec(Vec::Zero(nu.value_dim)),
                   "d0 of the cochain at this triple"};
  };
  auto hit = first_hit<Witness>(total, ex.threads, probe);
  if (hit) return fail_report("0-cocycle", "d0-vanishing", std::move(hit->second));
  return pass_report("0-cocycle", "d0-vanishing");
}

CheckReport is_1_cocycle(const Algebra3& a, const Representation& r,
                         const Cochain& w, Exec ex) {
  if (w.level != 1) throw InputError("1-cocycle test expects level 1");
  if (w.value_dim != r.dim())
    throw InputError(
        "cochain value dimension does not match the representation space");
  RTab t = rtab(a, r);
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
    Vec v = d1_value(a, r, t, w, f1, f2, g1, g2, g3);
    if (is_zero_vec(v)) return std::nullopt;
    return Witness{{f1, f2, g1, g2, g3}, format_vec(v),
                   format_vec(Vec::Zero(w.value_dim)),
                   "d1 of the cochain at this 5-tuple"};
  };
  auto hit = first_hit<Witness>(total, ex.threads, probe);
  if (hit) return fail_report("1-cocycle", "d1-vanishing", std::move(hit->second));
  return pass_report("1-cocycle", "d1-vanishing");
}

std::vector<Cochain> cocycle_space(const Algebra3& a, const Representation& r,
                                   int level, const Degree& omega_degree) {
  if (level != 0 && level != 1)
    throw InputError("cocycle_space supports levels 0 and 1");
  Degree wdeg = canonical_degree(a.group, omega_degree);
  const int n = a.dim();
  const int dv = r.dim();
  std::vector<std::vector<int>> tuples = canonical_tuples(a, level);
  std::vector<std::pair<std::vector<int>, int>> coords;
  for (const auto& t : tuples) {
    Degree td = wdeg;
    for (int c : t) td = add_degrees(a.group, td, a.degree(c));
    for (int m = 0; m < dv; ++m)
      if (r.space.degrees[m] == td) coords.emplace_back(t, m);
  }
  if (coords.empty()) return {};

  RTab tab = rtab(a, r);
  std::vector<Vec> phicol = tab.phicol;
  const size_t homrows = tuples.size() * dv;
  const size_t dcount = level == 0 ? static_cast<size_t>(n) * n * n
                                   : static_cast<size_t>(n) * n * n * n * n;
  Mat sys = Mat::Zero(homrows + dcount * dv, coords.size());
  for (size_t c = 0; c < coords.size(); ++c) {
    Cochain unit;
    unit.level = level;
    unit.omega_degree = wdeg;
    unit.value_dim = dv;
    Vec uv = Vec::Zero(dv);
    uv(coords[c].second) = 1;
    unit.values[coords[c].first] = uv;

    size_t row = 0;
    for (const auto& t : tuples) {
      Vec def = r.beta * cochain_eval_idx(a, unit, t);
      std::vector<const Vec*> argv;
      argv.reserve(t.size());
      for (int i : t) argv.push_back(&phicol[i]);
      def -= cochain_eval_vecs(a, unit, argv);
      for (int m = 0; m < dv; ++m) sys(row++, c) = def(m);
    }
    if (level == 0) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k) {
            Vec v = d0_value(a, r, tab, unit, i, j, k);
            for (int m = 0; m < dv; ++m) sys(row++, c) = v(m);
          }
    } else {
      for (int f1 = 0; f1 < n; ++f1)
        for (int f2 = 0; f2 < n; ++f2)
          for (int g1 = 0; g1 < n; ++g1)
            for (int g2 = 0; g2 < n; ++g2)
              for (int g3 = 0; g3 < n; ++g3) {
                Vec v = d1_value(a, r, tab, unit, f1, f2, g1, g2, g3);
                for (int m = 0; m < dv; ++m) sys(row++, c) = v(m);
              }
    }
  }

  std::vector<Vec> kernel = kernel_basis(sys);
  std::vector<Cochain> out;
  out.reserve(kernel.size());
  for (const Vec& x : kernel) {
    Cochain w;
    w.level = level;
    w.omega_degree = wdeg;
    w.value_dim = dv;
    for (size_t c = 0; c < coords.size(); ++c) {
      if (rat_is_zero(x(c))) continue;
      auto it = w.values.find(coords[c].first);
      if (it == w.values.end()) {
        Vec v = Vec::Zero(dv);
        v(coords[c].second) = x(c);
        w.values[coords[c].first] = std::move(v);
      } else {
        it->second(coords[c].second) = x(c);
      }
    }
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace rholie
