#include "rholie/io.hpp"

#include "rholie/error.hpp"

#include <fstream>

namespace rholie {

namespace {

const Json& need(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object())
    throw InputError(where + " must be an object");
  auto it = j.find(key);
  if (it == j.end())
    throw InputError("missing field '" + std::string(key) + "' in " + where);
  return *it;
}

long need_long(const Json& j, const std::string& where) {
  if (!j.is_number_integer())
    throw InputError(where + " must be an integer");
  return j.get<long>();
}

int need_index(const Json& j, int bound, const std::string& where) {
  long v = need_long(j, where);
  if (v < 0 || v >= bound)
    throw InputError(where + " is out of range: " + std::to_string(v) +
                     " not in [0, " + std::to_string(bound) + ")");
  return static_cast<int>(v);
}

std::string need_string(const Json& j, const std::string& where) {
  if (!j.is_string())
    throw InputError(where + " must be a string");
  return j.get<std::string>();
}

const Json& need_array(const Json& j, const std::string& where) {
  if (!j.is_array())
    throw InputError(where + " must be an array");
  return j;
}

Rat parse_scalar(const Json& j, const std::string& where) {
  std::string s = need_string(j, where);
  auto r = rat_from_string(s);
  if (!r)
    throw InputError("invalid scalar '" + s + "' in " + where);
  return *r;
}

// rows x cols matrix given as an array of rows of scalar strings; pass -1 to
// accept any extent in that direction.
Mat parse_mat(const Json& j, int rows, int cols, const std::string& where) {
  const Json& rws = need_array(j, where);
  if (rows >= 0 && static_cast<int>(rws.size()) != rows)
    throw InputError(where + " must have " + std::to_string(rows) + " rows");
  int nr = static_cast<int>(rws.size());
  int nc = cols;
  Mat m;
  for (int r = 0; r < nr; ++r) {
    std::string rw = where + "[" + std::to_string(r) + "]";
    const Json& row = need_array(rws[r], rw);
    if (nc < 0) nc = static_cast<int>(row.size());
    if (static_cast<int>(row.size()) != nc)
      throw InputError(rw + " must have " + std::to_string(nc) + " entries");
    if (m.size() == 0) m = Mat::Zero(nr, nc);
    for (int c = 0; c < nc; ++c)
      m(r, c) = parse_scalar(row[c], rw + "[" + std::to_string(c) + "]");
  }
  if (m.size() == 0) m = Mat::Zero(nr, nc < 0 ? 0 : nc);
  return m;
}

Degree parse_degree(const GradingGroup& g, const Json& j,
                    const std::string& where) {
  const Json& arr = need_array(j, where);
  if (static_cast<int>(arr.size()) != g.coord_count())
    throw InputError(where + " must have " + std::to_string(g.coord_count()) +
                     " coordinates");
  Degree d;
  d.c.reserve(arr.size());
  for (size_t i = 0; i < arr.size(); ++i)
    d.c.push_back(need_long(arr[i], where + "[" + std::to_string(i) + "]"));
  return canonical_degree(g, d);
}

GradedBasis parse_basis(const GradingGroup& g, const Json& j,
                        const std::string& where) {
  const Json& arr = need_array(j, where);
  GradedBasis b;
  for (size_t i = 0; i < arr.size(); ++i) {
    std::string wi = where + "[" + std::to_string(i) + "]";
    b.names.push_back(need_string(need(arr[i], "name", wi), wi + ".name"));
    b.degrees.push_back(parse_degree(g, need(arr[i], "degree", wi),
                                     wi + ".degree"));
  }
  return b;
}

Json mat_to_json(const Mat& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back(rat_to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json degree_to_json(const Degree& d) {
  Json out = Json::array();
  for (long c : d.c) out.push_back(c);
  return out;
}

Json basis_to_json(const GradedBasis& b) {
  Json out = Json::array();
  for (int i = 0; i < b.dim(); ++i)
    out.push_back(Json{{"name", b.names[i]},
                       {"degree", degree_to_json(b.degrees[i])}});
  return out;
}

}  // namespace

AlgebraFileData algebra_file_from_json(const Json& j) {
  AlgebraFileData d;
  const Json& grp = need(j, "group", "algebra file");
  d.group.free_rank =
      static_cast<int>(need_long(need(grp, "free_rank", "group"),
                                 "group.free_rank"));
  const Json& tor = need_array(need(grp, "torsion", "group"), "group.torsion");
  for (size_t i = 0; i < tor.size(); ++i)
    d.group.torsion_orders.push_back(
        need_long(tor[i], "group.torsion[" + std::to_string(i) + "]"));
  validate_group(d.group);

  int cc = d.group.coord_count();
  d.q = parse_mat(need(j, "rho", "algebra file"), cc, cc, "rho");
  d.basis = parse_basis(d.group, need(j, "basis", "algebra file"), "basis");
  int n = d.basis.dim();
  d.phi = parse_mat(need(j, "phi", "algebra file"), n, n, "phi");

  const Json& br = need_array(need(j, "bracket", "algebra file"), "bracket");
  for (size_t e = 0; e < br.size(); ++e) {
    std::string we = "bracket[" + std::to_string(e) + "]";
    const Json& on = need_array(need(br[e], "on", we), we + ".on");
    if (on.size() != 3)
      throw InputError(we + ".on must have 3 indices");
    std::array<int, 3> t;
    for (int s = 0; s < 3; ++s)
      t[s] = need_index(on[s], n, we + ".on[" + std::to_string(s) + "]");
    const Json& out = need_array(need(br[e], "out", we), we + ".out");
    Vec v = Vec::Zero(n);
    std::vector<bool> seen(n, false);
    for (size_t p = 0; p < out.size(); ++p) {
      std::string wp = we + ".out[" + std::to_string(p) + "]";
      const Json& pr = need_array(out[p], wp);
      if (pr.size() != 2)
        throw InputError(wp + " must be an [index, scalar] pair");
      int l = need_index(pr[0], n, wp + "[0]");
      if (seen[l])
        throw InputError(wp + " repeats output index " + std::to_string(l));
      seen[l] = true;
      v[l] = parse_scalar(pr[1], wp + "[1]");
    }
    d.bracket.emplace_back(t, std::move(v));
  }
  return d;
}

Algebra3 assemble_algebra(const AlgebraFileData& d) {
  Bicharacter rho{d.q};
  TriTensor t = canonicalize_tritensor(d.group, rho, d.basis.degrees,
                                       d.basis.dim(), d.bracket);
  return Algebra3{d.group, rho, d.basis, std::move(t), d.phi};
}

Algebra3 algebra_from_json(const Json& j) {
  AlgebraFileData d = algebra_file_from_json(j);
  CheckReport rep = validate_bicharacter(d.group, d.q);
  if (!rep.pass()) {
    std::string msg = "invalid bicharacter: " + rep.identity;
    if (rep.witness)
      msg += " fails at " + format_tuple(rep.witness->tuple);
    throw InputError(msg);
  }
  return assemble_algebra(d);
}

Json algebra_to_json(const Algebra3& a) {
  Json j;
  j["group"] = Json{{"free_rank", a.group.free_rank},
                    {"torsion", a.group.torsion_orders}};
  j["rho"] = mat_to_json(a.rho.q);
  j["basis"] = basis_to_json(a.basis);
  j["phi"] = mat_to_json(a.phi);

  // One entry per canonical (nondecreasing, not forced-zero) triple with a
  // nonzero value, in lexicographic order; parsing re-expands the orbits.
  Json br = Json::array();
  int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int jj = i; jj < n; ++jj)
      for (int k = jj; k < n; ++k) {
        std::vector<int> t{i, jj, k};
        if (!sort_tuple_skew(a, t)) continue;
        if (!a.bracket.nonzero(i, jj, k)) continue;
        const Vec& v = a.bracket.entry(i, jj, k);
        Json out = Json::array();
        for (int l = 0; l < n; ++l)
          if (!rat_is_zero(v[l]))
            out.push_back(Json::array({l, rat_to_string(v[l])}));
        br.push_back(Json{{"on", Json::array({i, jj, k})},
                          {"out", std::move(out)}});
      }
  j["bracket"] = std::move(br);
  return j;
}

Representation representation_from_json(const Algebra3& a, const Json& j) {
  GradedBasis space =
      parse_basis(a.group, need(j, "space", "representation file"), "space");
  int nv = space.dim();
  Mat beta = parse_mat(need(j, "beta", "representation file"), nv, nv, "beta");

  std::vector<std::pair<std::array<int, 2>, Mat>> entries;
  const Json& mu = need_array(need(j, "mu", "representation file"), "mu");
  for (size_t e = 0; e < mu.size(); ++e) {
    std::string we = "mu[" + std::to_string(e) + "]";
    const Json& on = need_array(need(mu[e], "on", we), we + ".on");
    if (on.size() != 2)
      throw InputError(we + ".on must have 2 indices");
    std::array<int, 2> pr{
        need_index(on[0], a.dim(), we + ".on[0]"),
        need_index(on[1], a.dim(), we + ".on[1]")};
    entries.emplace_back(
        pr, parse_mat(need(mu[e], "matrix", we), nv, nv, we + ".matrix"));
  }
  return make_representation(a, std::move(space), std::move(beta), entries);
}

Json representation_to_json(const Representation& r) {
  Json j;
  j["space"] = basis_to_json(r.space);
  j["beta"] = mat_to_json(r.beta);
  Json mu = Json::array();
  for (int p = 0; p < r.pb.dim(); ++p) {
    if (is_zero_mat(r.mu[p])) continue;
    auto [i, jj] = r.pb.pairs[p];
    mu.push_back(Json{{"on", Json::array({i, jj})},
                      {"matrix", mat_to_json(r.mu[p])}});
  }
  j["mu"] = std::move(mu);
  return j;
}

Cochain cochain_from_json(const Algebra3& a, int value_dim, const Json& j) {
  int level = static_cast<int>(
      need_long(need(j, "level", "cochain file"), "level"));
  if (level < 0)
    throw InputError("cochain level must be nonnegative");
  Degree deg =
      parse_degree(a.group, need(j, "degree", "cochain file"), "degree");

  int arity = 2 * level + 1;
  std::vector<std::pair<std::vector<int>, Vec>> entries;
  const Json& vals = need_array(need(j, "values", "cochain file"), "values");
  for (size_t e = 0; e < vals.size(); ++e) {
    std::string we = "values[" + std::to_string(e) + "]";
    const Json& on = need_array(need(vals[e], "on", we), we + ".on");
    if (static_cast<int>(on.size()) != arity)
      throw InputError(we + ".on must have " + std::to_string(arity) +
                       " indices for level " + std::to_string(level));
    std::vector<int> t;
    for (size_t s = 0; s < on.size(); ++s)
      t.push_back(
          need_index(on[s], a.dim(), we + ".on[" + std::to_string(s) + "]"));
    const Json& out = need_array(need(vals[e], "out", we), we + ".out");
    if (static_cast<int>(out.size()) != value_dim)
      throw InputError(we + ".out must have " + std::to_string(value_dim) +
                       " components");
    Vec v(value_dim);
    for (int m = 0; m < value_dim; ++m)
      v[m] = parse_scalar(out[m], we + ".out[" + std::to_string(m) + "]");
    entries.emplace_back(std::move(t), std::move(v));
  }
  return make_cochain(a, level, deg, value_dim, entries);
}

Json cochain_to_json(const Cochain& w) {
  Json j;
  j["level"] = w.level;
  j["degree"] = degree_to_json(w.omega_degree);
  Json vals = Json::array();
  for (const auto& [t, v] : w.values) {
    if (is_zero_vec(v)) continue;
    Json out = Json::array();
    for (Eigen::Index m = 0; m < v.size(); ++m)
      out.push_back(rat_to_string(v[m]));
    vals.push_back(Json{{"on", t}, {"out", std::move(out)}});
  }
  j["values"] = std::move(vals);
  return j;
}

GradedOperator operator_from_json(const Algebra3& a, const Json& j) {
  GradedOperator x;
  x.matrix =
      parse_mat(need(j, "matrix", "operator file"), a.dim(), a.dim(),
                "matrix");
  x.x_degree =
      parse_degree(a.group, need(j, "degree", "operator file"), "degree");
  return x;
}

Json operator_to_json(const GradedOperator& x) {
  return Json{{"matrix", mat_to_json(x.matrix)},
              {"degree", degree_to_json(x.x_degree)}};
}

ExtensionData extension_from_json(const Json& j) {
  ExtensionData e;
  e.A = algebra_from_json(need(j, "A", "extension bundle"));
  e.B = algebra_from_json(need(j, "B", "extension bundle"));
  const Json& v = need(j, "V", "extension bundle");
  e.V = parse_basis(e.A.group, need(v, "basis", "V"), "V.basis");
  e.phi_V = parse_mat(need(v, "phi", "V"), e.V.dim(), e.V.dim(), "V.phi");
  e.i = parse_mat(need(j, "i", "extension bundle"), e.B.dim(), e.V.dim(), "i");
  e.p = parse_mat(need(j, "p", "extension bundle"), e.A.dim(), e.B.dim(), "p");
  return e;
}

Json extension_to_json(const ExtensionData& e) {
  return Json{{"A", algebra_to_json(e.A)},
              {"B", algebra_to_json(e.B)},
              {"i", mat_to_json(e.i)},
              {"p", mat_to_json(e.p)},
              {"V", Json{{"basis", basis_to_json(e.V)},
                         {"phi", mat_to_json(e.phi_V)}}}};
}

Json report_to_json(const CheckReport& r) {
  Json j;
  j["check"] = r.check;
  j["status"] = status_to_string(r.status);
  j["identity"] = r.identity;
  if (r.witness) {
    j["witness"] = Json{{"tuple", r.witness->tuple},
                        {"lhs", r.witness->lhs},
                        {"rhs", r.witness->rhs}};
    if (!r.witness->note.empty()) j["witness"]["note"] = r.witness->note;
  }
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f)
    throw InputError("cannot open file: " + path);
  try {
    return Json::parse(f);
  } catch (const Json::parse_error& e) {
    throw InputError("parse error in " + path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream f(path);
  if (!f)
    throw InputError("cannot open file for writing: " + path);
  f << j.dump(2) << "\n";
  if (!f)
    throw InputError("failed writing file: " + path);
}

}  // namespace rholie
