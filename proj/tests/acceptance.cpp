// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Runs against the installed corpus and the built command-line tool.

#include "rholie/bicharacter.hpp"
#include "rholie/deformation.hpp"
#include "rholie/derivations.hpp"
#include "rholie/error.hpp"
#include "rholie/extensions.hpp"
#include "rholie/io.hpp"
#include "rholie/linalg.hpp"

#include "fixtures.hpp"

#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

using namespace rholie;

namespace {

std::string corpus(const std::string& name) {
  return std::string(CORPUS_DIR) + "/" + name;
}

Algebra3 load_algebra(const std::string& name) {
  return algebra_from_json(load_json_file(corpus(name)));
}

int run_cli(const std::string& args, std::string* out = nullptr) {
  std::string cmd = std::string(RHOLIE_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return -1;
  char buf[4096];
  std::string collected;
  while (fgets(buf, sizeof buf, p)) collected += buf;
  int rc = pclose(p);
  if (out) *out = std::move(collected);
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

// ---- criterion 1: bicharacter laws on four sample groups ----

std::vector<Degree> degree_samples(const GradingGroup& g) {
  std::vector<Degree> out;
  const int cc = g.coord_count();
  std::vector<long> lo(cc), hi(cc);
  for (int i = 0; i < cc; ++i) {
    if (i < g.free_rank) {
      lo[i] = -3;
      hi[i] = 3;
    } else {
      lo[i] = 0;
      hi[i] = g.torsion_orders[i - g.free_rank] - 1;
    }
  }
  std::vector<long> cur = lo;
  while (true) {
    out.push_back(canonical_degree(g, Degree{cur}));
    int pos = 0;
    while (pos < cc) {
      if (++cur[pos] <= hi[pos]) break;
      cur[pos] = lo[pos];
      ++pos;
    }
    if (cc == 0 || pos == cc) break;
  }
  if (out.empty()) out.push_back(Degree{});
  return out;
}

bool criterion1(std::string& why) {
  struct Sample {
    GradingGroup g;
    std::vector<std::vector<std::string>> q;
  };
  std::vector<Sample> samples = {
      {{1, {}}, {{"-1"}}},
      {{2, {}}, {{"1", "2"}, {"1/2", "1"}}},
      {{0, {2}}, {{"-1"}}},
      {{1, {2}}, {{"1", "-1"}, {"-1", "-1"}}},
  };
  for (const auto& s : samples) {
    const int cc = s.g.coord_count();
    Mat q(cc, cc);
    for (int r = 0; r < cc; ++r)
      for (int c = 0; c < cc; ++c) q(r, c) = rat_from_string(s.q[r][c]).value();
    if (!validate_bicharacter(s.g, q).pass()) {
      why = "a sample bicharacter failed validation";
      return false;
    }
    Bicharacter rho{q};
    auto ds = degree_samples(s.g);
    Degree zero = zero_degree(s.g);
    for (const Degree& a : ds)
      for (const Degree& b : ds) {
        if (Rat(rho_eval(rho, a, b) * rho_eval(rho, b, a)) != Rat(1)) {
          why = "rho(a,b) rho(b,a) != 1";
          return false;
        }
        if (rho_eval(rho, zero, b) != Rat(1)) {
          why = "rho(0,b) != 1";
          return false;
        }
        Rat diag = rho_eval(rho, a, a);
        if (diag != Rat(1) && diag != Rat(-1)) {
          why = "rho(c,c) is not a sign";
          return false;
        }
        for (const Degree& c : ds) {
          Degree ab = add_degrees(s.g, a, b);
          if (rho_eval(rho, ab, c) !=
              Rat(rho_eval(rho, a, c) * rho_eval(rho, b, c))) {
            why = "rho(a+b,c) != rho(a,c) rho(b,c)";
            return false;
          }
        }
      }
  }
  return true;
}

// ---- criterion 2: the quadruple algebra and its broken variants ----

bool criterion2(std::string& why) {
  Algebra3 a = load_algebra("a4.json");
  for (const CheckReport& r :
       {check_grading(a), check_skew_symmetry(a), check_fundamental_identity(a),
        check_multiplicative(a)}) {
    if (!r.pass()) {
      why = r.check + " failed on the reference algebra";
      return false;
    }
  }
  struct Broken {
    const char* file;
    const char* check;
  };
  for (Broken b : {Broken{"a4_fi_broken.json", "fundamental identity"},
                   Broken{"a4_phi_scaled.json", "multiplicativity"},
                   Broken{"z2_broken_grading.json", "grading"}}) {
    Algebra3 x = load_algebra(b.file);
    CheckReport r = std::string(b.check) == "grading"
                        ? check_grading(x)
                        : std::string(b.check) == "multiplicativity"
                              ? check_multiplicative(x)
                              : check_fundamental_identity(x);
    if (r.pass() || !r.witness.has_value()) {
      why = std::string(b.file) + " did not fail " + b.check +
            " with a witness";
      return false;
    }
  }
  return true;
}

// ---- criterion 4 helper: representation checks ----

bool criterion4(std::string& why) {
  for (const char* name : {"a4.json", "z2_super_zero.json"}) {
    Algebra3 a = load_algebra(name);
    if (!check_representation(a, adjoint_rep(a)).pass()) {
      why = std::string("adjoint failed on ") + name;
      return false;
    }
  }
  Algebra3 a = load_algebra("a4.json");
  Representation r = adjoint_rep(a);
  r.mu[r.pb.index.at({0, 1})] *= Rat(2);
  CheckReport bad = check_representation(a, r);
  if (bad.pass() || !bad.witness.has_value() || bad.witness->tuple.empty()) {
    why = "the doubled action did not fail with a located witness";
    return false;
  }
  return true;
}

// ---- criterion 6: route agreement for the displayed coboundaries ----

bool criterion6(std::string& why) {
  struct Setup {
    const char* file;
    bool with_coadjoint;
  };
  fixtures::Lcg rng(2026);
  for (Setup s : {Setup{"a4.json", true}, Setup{"z2_super_zero.json", false},
                  Setup{"zero3.json", false}}) {
    Algebra3 a = load_algebra(s.file);
    std::vector<Representation> reps{adjoint_rep(a)};
    if (s.with_coadjoint) reps.push_back(coadjoint_rep(a));
    for (const Representation& r : reps) {
      for (int trial = 0; trial < 20; ++trial) {
        Cochain nu = fixtures::random_cochain(a, 0, r.dim(), rng);
        if (!cochain_equal(d0_direct(a, r, nu), coboundary(a, r, nu))) {
          why = std::string("d0 routes disagree on ") + s.file;
          return false;
        }
        Cochain w = fixtures::random_cochain(a, 1, r.dim(), rng);
        if (!cochain_equal(d1_direct(a, r, w), coboundary(a, r, w))) {
          why = std::string("d1 routes disagree on ") + s.file;
          return false;
        }
        if (!fixtures::cochain_is_zero(d1_direct(a, r, d0_direct(a, r, nu)))) {
          why = std::string("d1 . d0 != 0 on ") + s.file;
          return false;
        }
      }
    }
  }
  Algebra3 a = load_algebra("a4.json");
  Representation ad = adjoint_rep(a);
  std::vector<std::pair<std::vector<int>, Vec>> ent;
  for (int i = 0; i < 4; ++i) ent.push_back({{i}, fixtures::unit4(i, 1)});
  Cochain id = make_cochain(a, 0, zero_degree(a.group), 4, ent);
  Cochain d = d0_direct(a, ad, id);
  for (const auto& t : canonical_tuples(a, 1))
    if (!vec_equal(cochain_eval_idx(a, d, t),
                   Vec(a.bracket.entry(t[0], t[1], t[2]) * Rat(2)))) {
      why = "d0 of the identity is not twice the bracket";
      return false;
    }
  return true;
}

// ---- criterion 7: derivations ----

int naive_derivation_dim(const Algebra3& a) {
  const int n = a.dim();
  Mat sys = Mat::Zero(n * n * n * n, n * n);
  int row = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l)
        for (int m = 0; m < n; ++m) {
          for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
              Rat coeff(0);
              if (r == m) coeff += a.bracket.entry(i, j, l)(c);
              if (c == i) coeff -= a.bracket.entry(r, j, l)(m);
              if (c == j) coeff -= a.bracket.entry(i, r, l)(m);
              if (c == l) coeff -= a.bracket.entry(i, j, r)(m);
              sys(row, r * n + c) = coeff;
            }
          ++row;
        }
  return n * n - static_cast<int>(rank(sys));
}

bool criterion7(std::string& why) {
  Algebra3 a = load_algebra("a4.json");
  Degree z = zero_degree(a.group);
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (!is_phi_k_derivation(a, inner_derivation(a, i, j, k), k + 1)
                 .pass()) {
          why = "an inner derivation failed at level k+1";
          return false;
        }

  auto ders = derivation_space(a, 0, z);
  if (static_cast<int>(ders.size()) != naive_derivation_dim(a)) {
    why = "derivation space dimension disagrees with the brute-force count";
    return false;
  }

  // property sweep on a sample of operators
  std::vector<GradedOperator> sample{{Mat::Identity(4, 4), z},
                                     {Mat::Zero(4, 4), z},
                                     {Mat(Mat::Identity(4, 4) * Rat(2)), z}};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      sample.push_back(inner_derivation(a, i, j, 0));
  for (const auto& d : ders) sample.push_back(d);
  fixtures::Lcg rng(7);
  for (int t = 0; t < 3; ++t) {
    Mat m(4, 4);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) m(r, c) = rng.rat();
    sample.push_back({std::move(m), z});
  }

  std::vector<const GradedOperator*> centroids, gders;
  for (const auto& op : sample) {
    auto cl = classify_operator(a, op, 0);
    if (cl.centroid.pass()) {
      centroids.push_back(&op);
      if (!cl.qder.pass()) {
        why = "a centroid element is not a quasi-derivation";
        return false;
      }
    }
    if (cl.gder.pass()) gders.push_back(&op);
  }
  if (centroids.empty() || gders.empty()) {
    why = "the sample found no flagged operators to compose";
    return false;
  }
  for (const auto* c : centroids)
    for (const auto* d : gders) {
      GradedOperator prod{Mat(c->matrix * d->matrix), z};
      for (int ks : {0, 2})
        if (!classify_operator(a, prod, ks).gder.pass()) {
          why = "a centroid-derivation composite left the generalized "
                "derivations";
          return false;
        }
    }
  return true;
}

// ---- criterion 8/9: double-space extensions ----

Cochain exact_omega(const Algebra3& a) {
  std::vector<std::pair<std::vector<int>, Vec>> ent;
  for (int i = 0; i < 4; ++i) ent.push_back({{i}, fixtures::unit4(i, 1)});
  Cochain nu = make_cochain(a, 0, zero_degree(a.group), 4, ent);
  return d0_direct(a, coadjoint_rep(a), nu);
}

bool criterion8(std::string& why) {
  Algebra3 a = load_algebra("a4.json");
  Cochain zero = make_cochain(a, 1, zero_degree(a.group), 4, {});
  Algebra3 b = tstar_extension(a, zero);
  for (const CheckReport& r :
       {check_grading(b), check_skew_symmetry(b), check_fundamental_identity(b),
        check_multiplicative(b)}) {
    if (!r.pass()) {
      why = r.check + " failed on the double-space extension";
      return false;
    }
  }
  ExtensionData e = tstar_extension_data(a, zero);
  if (!check_extension(e).pass() || !is_abelian(e).pass()) {
    why = "the extension data failed its structural checks";
    return false;
  }
  Cochain bad = make_cochain(a, 1, zero_degree(a.group), 4,
                             {{{0, 1, 2}, fixtures::unit4(0, 1)}});
  if (check_fundamental_identity(tstar_extension(a, bad)).pass()) {
    why = "a non-cocycle still produced a fundamental-identity-satisfying "
          "extension";
    return false;
  }
  return true;
}

bool criterion9(std::string& why) {
  Algebra3 a = load_algebra("a4.json");
  Cochain w = exact_omega(a);
  ExtensionData e = tstar_extension_data(a, w);
  Representation co = coadjoint_rep(a);

  Section s0 = find_section(e);
  auto freedom = section_freedom(e);
  if (freedom.empty()) {
    why = "no second section available";
    return false;
  }
  Section s1{Mat(s0.delta + freedom[0])};
  if (mat_equal(s0.delta, s1.delta)) {
    why = "the two sections coincide";
    return false;
  }
  for (const Section* s : {&s0, &s1}) {
    Representation ind = induced_rep(e, *s);
    if (!mat_equal(ind.beta, co.beta)) {
      why = "induced twist differs from the coadjoint";
      return false;
    }
    for (size_t p = 0; p < ind.mu.size(); ++p)
      if (!mat_equal(ind.mu[p], co.mu[p])) {
        why = "induced action differs from the coadjoint";
        return false;
      }
    if (!is_1_cocycle(a, co, induced_cocycle(e, *s)).pass()) {
      why = "an induced cochain is not a cocycle";
      return false;
    }
  }

  Mat top = Mat::Zero(8, 4);
  top.topRows(4) = Mat::Identity(4, 4);
  if (!cochain_equal(induced_cocycle(e, Section{top}), w)) {
    why = "the section defect did not recover the construction cochain";
    return false;
  }
  return true;
}

// ---- criterion 10: deformations ----

bool criterion10(std::string& why) {
  Algebra3 a = load_algebra("a4.json");
  std::vector<Cochain> omegas{make_cochain(a, 1, zero_degree(a.group), 4, {}),
                              bracket_cochain(a)};
  fixtures::Lcg rng(17);
  for (int t = 0; t < 10; ++t)
    omegas.push_back(fixtures::random_cochain(a, 1, 4, rng));
  for (const Cochain& w : omegas) {
    auto r = check_infinitesimal_deformation(a, w);
    if (r.is_deformation != (r.w_is_structure && r.w_is_cocycle)) {
      why = "the deformation flag is not the conjunction of its parts";
      return false;
    }
    if (!r.consistency.pass()) {
      why = "the t-expansion disagrees with the independent routes";
      return false;
    }
  }

  for (const char* name : {"a4.json", "z2_super_zero.json"}) {
    Algebra3 x = load_algebra(name);
    auto cands = nijenhuis_candidates(x);
    if (cands.empty()) {
      why = std::string("no solver candidates on ") + name;
      return false;
    }
    bool saw_zero = false;
    for (const auto& nop : cands) {
      if (is_zero_mat(nop.matrix)) saw_zero = true;
      if (!is_nijenhuis(x, nop).pass()) {
        why = "a solver candidate fails the defining identity";
        return false;
      }
      auto rep = check_infinitesimal_deformation(x, nijenhuis_bracket(x, nop));
      if (!rep.is_deformation || !rep.consistency.pass()) {
        why = "an operator-induced cochain is not a deformation";
        return false;
      }
      if (!check_trivial_deformation(x, nop).pass()) {
        why = "the operator deformation is not trivial coefficientwise";
        return false;
      }
    }
    if (!saw_zero) {
      why = "the zero operator is missing from the candidates";
      return false;
    }
  }
  return true;
}

// ---- criterion 11: the command-line tool ----

bool criterion11(std::string& why) {
  std::string out;
  if (run_cli("check " + corpus("a4.json"), &out) != 0) {
    why = "check on the reference algebra did not exit 0";
    return false;
  }
  if (run_cli("--format records check " + corpus("a4.json"), &out) != 0) {
    why = "records-mode check did not exit 0";
    return false;
  }
  int records = 0;
  std::istringstream lines(out);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    Json j = Json::parse(line, nullptr, false);
    if (j.is_discarded() || j["status"] != "pass") {
      why = "a record line is not a passing JSON report";
      return false;
    }
    ++records;
  }
  if (records != 5) {
    why = "expected five records for the five checks";
    return false;
  }

  if (run_cli("check " + corpus("a4_fi_broken.json")) != 1) {
    why = "a mathematically broken algebra did not exit 1";
    return false;
  }
  if (run_cli("check " + corpus("z2_bad_bicharacter.json")) != 1) {
    why = "a law-breaking bicharacter did not exit 1";
    return false;
  }
  if (run_cli("check " + corpus("bad_scalar.json")) != 2) {
    why = "a malformed scalar did not exit 2";
    return false;
  }
  if (run_cli("check " + corpus("skew_conflict.json")) != 2) {
    why = "conflicting bracket entries did not exit 2";
    return false;
  }

  const std::string built = "/tmp/rholie_acceptance_tstar.json";
  if (run_cli("tstar " + corpus("a4.json") + " --omega zero --output " +
              built) != 0) {
    why = "the extension construction did not exit 0";
    return false;
  }
  if (run_cli("check " + built) != 0) {
    why = "the constructed extension did not pass its own checks";
    return false;
  }
  Json j1 = algebra_to_json(algebra_from_json(load_json_file(built)));
  Json j2 = algebra_to_json(algebra_from_json(j1));
  if (j1 != j2) {
    why = "the constructed extension does not round-trip";
    return false;
  }
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* what;
    std::function<bool(std::string&)> run;
  };
  std::vector<Criterion> table = {
      {1, "bicharacter laws on four sample groups", criterion1},
      {2, "reference algebra checks and located failures", criterion2},
      {3, "pair-space algebra satisfies the binary axioms",
       [](std::string& why) {
         Algebra3 a = load_algebra("a4.json");
         PairAlgebra L = fundamental_algebra(a);
         if (check_hom_rho_lie2(L).pass()) return true;
         why = "the pair-space check failed";
         return false;
       }},
      {4, "adjoint actions pass and a doubled action fails", criterion4},
      {5, "coadjoint action with its hand-computed value",
       [](std::string& why) {
         Algebra3 a = load_algebra("a4.json");
         Representation co = coadjoint_rep(a);
         if (!check_representation(a, co).pass()) {
           why = "the coadjoint action failed its conditions";
           return false;
         }
         if (!vec_equal(Vec(rep_action(a, co, 0, 1).col(3)),
                        fixtures::unit4(2, -1))) {
           why = "the coadjoint value on the dual basis is wrong";
           return false;
         }
         return true;
       }},
      {6, "general and direct coboundaries agree", criterion6},
      {7, "derivation spaces and operator classes", criterion7},
      {8, "double-space extension checks", criterion8},
      {9, "sections induce the coadjoint action and recover the cochain",
       criterion9},
      {10, "deformation flags and operator-induced deformations", criterion10},
      {11, "command-line round trips and exit codes", criterion11},
  };

  int failures = 0;
  for (const auto& c : table) {
    std::string why;
    bool ok = false;
    try {
      ok = c.run(why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    if (ok) {
      std::cout << "criterion " << c.number << ": PASS " << c.what << "\n";
    } else {
      ++failures;
      std::cout << "criterion " << c.number << ": FAIL " << c.what;
      if (!why.empty()) std::cout << " (" << why << ")";
      std::cout << "\n";
    }
  }
  if (failures) {
    std::cout << failures << " criteria failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
