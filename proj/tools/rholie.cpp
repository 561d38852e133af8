#include "rholie/deformation.hpp"
#include "rholie/error.hpp"
#include "rholie/io.hpp"

#include "CLI11.hpp"

#include <iomanip>
#include <iostream>
#include <sstream>

using namespace rholie;

namespace {

// Dual-audience output: aligned text for humans, one JSON record per line for
// machines.  Exit codes are decided by the callers; the printer only tracks
// whether any report failed.
struct Printer {
  bool records = false;
  bool any_fail = false;

  void report(const CheckReport& r) {
    if (!r.pass()) any_fail = true;
    if (records) {
      std::cout << report_to_json(r).dump() << "\n";
      return;
    }
    std::cout << std::left << std::setw(7) << status_to_string(r.status)
              << std::setw(28) << r.check << r.identity << "\n";
    if (r.witness) {
      std::cout << "       at " << format_tuple(r.witness->tuple)
                << ": lhs = " << r.witness->lhs
                << ", rhs = " << r.witness->rhs << "\n";
      if (!r.witness->note.empty())
        std::cout << "       " << r.witness->note << "\n";
    }
    if (!r.detail.empty()) std::cout << "       " << r.detail << "\n";
  }

  void dimension(size_t d) {
    if (records)
      std::cout << Json{{"dimension", d}}.dump() << "\n";
    else
      std::cout << "dimension: " << d << "\n";
  }

  void basis_cochain(size_t idx, const Cochain& w) {
    if (records) {
      std::cout << Json{{"basis_index", idx}, {"cochain", cochain_to_json(w)}}
                       .dump()
                << "\n";
      return;
    }
    std::cout << "basis[" << idx << "]  level " << w.level << ", degree "
              << degree_to_string(w.omega_degree) << "\n";
    for (const auto& [t, v] : w.values)
      std::cout << "  " << format_tuple(t) << " -> " << format_vec(v) << "\n";
  }

  void basis_operator(size_t idx, const GradedOperator& x) {
    if (records) {
      std::cout << Json{{"basis_index", idx}, {"operator", operator_to_json(x)}}
                       .dump()
                << "\n";
      return;
    }
    std::cout << "basis[" << idx << "]  degree "
              << degree_to_string(x.x_degree) << "\n";
    std::istringstream rows(format_mat(x.matrix));
    for (std::string line; std::getline(rows, line);)
      std::cout << "  " << line << "\n";
  }

  void wrote(const std::string& path, const std::string& what) {
    if (records)
      std::cout << Json{{"written", path}, {"content", what}}.dump() << "\n";
    else
      std::cout << "wrote " << what << " to " << path << "\n";
  }

  void flags(const DeformationReport& d) {
    if (records) {
      std::cout << Json{{"is_deformation", d.is_deformation},
                        {"w_is_structure", d.w_is_structure},
                        {"w_is_cocycle", d.w_is_cocycle}}
                       .dump()
                << "\n";
      return;
    }
    std::cout << "deformation: " << (d.is_deformation ? "yes" : "no")
              << "  (structure: " << (d.w_is_structure ? "yes" : "no")
              << ", cocycle: " << (d.w_is_cocycle ? "yes" : "no") << ")\n";
  }
};

Algebra3 load_algebra(const std::string& path) {
  return algebra_from_json(load_json_file(path));
}

Representation resolve_rep(const Algebra3& a, const std::string& spec) {
  if (spec == "adjoint") return adjoint_rep(a);
  if (spec == "coadjoint") return coadjoint_rep(a);
  return representation_from_json(a, load_json_file(spec));
}

// "zero" or a cochain file; value vectors live in a space of dimension
// dim A (the algebra itself or its dual, depending on the command).
Cochain resolve_omega(const Algebra3& a, const std::string& spec) {
  if (spec == "zero")
    return make_cochain(a, 1, zero_degree(a.group), a.dim(), {});
  return cochain_from_json(a, a.dim(), load_json_file(spec));
}

GradedOperator resolve_op(const Algebra3& a, const std::string& spec) {
  if (spec == "zero")
    return GradedOperator{Mat::Zero(a.dim(), a.dim()), zero_degree(a.group)};
  return operator_from_json(a, load_json_file(spec));
}

Degree parse_degree_arg(const GradingGroup& g, const std::string& s) {
  if (s.empty()) return zero_degree(g);
  Degree d;
  std::istringstream in(s);
  for (std::string part; std::getline(in, part, ',');) {
    try {
      size_t used = 0;
      long v = std::stol(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
      d.c.push_back(v);
    } catch (const std::exception&) {
      throw InputError("invalid --degree component '" + part + "'");
    }
  }
  if (static_cast<int>(d.c.size()) != g.coord_count())
    throw InputError("--degree must have " + std::to_string(g.coord_count()) +
                     " comma-separated components");
  return canonical_degree(g, d);
}

int cmd_check(Printer& pr, const std::string& path, Exec ex) {
  AlgebraFileData d = algebra_file_from_json(load_json_file(path));
  CheckReport bic = validate_bicharacter(d.group, d.q);
  pr.report(bic);
  if (!bic.pass()) return 1;
  Algebra3 a = assemble_algebra(d);
  pr.report(check_grading(a));
  pr.report(check_skew_symmetry(a));
  pr.report(check_fundamental_identity(a, ex));
  pr.report(check_multiplicative(a));
  return pr.any_fail ? 1 : 0;
}

int cmd_rep_check(Printer& pr, const std::string& alg, const std::string& rep,
                  Exec ex) {
  Algebra3 a = load_algebra(alg);
  Representation r = resolve_rep(a, rep);
  pr.report(check_representation(a, r, ex));
  return pr.any_fail ? 1 : 0;
}

int cmd_cohomology(Printer& pr, const std::string& alg, int level,
                   const std::string& rep, const std::string& degree) {
  Algebra3 a = load_algebra(alg);
  Representation r = resolve_rep(a, rep);
  Degree deg = parse_degree_arg(a.group, degree);
  std::vector<Cochain> basis = cocycle_space(a, r, level, deg);
  pr.dimension(basis.size());
  for (size_t i = 0; i < basis.size(); ++i) pr.basis_cochain(i, basis[i]);
  return 0;
}

int cmd_derivations(Printer& pr, const std::string& alg, int k,
                    const std::string& degree) {
  Algebra3 a = load_algebra(alg);
  Degree deg = parse_degree_arg(a.group, degree);
  std::vector<GradedOperator> basis = derivation_space(a, k, deg);
  pr.dimension(basis.size());
  for (size_t i = 0; i < basis.size(); ++i) pr.basis_operator(i, basis[i]);
  return 0;
}

// Classification answers are set-membership information, not violated
// invariants, so a "fail" flag here does not drive the exit code.
int cmd_classify(Printer& pr, const std::string& alg, const std::string& op,
                 int k) {
  Algebra3 a = load_algebra(alg);
  GradedOperator x = resolve_op(a, op);
  OperatorClassification c = classify_operator(a, x, k);
  pr.report(c.gder);
  pr.report(c.qder);
  pr.report(c.centroid);
  pr.report(c.qcentroid);
  return 0;
}

int cmd_tstar(Printer& pr, const std::string& alg, const std::string& omega,
              const std::string& output) {
  Algebra3 a = load_algebra(alg);
  Cochain w = resolve_omega(a, omega);
  Algebra3 t = tstar_extension(a, w);
  if (output.empty())
    throw InputError("tstar needs --output PATH for the constructed algebra");
  write_json_file(output, algebra_to_json(t));
  pr.wrote(output, std::to_string(t.dim()) + "-dimensional algebra");
  return 0;
}

int cmd_extension_analyze(Printer& pr, const std::string& bundle, Exec ex) {
  ExtensionData e = extension_from_json(load_json_file(bundle));
  CheckReport st = check_extension(e);
  pr.report(st);
  CheckReport ab = is_abelian(e);
  pr.report(ab);
  if (st.pass() && ab.pass()) {
    Section s = find_section(e);
    Representation r = induced_rep(e, s);
    pr.report(check_representation(e.A, r, ex));
    Cochain w = induced_cocycle(e, s);
    pr.report(is_1_cocycle(e.A, r, w, ex));
    pr.report(check_extension_cocycle(e.A, r, w, ex));
  }
  return pr.any_fail ? 1 : 0;
}

int cmd_deform_check(Printer& pr, const std::string& alg,
                     const std::string& omega, Exec ex) {
  Algebra3 a = load_algebra(alg);
  Cochain w = resolve_omega(a, omega);
  DeformationReport d = check_infinitesimal_deformation(a, w, ex);
  pr.report(d.cocycle);
  pr.report(d.structure);
  pr.report(d.consistency);
  pr.flags(d);
  return (d.is_deformation && d.consistency.pass()) ? 0 : 1;
}

int cmd_nijenhuis(Printer& pr, const std::string& alg, const std::string& op,
                  bool deform, const std::string& output, Exec ex) {
  Algebra3 a = load_algebra(alg);
  GradedOperator n = resolve_op(a, op);
  CheckReport nij = is_nijenhuis(a, n);
  pr.report(nij);
  if (!deform || !nij.pass()) return pr.any_fail ? 1 : 0;

  Cochain wn = nijenhuis_bracket(a, n);
  DeformationReport d = check_infinitesimal_deformation(a, wn, ex);
  pr.report(d.cocycle);
  pr.report(d.structure);
  pr.report(d.consistency);
  pr.report(check_trivial_deformation(a, n));
  if (!output.empty()) {
    write_json_file(output, cochain_to_json(wn));
    pr.wrote(output, "deformation cochain");
  }
  return pr.any_fail ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact verification and construction for graded ternary brackets with "
      "a bicharacter twist"};
  app.require_subcommand(1);

  std::string format = "human";
  int parallel = 1;
  std::string output;
  app.add_option("--format", format, "report style: human or records")
      ->check(CLI::IsMember({"human", "records"}));
  app.add_option("--parallel", parallel, "worker threads for exhaustive scans")
      ->check(CLI::PositiveNumber);
  app.add_option("--output", output, "path for files written by constructions");

  std::string alg, rep = "adjoint", omega = "zero", op = "zero", bundle;
  std::string degree, mode;
  int level = 1, k = 0;

  CLI::App* c_check = app.add_subcommand("check", "structural axioms");
  c_check->add_option("algebra", alg)->required();

  CLI::App* c_rep = app.add_subcommand("rep-check", "representation axioms");
  c_rep->add_option("algebra", alg)->required();
  c_rep->add_option("representation", rep)->required();

  CLI::App* c_coh = app.add_subcommand("cohomology", "cocycle space basis");
  c_coh->add_option("algebra", alg)->required();
  c_coh->add_option("--level", level)->check(CLI::Range(0, 1));
  c_coh->add_option("--rep", rep, "adjoint, coadjoint, or a file");
  c_coh->add_option("--degree", degree, "comma-separated coordinates");

  CLI::App* c_der = app.add_subcommand("derivations", "derivation space basis");
  c_der->add_option("algebra", alg)->required();
  c_der->add_option("--k", k, "twist power on the undisturbed slots");
  c_der->add_option("--degree", degree, "comma-separated coordinates");

  CLI::App* c_cls = app.add_subcommand(
      "classify", "generalized/quasi derivation and centroid membership");
  c_cls->add_option("algebra", alg)->required();
  c_cls->add_option("--op", op, "operator file or 'zero'")->required();
  c_cls->add_option("--k", k, "twist power on the undisturbed slots");

  CLI::App* c_tst = app.add_subcommand("tstar", "build the T*-extension");
  c_tst->add_option("algebra", alg)->required();
  c_tst->add_option("--omega", omega, "cochain file or 'zero'");

  CLI::App* c_ext =
      app.add_subcommand("extension-analyze", "abelian extension invariants");
  c_ext->add_option("bundle", bundle)->required();

  CLI::App* c_def =
      app.add_subcommand("deform-check", "infinitesimal deformation test");
  c_def->add_option("algebra", alg)->required();
  c_def->add_option("--omega", omega, "cochain file or 'zero'");

  CLI::App* c_nij =
      app.add_subcommand("nijenhuis", "Nijenhuis operator checks");
  c_nij->add_option("algebra", alg)->required();
  c_nij->add_option("--op", op, "operator file or 'zero'");
  c_nij->add_option("mode", mode, "'deform' runs the induced deformation")
      ->check(CLI::IsMember({"deform"}));

  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Printer pr{format == "records"};
  Exec ex{parallel};
  try {
    if (c_check->parsed()) return cmd_check(pr, alg, ex);
    if (c_rep->parsed()) return cmd_rep_check(pr, alg, rep, ex);
    if (c_coh->parsed()) return cmd_cohomology(pr, alg, level, rep, degree);
    if (c_der->parsed()) return cmd_derivations(pr, alg, k, degree);
    if (c_cls->parsed()) return cmd_classify(pr, alg, op, k);
    if (c_tst->parsed()) return cmd_tstar(pr, alg, omega, output);
    if (c_ext->parsed()) return cmd_extension_analyze(pr, bundle, ex);
    if (c_def->parsed()) return cmd_deform_check(pr, alg, omega, ex);
    if (c_nij->parsed())
      return cmd_nijenhuis(pr, alg, op, mode == "deform", output, ex);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
