// cdalg: exact workbench for finite-dimensional anticommutative algebras.
// Exit codes: 0 success, 1 domain error, 2 usage error.
#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <variant>

#include "cdalg/algebra_io.hpp"
#include "cdalg/catalog.hpp"
#include "cdalg/cohomology.hpp"
#include "cdalg/consequence.hpp"
#include "cdalg/operators.hpp"
#include "cdalg/varieties.hpp"

using ojson = nlohmann::ordered_json;
using namespace cdalg;

namespace {

struct BuildOpts {
  std::string field = "Q";
  std::string alpha = "1";
  int dim = 3;
  int generators = 2;
  int nilclass = 2;
};

void add_build_opts(CLI::App* cmd, BuildOpts& o) {
  cmd->add_option("--field", o.field, "Q or GF(p)")->capture_default_str();
  cmd->add_option("--alpha", o.alpha, "parameter of the b61 family")->capture_default_str();
  cmd->add_option("--dim", o.dim, "dimension of the abelian algebra")->capture_default_str();
  cmd->add_option("--generators", o.generators, "free algebra generators")->capture_default_str();
  cmd->add_option("--class", o.nilclass, "free algebra nilpotency class")->capture_default_str();
}

template <class F>
Algebra<F> build_catalog(const F& f, const std::string& name, const BuildOpts& o) {
  if (name == "abelian") return make_abelian(f, o.dim);
  if (name == "r2") return make_r2(f);
  if (name == "r2k") return make_r2_plus_line(f);
  if (name == "heisenberg3") return make_heisenberg3(f);
  if (name == "sl2") return make_sl2(f);
  if (name == "b61") return make_b61(f, f.parse(o.alpha));
  if (name == "malcev7") return make_malcev7(f);
  if (name == "free") return make_free_anticommutative(f, o.generators, o.nilclass);
  throw algebra_error("unknown catalog algebra '" + name + "'");
}

bool is_catalog_name(const std::string& name) {
  static const char* names[] = {"abelian", "r2",      "r2k",  "heisenberg3",
                                "sl2",     "b61", "malcev7", "free"};
  for (auto* n : names)
    if (name == n) return true;
  return false;
}

AnyAlgebra resolve_algebra(const std::string& name, const BuildOpts& o) {
  if (is_catalog_name(name)) {
    if (o.field == "Q") return build_catalog(FieldQ{}, name, o);
    if (o.field.rfind("GF(", 0) == 0 && o.field.back() == ')') {
      auto p = std::stoll(o.field.substr(3, o.field.size() - 4));
      return build_catalog(FieldFp(p), name, o);
    }
    throw algebra_error("unknown field '" + o.field + "' (use Q or GF(p))");
  }
  if (!std::filesystem::exists(name))
    throw algebra_error("unknown algebra '" + name + "': not a catalog name or a readable file");
  return load_algebra(name);
}

template <class F>
ojson check_json(const Algebra<F>& A) {
  auto rep = variety_report(A);
  ojson j;
  j["algebra"] = A.name();
  j["field"] = A.field().name();
  j["dim"] = A.dim();
  ojson vs, ws;
  for (Variety v : all_varieties) {
    const auto& r = rep.results.at(v);
    vs[variety_name(v)] = r.holds;
    if (r.witness) {
      ojson t = ojson::array();
      for (int i : r.witness->tuple) t.push_back(i + 1);
      ws[variety_name(v)] = t;
    }
  }
  j["varieties"] = vs;
  j["witnesses"] = ws;
  return j;
}

void print_check(const ojson& j) {
  std::cout << "algebra: " << j["algebra"].get<std::string>() << "\n"
            << "field: " << j["field"].get<std::string>() << "\n"
            << "dim: " << j["dim"].get<int>() << "\n";
  for (const auto& [name, holds] : j["varieties"].items()) {
    std::cout << "  " << name << std::string(name.size() < 14 ? 14 - name.size() : 1, ' ')
              << (holds.get<bool>() ? "yes" : "no");
    if (j["witnesses"].contains(name)) {
      std::cout << "   fails at (";
      bool first = true;
      for (const auto& i : j["witnesses"][name]) {
        if (!first) std::cout << ",";
        std::cout << "e" << i.get<int>();
        first = false;
      }
      std::cout << ")";
    }
    std::cout << "\n";
  }
}

template <class F>
int run_check(const Algebra<F>& A, bool json) {
  auto j = check_json(A);
  if (json)
    std::cout << j.dump(2) << "\n";
  else
    print_check(j);
  return 0;
}

template <class F>
int run_ops(const Algebra<F>& A, bool json) {
  const F& f = A.field();
  auto chk = lie_center_operator_check(A);
  ojson j;
  j["algebra"] = A.name();
  j["field"] = f.name();
  j["dim"] = A.dim();
  ojson dims;
  dims["center"] = A.center().dim();
  dims["lie-center"] = A.lie_center().dim();
  dims["derivations"] = derivation_algebra(A).dim();
  dims["mult-algebra"] = lie_multiplication_algebra(A).dim();
  dims["inner-derivations"] = inner_derivations(A).dim();
  dims["r-cap-der"] = chk.r_cap_der;
  j["dims"] = dims;
  ojson lemma;
  lemma["lz-mod-z"] = chk.lz_mod_z;
  lemma["r-cap-der"] = chk.r_cap_der;
  lemma["equal"] = chk.lz_mod_z == chk.r_cap_der;
  j["center-operator-check"] = lemma;
  if (json) {
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "algebra: " << A.name() << "\nfield: " << f.name() << "\ndim: " << A.dim() << "\n";
  for (const auto& [k, v] : j["dims"].items())
    std::cout << "  " << k << ": " << v.template get<int>() << "\n";
  std::cout << "  center-operator-check: dim(LZ/Z) = " << chk.lz_mod_z
            << ", dim(R cap Der) = " << chk.r_cap_der << ", "
            << (chk.lz_mod_z == chk.r_cap_der ? "equal" : "NOT equal") << "\n";
  return 0;
}

template <class F>
int run_cohomology(const Algebra<F>& A, const std::string& theory, const std::string& coeff,
                   int degree, bool json) {
  const F& f = A.field();
  CohomologyTheory th;
  if (theory == "cd")
    th = CohomologyTheory::CD_even;
  else if (theory == "ce")
    th = CohomologyTheory::ChevalleyEilenberg;
  else
    th = CohomologyTheory::AlmostLie;
  if (th == CohomologyTheory::ChevalleyEilenberg && !satisfies(A, Variety::Lie).holds)
    throw std::domain_error("the classical theory needs a Lie algebra; '" + A.name() + "' is not");
  CDModule<F> mod;
  if (coeff == "trivial") {
    mod = trivial_module(A, 1);
  } else {
    if (f.characteristic() != 0)
      throw std::domain_error("adjoint coefficients are supported in characteristic 0 only");
    mod = adjoint_module(A);
  }
  auto z = cocycle_space(A, mod, th, degree);
  auto b = coboundary_space(A, mod, th, degree);
  int h = z.quotient_dim(f, b);
  ojson j;
  j["algebra"] = A.name();
  j["field"] = f.name();
  j["theory"] = theory;
  j["coefficients"] = coeff;
  j["degree"] = degree;
  ojson dims;
  dims["cocycles"] = z.dim();
  dims["coboundaries"] = b.dim();
  dims["cohomology"] = h;
  j["dims"] = dims;
  if (json) {
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "algebra: " << A.name() << "\ntheory: " << theory << "\ncoefficients: " << coeff
            << "\ndegree: " << degree << "\n"
            << "  cocycles (Z): " << z.dim() << "\n  coboundaries (B): " << b.dim()
            << "\n  cohomology (H): " << h << "\n";
  return 0;
}

template <class F>
int run_extend(const Algebra<F>& A, const std::string& cocycle_path, const std::string& out_path,
               bool json) {
  const F& f = A.field();
  auto phi = load_cochain(f, cocycle_path, A.dim());
  auto ext = central_extension(A, phi);
  if (!out_path.empty()) save_algebra(ext.algebra, out_path);
  if (!json)
    std::cout << "extension: " << ext.algebra.name() << " (dim " << ext.base_dim << " + "
              << ext.fiber_dim << ")\n";
  return run_check(ext.algebra, json);
}

FreeElement<FieldQ> resolve_identity(const FieldQ& f, const std::string& name) {
  for (Variety v : all_varieties)
    if (name == variety_name(v)) return variety_identity(f, v).element;
  if (!std::filesystem::exists(name))
    throw identity_error("unknown identity '" + name + "': not a variety name or a readable file");
  std::ifstream in(name);
  std::string line, src;
  while (std::getline(in, line)) {
    auto h = line.find('#');
    if (h != std::string::npos) line = line.substr(0, h);
    bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
    if (!blank) {
      src = line;
      break;
    }
  }
  if (src.empty()) throw identity_error("identity file '" + name + "' is empty");
  return parse_identity(f, src).element;
}

int run_consequence(const std::vector<std::string>& assume, const std::string& target) {
  FieldQ f;
  std::vector<FreeElement<FieldQ>> gens;
  for (const auto& a : assume) gens.push_back(resolve_identity(f, a));
  auto tgt = resolve_identity(f, target);
  auto res = is_consequence(f, gens, tgt);
  std::cout << "target: " << target << "\n"
            << "variables: " << res.space.target_vars.size() << "\n"
            << "monomial basis: " << res.space.basis.size() << "\n"
            << "consequence space dim: " << res.space.space.dim() << "\n";
  if (res.derivable) {
    std::cout << "derivable\ncertificate: [";
    bool first = true;
    for (const auto& c : *res.certificate) {
      if (!first) std::cout << ", ";
      std::cout << f.str(c);
      first = false;
    }
    std::cout << "]\n";
  } else {
    std::cout << "not derivable at this degree\n";
  }
  return 0;
}

void print_catalog() {
  std::cout << "catalog algebras (default field Q; pass --field GF(p) for prime fields, p >= 5):\n"
               "  abelian --dim n     zero multiplication\n"
               "  r2                  e1 e2 = e1\n"
               "  r2k                 r2 plus a central line\n"
               "  heisenberg3         e1 e2 = e3\n"
               "  sl2                 e1 e2 = 2 e2, e1 e3 = -2 e3, e2 e3 = e1\n"
               "  b61 --alpha a       e1 e2 = e4, e1 e3 = e5, e2 e3 = a e6, e4 e5 = e6\n"
               "  malcev7             imaginary octonions under the commutator\n"
               "  free --generators g --class c\n"
               "                      free nilpotent anticommutative algebra\n"
               "any other name is read as an algebra file path\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for finite-dimensional anticommutative algebras"};
  app.require_subcommand(1);

  auto* c_catalog = app.add_subcommand("catalog", "list the built-in algebras");

  std::string alg;
  bool json = false;
  BuildOpts bo;
  auto* c_check = app.add_subcommand("check", "variety membership report");
  c_check->add_option("alg", alg, "catalog name or algebra file")->required();
  c_check->add_flag("--json", json, "machine-readable output");
  add_build_opts(c_check, bo);

  auto* c_ops = app.add_subcommand("ops", "operator structure dimensions");
  c_ops->add_option("alg", alg, "catalog name or algebra file")->required();
  c_ops->add_flag("--json", json, "machine-readable output");
  add_build_opts(c_ops, bo);

  std::string theory = "cd", coeff = "trivial";
  int degree = 2;
  auto* c_coh = app.add_subcommand("cohomology", "cocycle, coboundary and quotient dimensions");
  c_coh->add_option("alg", alg, "catalog name or algebra file")->required();
  c_coh->add_option("--theory", theory, "cd, ce or almost-lie")
      ->check(CLI::IsMember({"cd", "ce", "almost-lie"}))
      ->capture_default_str();
  c_coh->add_option("--coeff", coeff, "trivial or adjoint")
      ->check(CLI::IsMember({"trivial", "adjoint"}))
      ->capture_default_str();
  c_coh->add_option("--degree", degree, "cochain degree")->capture_default_str();
  c_coh->add_flag("--json", json, "machine-readable output");
  add_build_opts(c_coh, bo);

  std::string cocycle_path, out_path;
  auto* c_ext = app.add_subcommand("extend", "central extension by a 2-cocycle file");
  c_ext->add_option("alg", alg, "catalog name or algebra file")->required();
  c_ext->add_option("--cocycle", cocycle_path, "file of 'i j value' or 'i j k value' lines")
      ->required();
  c_ext->add_option("--out", out_path, "write the extension as an algebra file");
  c_ext->add_flag("--json", json, "machine-readable output");
  add_build_opts(c_ext, bo);

  std::vector<std::string> assume;
  std::string target;
  auto* c_cons = app.add_subcommand("consequence", "identity implication with certificate");
  c_cons->add_option("--assume", assume, "identities assumed (variety names or files)")
      ->required()
      ->delimiter(',');
  c_cons->add_option("--target", target, "identity to derive")->required();

  auto* c_free = app.add_subcommand("free", "emit a free nilpotent algebra file");
  c_free->add_option("--generators", bo.generators, "number of generators")->required();
  c_free->add_option("--class", bo.nilclass, "nilpotency class")->required();
  c_free->add_option("--field", bo.field, "Q or GF(p)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (c_catalog->parsed()) {
      print_catalog();
      return 0;
    }
    if (c_cons->parsed()) return run_consequence(assume, target);
    if (c_free->parsed()) {
      auto any = resolve_algebra("free", bo);
      std::visit([](const auto& A) { std::cout << save_algebra_string(A); }, any);
      return 0;
    }
    auto any = resolve_algebra(alg, bo);
    return std::visit(
        [&](const auto& A) -> int {
          if (c_check->parsed()) return run_check(A, json);
          if (c_ops->parsed()) return run_ops(A, json);
          if (c_coh->parsed()) return run_cohomology(A, theory, coeff, degree, json);
          if (c_ext->parsed()) return run_extend(A, cocycle_path, out_path, json);
          return 2;
        },
        any);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
