#include "liecx/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "liecx/constructions.hpp"
#include "liecx/json_io.hpp"
#include "liecx/polynomial_system.hpp"
#include "liecx/search.hpp"

namespace liecx {

namespace {

Rational parse_theta(const std::string& s) {
  auto r = Rational::parse(s);
  if (!r) throw InvalidInput("--theta expects a rational like 2 or 1/2");
  return *r;
}

BianchiSpec make_spec(int type, const std::string& theta) {
  BianchiSpec spec;
  spec.type_id = type;
  if (!theta.empty()) spec.theta = parse_theta(theta);
  return spec;
}

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open file: " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

int threads_from_env() {
  const char* env = std::getenv("LIE_CX_THREADS");
  if (!env) return 1;
  int v = std::atoi(env);
  return v >= 1 ? v : 1;
}

void print_report_text(const IntegrabilityReport& report, std::ostream& out) {
  out << (report.integrable ? "integrable: yes" : "integrable: no") << "\n";
  out << "max residual: " << report.max_residual_norm.str() << "\n";
  if (!report.integrable) {
    auto p = report.first_nonzero();
    if (p) out << "first nonzero pair: (" << p->first + 1 << ", " << p->second + 1 << ")\n";
  }
}

int run_catalog(std::ostream& out) {
  out << "3-dimensional real Lie algebra types (basis e1, e2, e3):\n";
  out << "  1: abelian\n";
  out << "  2: [e1,e2] = e1\n";
  out << "  3: [e1,e2] = e3\n";
  out << "  4: [e1,e3] = e1, [e2,e3] = theta e2          (theta != 0)\n";
  out << "  5: [e1,e3] = e1, [e2,e3] = e1 + e2\n";
  out << "  6: [e1,e3] = theta e1 - e2, [e2,e3] = e1 + theta e2  (theta != 0)\n";
  out << "  7: [e1,e3] = e2, [e2,e3] = e1, [e1,e2] = e3\n";
  out << "  8: [e1,e3] = -e2, [e2,e3] = e1, [e1,e2] = e3\n";
  out << "Products g x g of types 1, 2, 3, 6, 7, 8 and 4 (theta = 1) carry an\n";
  out << "integrable complex structure; type 5 and type 4 (theta != 1) do not.\n";
  return 0;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact toolkit for complex structures on product Lie algebras"};
  app.require_subcommand(1);

  auto* cat = app.add_subcommand("catalog", "list the 3-dimensional bracket types");

  int type = 0;
  std::string theta;
  auto* construct = app.add_subcommand("construct", "build g x g and its integrable structure");
  construct->add_option("--type", type, "algebra type 1..8")->required();
  construct->add_option("--theta", theta, "parameter for types 4 and 6, e.g. 1/2");

  std::string algebra_file, j_file, format = "text";
  auto* verify = app.add_subcommand("verify", "check a candidate structure exactly");
  verify->add_option("--algebra", algebra_file, "algebra JSON file")->required();
  verify->add_option("--j", j_file, "endomorphism JSON file")->required();
  verify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  int starts = 200, max_iters = 500, threads = threads_from_env();
  std::uint64_t seed = 42;
  double tol = 1e-12;
  bool no_polish = false;
  auto* search = app.add_subcommand("search", "multistart least-squares search for a structure");
  search->add_option("--type", type, "algebra type 1..8")->required();
  search->add_option("--theta", theta, "parameter for types 4 and 6");
  search->add_option("--starts", starts, "number of random starts");
  search->add_option("--seed", seed, "rng seed (default 42)");
  search->add_option("--tol", tol, "convergence tolerance on the residual");
  search->add_option("--max-iters", max_iters, "iteration cap per start");
  search->add_option("--threads", threads, "worker threads (or LIE_CX_THREADS)");
  search->add_flag("--no-polish", no_polish, "skip exact snapping of converged starts");

  bool reduce = false;
  std::string emit_format = "text";
  auto* emit = app.add_subcommand("emit", "emit the polynomial integrability system for g x g");
  emit->add_option("--type", type, "algebra type 1..8")->required();
  emit->add_option("--theta", theta, "parameter for types 4 and 6");
  emit->add_flag("--reduce", reduce, "keep only first-factor Nijenhuis equations");
  emit->add_option("--format", emit_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  int son_n = 0;
  bool son_verify = false;
  auto* son = app.add_subcommand("son", "build o(n) x o(n) with its block pairing");
  son->add_option("--n", son_n, "n >= 2")->required();
  son->add_flag("--verify", son_verify, "run the exact integrability check");

  std::vector<std::string> argv = args;
  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (cat->parsed()) return run_catalog(out);

    if (construct->parsed()) {
      StandardStructure s = standard_structure(make_spec(type, theta));
      nlohmann::json j;
      j["algebra"] = algebra_to_json(s.algebra);
      j["structure"] = endomorphism_to_json(s.structure);
      out << j.dump(2) << "\n";
      return 0;
    }

    if (verify->parsed()) {
      LieAlgebra g = algebra_from_json(load_json(algebra_file));
      Endomorphism j = endomorphism_from_json(load_json(j_file));
      if (j.dim() != g.dim()) {
        err << "error: endomorphism dimension does not match the algebra\n";
        return 2;
      }
      if (!is_complex_structure(j)) {
        out << "not a complex structure (J^2 != -id)\n";
        return 1;
      }
      IntegrabilityReport report = is_integrable(g, j);
      if (format == "json")
        out << report_to_json(report).dump(2) << "\n";
      else
        print_report_text(report, out);
      return report.integrable ? 0 : 1;
    }

    if (search->parsed()) {
      BianchiSpec spec = make_spec(type, theta);
      LieAlgebra g = bianchi(spec);
      LieAlgebra product = direct_product(g, g);
      SearchConfig cfg;
      cfg.starts = starts;
      cfg.seed = seed;
      cfg.max_iters = max_iters;
      cfg.tol = tol;
      cfg.threads = threads;
      cfg.polish = !no_polish;
      SearchResult result = numeric_search(product, cfg);
      nlohmann::json j = search_result_to_json(result);
      auto certified = rationalize_and_certify(product, result.best_matrix, 1000000);
      j["best_certified"] = certified.has_value();
      if (certified) j["certified_structure"] = endomorphism_to_json(*certified);
      out << j.dump(2) << "\n";
      return 0;
    }

    if (emit->parsed()) {
      BianchiSpec spec = make_spec(type, theta);
      LieAlgebra g = bianchi(spec);
      LieAlgebra product = direct_product(g, g);
      PolynomialSystem sys = emit_polynomial_system(product, {}, reduce);
      if (emit_format == "json")
        out << system_to_json(sys).dump(2) << "\n";
      else
        out << sys.to_text();
      return 0;
    }

    if (son->parsed()) {
      LieAlgebra o = orthogonal_algebra(son_n);
      LieAlgebra product = direct_product(o, o);
      Endomorphism pairing = orthogonal_pairing(son_n);
      if (son_verify) {
        IntegrabilityReport report = is_integrable(product, pairing);
        print_report_text(report, out);
        return report.integrable ? 0 : 1;
      }
      nlohmann::json j;
      j["algebra"] = algebra_to_json(product);
      j["structure"] = endomorphism_to_json(pairing);
      out << j.dump(2) << "\n";
      return 0;
    }
  } catch (const NoKnownStructure& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: bad JSON input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace liecx
