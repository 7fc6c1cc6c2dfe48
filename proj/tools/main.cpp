#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "suites.hpp"

namespace {

using kdef::cli::Format;
using kdef::cli::Report;
using kdef::cli::UsageError;

int half_arg(const std::string& text, const char* flag) {
  try {
    return kdef::parse_half(text);
  } catch (const std::exception&) {
    throw UsageError(std::string(flag) + " expects an integer or half-integer, got " + text);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of contact superalgebra cohomology and deformations"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_help_all_flag("--help-all");

  std::string format;
  if (const char* env = std::getenv("KDEF_FORMAT")) format = env;
  if (format.empty()) format = "json";
  bool timing = false;
  app.add_option("--format", format, "Output format (default from KDEF_FORMAT, else json)")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--timing", timing, "Include wall time per check");

  std::optional<Report> report;
  auto run = [&](auto f) { return [&, f] { report = f(); }; };

  auto* verify = app.add_subcommand("verify", "Verify algebraic identities")->require_subcommand(1);

  int jacobi_degree = 6, rep_degree = 5;
  auto* algebra = verify->add_subcommand("algebra", "Super-Jacobi, representation law, parameter algebra");
  algebra->add_option("--degree", jacobi_degree, "Maximal x-degree for the Jacobi sweep")->check(CLI::Range(0, 12));
  algebra->add_option("--rep-degree", rep_degree, "Maximal degree for the representation law")
      ->check(CLI::Range(0, 10));
  algebra->callback(run([&] { return kdef::cli::verify_algebra(jacobi_degree, rep_degree); }));

  std::string kmax = "13/2";
  auto* trans = verify->add_subcommand("transvectants", "Transvectant recurrence and supertransvectant invariance");
  int trans_bump = 0;
  trans->add_option("--kmax", kmax, "Largest supertransvectant order (half-integer)");
  trans->add_option("--bump", trans_bump, "Raise the evaluation degree bound")->check(CLI::Range(0, 6));
  trans->callback(run([&] {
    int k2 = half_arg(kmax, "--kmax");
    if (k2 < 0 || k2 > 20) throw UsageError("--kmax must lie in [0, 10]");
    return kdef::cli::verify_transvectants(k2, trans_bump);
  }));

  std::string which_cocycle = "all";
  auto* cocycles = verify->add_subcommand("cocycles", "Cocycle catalog checks");
  cocycles->add_option("--which", which_cocycle, "Catalog name or all");
  cocycles->callback(run([&] { return kdef::cli::verify_cocycles(which_cocycle); }));

  std::string which_lemma = "all";
  int lemma_bump = 0;
  auto* lemmas = verify->add_subcommand("lemmas", "Coboundary identities and independence systems");
  lemmas->add_option("--which", which_lemma, "th2, benfraj1..benfraj5, lth2 or all");
  lemmas->add_option("--bump", lemma_bump, "Raise the evaluation degree bound")->check(CLI::Range(0, 6));
  lemmas->callback(run([&] { return kdef::cli::verify_lemmas(which_lemma, lemma_bump); }));

  auto* coh = app.add_subcommand("cohomology", "Second cohomology calculus")->require_subcommand(1);
  std::string omega, lambda = "l";
  int order_bound = 12, coh_bump = 0;
  auto* solve = coh->add_subcommand("solve", "Solve delta b = omega for a cataloged 2-cocycle");
  solve->add_option("--omega", omega, "2-cocycle name, e.g. B[l,l+5]")->required();
  solve->add_option("--order-bound", order_bound, "Maximal order of the primitive")->check(CLI::Range(0, 40));
  solve->add_option("--lambda", lambda, "Weight: l for generic, or a scalar such as -9/2");
  solve->add_option("--bump", coh_bump, "Raise the evaluation degree bound")->check(CLI::Range(0, 6));
  solve->callback(run([&] { return kdef::cli::cohomology_solve(omega, order_bound, lambda, coh_bump); }));

  auto* deform = app.add_subcommand("deform", "Maurer-Cartan deformation engine")->require_subcommand(1);
  std::string n_text;
  int max_order = 5, t_degree = 8, deform_bump = 0;
  std::string assignment;
  auto* conds = deform->add_subcommand("conditions", "Integrability conditions");
  conds->add_option("--n", n_text, "Half-integer n")->required();
  conds->add_option("--max-order", max_order, "Highest order")->check(CLI::Range(2, 8));
  conds->callback(run([&] { return kdef::cli::deform_conditions(half_arg(n_text, "--n"), max_order); }));
  auto* enumerate = deform->add_subcommand("enumerate", "Maximal families of the condition ideal");
  enumerate->add_option("--n", n_text, "Half-integer n")->required();
  enumerate->add_option("--max-order", max_order, "Highest order")->check(CLI::Range(2, 8));
  enumerate->callback(run([&] { return kdef::cli::deform_enumerate(half_arg(n_text, "--n"), max_order); }));
  auto* check = deform->add_subcommand("check", "Homomorphism check of a parameter assignment");
  check->add_option("--n", n_text, "Half-integer n")->required();
  check->add_option("--assignment", assignment, "JSON map from parameter name to scalar")->required();
  check->add_option("--t-degree", t_degree, "Parameter degree bound")->check(CLI::Range(1, 16));
  check->add_option("--bump", deform_bump, "Raise the evaluation degree bound")->check(CLI::Range(0, 6));
  check->callback(run([&] {
    return kdef::cli::deform_check(half_arg(n_text, "--n"), assignment, t_degree, deform_bump);
  }));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  if (format != "json" && format != "text") {
    std::cerr << "usage error: KDEF_FORMAT must be json or text\n";
    return 2;
  }
  if (!report) return 2;
  report->timing = timing;
  std::cout << report->render(format == "text" ? Format::Text : Format::Json);
  return report->exit_code();
}
