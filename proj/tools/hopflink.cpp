// Command-line front end: hopflink <command> <algebra> [--json] [--field-order n]

#include <iostream>

#include "CLI11.hpp"
#include "hopflink/commands.hpp"
#include "hopflink/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Link-indecomposable components of finite-dimensional Hopf algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  hopf::CommandOptions opts;
  app.add_flag("--json", json, "print the report as JSON");
  app.add_option("--field-order", opts.field_order, "work over Q(zeta_n)")->check(CLI::PositiveNumber);

  std::string spec;
  std::string dot;
  const char* help =
      "structure-constant JSON file or generator spec (sweedler, group:Z4, dual-group:S3, "
      "taft:3:zeta3, tensor(a,b), dual(a), op(a), cop(a), smash:H12)";
  const std::pair<const char*, const char*> commands[] = {
      {"check", "verify the coalgebra, bialgebra and Hopf axioms"},
      {"coradical", "coradical, simple subcoalgebras and coradical filtration"},
      {"quiver", "link quiver of the simple subcoalgebras"},
      {"components", "link-indecomposable components"},
      {"verify-dcp", "component identities when the coradical is a subalgebra"},
      {"smash", "smash coproduct decomposition of a smash:NAME fixture"},
  };
  for (const auto& [name, about] : commands) {
    auto* sub = app.add_subcommand(name, about);
    sub->add_option("algebra", spec, help)->required();
    if (std::string(name) == "quiver") sub->add_option("--dot", dot, "write the quiver as DOT");
  }
  auto* corpus = app.add_subcommand("corpus", "write the fixture corpus");
  bool regen = false;
  corpus->add_flag("--regen", regen, "regenerate and re-verify every fixture")->required();
  corpus->add_option("--dir", opts.corpus_dir, "output directory");

  CLI11_PARSE(app, argc, argv);
  const std::string command = app.get_subcommands().front()->get_name();
  if (!dot.empty()) opts.dot = dot;

  try {
    auto report = hopf::run_command(command, spec, opts);
    std::cout << (json ? report.to_json() : report.to_text());
    return report.any_failed() ? 1 : 0;
  } catch (const hopf::NonSplitField& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const hopf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
