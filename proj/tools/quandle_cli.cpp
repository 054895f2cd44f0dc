// Command-line front end: validation, enumeration, congruence analysis,
// quotients, homomorphisms, weighted-average classification and demos.
// Every subcommand prints one JSON document on stdout.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "quandle/commands.hpp"

namespace {

void render(const quandle::cli::command_result& r, bool pretty) {
  std::cout << r.to_json().dump(pretty ? 2 : -1) << '\n';
  if (pretty) {
    for (const auto& d : r.diagnostics) std::cerr << "note: " << d << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  using namespace quandle::cli;

  CLI::App app{"Racks, quandles and their congruences"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Indented JSON and diagnostics on stderr");

  std::optional<command_result> result;

  std::string path;
  auto* validate = app.add_subcommand("validate", "Check the rack and quandle axioms of a .rack table");
  validate->add_option("file", path, ".rack file")->required();
  validate->callback([&] { result = cmd_validate(path); });

  auto* inverse = app.add_subcommand("inverse", "Print the inverse operation table");
  inverse->add_option("file", path, ".rack file")->required();
  inverse->callback([&] { result = cmd_inverse(path); });

  std::size_t order = 0;
  bool quandles_only = false;
  bool up_to_iso = false;
  auto* enumerate = app.add_subcommand("enumerate", "List all racks of a given order (at most 5)");
  enumerate->add_option("order", order, "Order n")->required();
  enumerate->add_flag("--quandles", quandles_only, "Only quandles");
  enumerate->add_flag("--up-to-iso", up_to_iso, "One canonical representative per isomorphism class");
  enumerate->callback([&] { result = cmd_enumerate(order, quandles_only, up_to_iso); });

  std::optional<std::string> partition_literal;
  auto* congruences = app.add_subcommand("congruences", "Classify every partition (or one, with --partition)");
  congruences->add_option("file", path, ".rack file")->required();
  congruences->add_option("--partition", partition_literal, "Partition literal, e.g. \"0,2|1,3\"");
  congruences->callback([&] { result = cmd_congruences(path, partition_literal); });

  std::string partition_text;
  auto* quotient = app.add_subcommand("quotient", "Quotient rack by a full congruence");
  quotient->add_option("file", path, ".rack file")->required();
  quotient->add_option("--partition", partition_text, "Partition literal")->required();
  quotient->callback([&] { result = cmd_quotient(path, partition_text); });

  std::string subset;
  auto* subrack = app.add_subcommand("subrack", "Test closure of a subset under both operations");
  subrack->add_option("file", path, ".rack file")->required();
  subrack->add_option("--subset", subset, "Comma-separated elements")->required();
  subrack->callback([&] { result = cmd_subrack(path, subset); });

  std::string codomain;
  std::string map;
  auto* hom = app.add_subcommand("hom-check", "Test whether a map is a rack homomorphism");
  hom->add_option("domain", path, "Domain .rack file")->required();
  hom->add_option("codomain", codomain, "Codomain .rack file")->required();
  hom->add_option("--map", map, "Images of 0..n-1, comma-separated")->required();
  hom->callback([&] { result = cmd_hom_check(path, codomain, map); });

  auto* iso = app.add_subcommand("iso-check", "Check the first isomorphism theorem for a homomorphism");
  iso->add_option("domain", path, "Domain .rack file")->required();
  iso->add_option("codomain", codomain, "Codomain .rack file")->required();
  iso->add_option("--map", map, "Images of 0..n-1, comma-separated")->required();
  iso->callback([&] { result = cmd_iso_check(path, codomain, map); });

  std::string tau;
  tau_options topt;
  auto* classify = app.add_subcommand("classify-tau", "Congruence classification of the weighted average quandle Q_tau");
  classify->add_option("tau", tau, "Weight as p/q")->required();
  classify->add_option("--subgroup", topt.subgroup, "Also classify this subgroup: zero, all or g:m");
  classify->add_option("--samples", topt.samples, "Samples per sampled check")->capture_default_str();
  classify->add_option("--seed", topt.seed, "Random seed")->capture_default_str();
  classify->callback([&] { result = cmd_classify_tau(tau, topt); });

  std::string demo_name;
  quandle::demo_options dopt;
  auto* demo = app.add_subcommand("demo", "Run a witness demo: b_ell, b_quandle, b0, alexander");
  demo->add_option("name", demo_name, "Demo name")->required();
  demo->add_option("--samples", dopt.samples, "Samples per sampled check")->capture_default_str();
  demo->add_option("--seed", dopt.seed, "Random seed")->capture_default_str();
  demo->callback([&] { result = cmd_demo(demo_name, dopt); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  if (!result) return 1;
  render(*result, pretty);
  return result->exit_code();
}
