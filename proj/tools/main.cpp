#include <iostream>

#include "CLI11.hpp"
#include "aba/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Assumption-based argumentation with preferences: deductions, attack "
               "reversal, extensions, axiom and principle reports, comparison views"};
  app.require_subcommand(1);

  aba::RunConfig config;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("input", config.input, "input file")->required();
    cmd->add_option("--format", config.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("-o,--output", config.output, "write to file instead of stdout");
    cmd->add_option("--assumption-cap", config.limits.assumption_cap,
                    "max assumptions for exact enumeration");
    cmd->add_option("--support-cap", config.limits.support_cap, "max supports per sentence");
    cmd->add_option("--argument-cap", config.limits.argument_cap, "max structured arguments");
  };

  auto* check = app.add_subcommand("check", "parse a framework and report basic shape");
  add_common(check);

  auto* semantics = app.add_subcommand("semantics", "enumerate extensions");
  add_common(semantics);
  semantics->add_option("--semantics", config.semantics,
                        "admissible|preferred|complete|stable|well-founded|grounded|ideal");
  semantics->add_option("--mode", config.mode, "plain|plus")
      ->check(CLI::IsMember({"plain", "plus"}));

  auto* axioms = app.add_subcommand("axioms", "check contraposition, weak contraposition, "
                                              "consistency and negation");
  add_common(axioms);

  auto* principles = app.add_subcommand("principles", "check preference-handling principles "
                                                      "and rationality postulates");
  add_common(principles);
  principles->add_option("--semantics", config.semantics, "semantics the principles quantify over");

  auto* translate = app.add_subcommand("translate-paf", "render a PAF as a framework");
  add_common(translate);

  auto* compare = app.add_subcommand("compare", "side-by-side extension tables across views");
  add_common(compare);
  compare->add_option("--semantics", config.semantics, "semantics for every view");

  auto* dot = app.add_subcommand("dot", "attack graph in DOT format");
  add_common(dot);
  dot->add_option("--scope", config.scope, "supports|all")
      ->check(CLI::IsMember({"supports", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : aba::exit_usage;
  }

  config.subcommand = app.get_subcommands().front()->get_name();
  return aba::run(config, std::cout, std::cerr);
}
