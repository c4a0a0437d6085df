#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "labres/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"labres: resolution prover for dynamic sequents with unresolved pronouns"};
  app.require_subcommand(1);

  labres::RunConfig cfg;
  std::string trace = "none";

  auto add_common = [&](CLI::App* sub, bool needs_input) {
    if (needs_input)
      sub->add_option("input", cfg.input_path, "sequent file")->required();
    sub->add_option("--depth", cfg.max_depth, "maximum resolution steps per derivation");
    sub->add_option("--steps", cfg.max_steps, "total step budget");
    sub->add_flag("--nonempty-domain", cfg.nonempty_domain,
                  "add witness clauses for unary predicates with only negative occurrences");
  };

  CLI::App* annotate = app.add_subcommand("annotate", "print the annotated sequent");
  add_common(annotate, true);
  CLI::App* clausify = app.add_subcommand("clausify", "print the clause set");
  add_common(clausify, true);
  CLI::App* prove = app.add_subcommand("prove", "search for a refutation");
  add_common(prove, true);
  prove->add_flag("--all-bindings", cfg.all_bindings, "also enumerate every binding");
  prove->add_option("--trace", trace, "trace format")
      ->check(CLI::IsMember({"text", "records", "none"}));
  CLI::App* bindings = app.add_subcommand("bindings", "enumerate all successful bindings");
  add_common(bindings, true);
  CLI::App* oracle = app.add_subcommand("oracle", "compare against the brute-force oracle");
  add_common(oracle, true);
  CLI::App* bench = app.add_subcommand("bench", "disambiguation explosion benchmark");
  add_common(bench, false);
  bench->add_option("-k,--indefinites", cfg.bench_k, "number of indefinites")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  cfg.trace = trace == "text"      ? labres::TraceFormat::Text
              : trace == "records" ? labres::TraceFormat::Records
                                   : labres::TraceFormat::None;
  return labres::run(cfg, std::cout, std::cerr);
}
