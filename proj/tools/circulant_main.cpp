#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "cli.hpp"

namespace {

void add_common(CLI::App *cmd, circulant::cli::RunConfig &config)
{
  cmd->add_option("--cap", config.element_cap, "Element cap for group enumeration")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--vertex-cap", config.vertex_cap, "Vertex cap for automorphism search")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--format", config.format, "Output format: text, json or dot")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, circulant::cli::Format>{{"text", circulant::cli::Format::text},
                                                        {"json", circulant::cli::Format::json},
                                                        {"dot", circulant::cli::Format::dot}},
          CLI::ignore_case));
  cmd->add_flag("--strip-loops", config.strip_loops, "Remove 0 from the connection set");
  cmd->add_flag("--strict", config.strict, "Exit with 3 when a cap is hit");
  cmd->add_option("--seed", config.seed, "Seed for randomized commands");
}

} // namespace

int main(int argc, char **argv)
{
  circulant::cli::RunConfig config;
  CLI::App app{"Which abelian groups is a circulant digraph a Cayley digraph of"};
  app.require_subcommand(1);

  auto instance_cmd = [&](char const *name, char const *help) {
    auto *cmd = app.add_subcommand(name, help);
    cmd->add_option("instance", config.instance, "Connection set, e.g. \"n=45; S=0,1,15,30\"")
        ->required();
    add_common(cmd, config);
    return cmd;
  };

  instance_cmd("analyze", "Minimal and realizable abelian groups from the coset conditions");
  auto *decompose = instance_cmd("decompose", "Valid levels and layer sizes per prime");
  decompose->add_option("--prime", config.prime, "Only report this prime");
  instance_cmd("witness", "Product-type wreath towers, one per prime, as edge lists");
  instance_cmd("verify", "Cross-check the analysis with a brute-force automorphism oracle");

  auto *generate = app.add_subcommand("generate", "Circulant connection set of a wreath tower");
  generate->add_option("--p", config.p, "Prime")->required();
  generate->add_option("--layers", config.layers, "Layer exponents k1,k2,... outermost first")
      ->required()
      ->delimiter(',');
  add_common(generate, config);

  auto *poset = app.add_subcommand("poset", "Abelian groups of order n and their cover relations");
  poset->add_option("n", config.n, "Group order")->required();
  add_common(poset, config);

  auto *sample = app.add_subcommand("sample", "Random connection sets as corpus lines");
  sample->add_option("--n", config.n, "Order")->required();
  sample->add_option("--count", config.count, "Number of instances");
  add_common(sample, config);

  auto *batch = app.add_subcommand("batch", "Verify every instance of a corpus file");
  batch->add_option("corpus", config.corpus, "Corpus file, one instance per line")->required();
  add_common(batch, config);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    return app.exit(e) == 0 ? circulant::cli::ok : circulant::cli::usage_error;
  }
  config.command = app.get_subcommands().front()->get_name();
  return circulant::cli::run(config, std::cout, std::cerr);
}
