#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "covhom/cli.hpp"

int main(int argc, char **argv) {
  covhom::RunConfig cfg;
  if (const char *env = std::getenv("COVHOM_MAX_ORDER")) cfg.max_order = atol(env);

  CLI::App app{"exact homology of abelian covers of the punctured sphere"};
  app.require_subcommand(1);

  auto add_spec = [&](CLI::App *c) {
    c->add_option("--s", cfg.s, "number of branch points");
    c->add_option("--k", cfg.k, "cover exponent");
    c->add_option("--kind", cfg.kind, "full | cyclic")->default_str("full");
    c->add_option("--format", cfg.format, "json | csv | text")->default_str("json");
  };

  add_spec(app.add_subcommand("schreier", "transversal generators and families"));
  CLI::App *hom = app.add_subcommand("homology", "rank bookkeeping and genus checks");
  add_spec(hom);
  hom->add_option("--prime", cfg.prime, "also compute mod-p dimensions");
  hom->add_option("--dump-matrix", cfg.dump_matrix, "write the expanded relator matrix");
  hom->add_flag("--corrupt-formulas", cfg.corrupt_formulas)->group("");
  add_spec(app.add_subcommand("characters", "character decomposition table"));
  CLI::App *fer = app.add_subcommand("fermat", "closed-curve basis and braid action");
  fer->add_option("--n", cfg.n, "Fermat exponent");
  fer->add_flag("--action", cfg.action, "include braid matrices");
  fer->add_option("--format", cfg.format, "json | text")->default_str("json");
  CLI::App *mag = app.add_subcommand("magnus", "truncated series expansion of a word");
  mag->add_option("--word", cfg.word, "e.g. x1*x2*x1^-1*x2^-1")->required();
  mag->add_option("--degree", cfg.degree, "truncation degree");
  mag->add_option("--format", cfg.format, "json | text")->default_str("json");
  CLI::App *red = app.add_subcommand("reduce", "full-to-cyclic matrix collapse checks");
  add_spec(red);
  red->add_flag("--corrupt-formulas", cfg.corrupt_formulas)->group("");
  app.add_subcommand("selftest", "run the acceptance grid");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();
  return covhom::cli_run(cfg, std::cout, std::cerr);
}
