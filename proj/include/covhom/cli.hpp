#ifndef COVHOM_CLI_HPP
#define COVHOM_CLI_HPP

#include <ostream>
#include <string>

/**
 * @file cli.hpp
 * @brief The command driver behind the covhom binary, callable in-process so
 *        tests exercise the exact CLI code paths without spawning.
 */

namespace covhom {

struct RunConfig {
  std::string subcommand;       // schreier homology characters fermat magnus
                                // reduce selftest
  int s = 3;
  int k = 2;
  std::string kind = "full";    // full | cyclic
  int n = 3;                    // fermat
  uint64_t prime = 0;           // optional mod-p block for homology
  int degree = 4;               // magnus truncation
  std::string word;             // magnus input, e.g. "x1*x2*x1^-1"
  std::string format = "json";  // json | csv | text
  std::string dump_matrix;      // write the expanded relator matrix here
  bool action = false;          // fermat: include braid matrices
  bool corrupt_formulas = false;  // test hook: offsets every closed form by 1
  long max_order = 4096;          // deck-group size cap (COVHOM_MAX_ORDER)
};

// Exit status: 0 ok, 1 usage/validation error, 2 formula or consistency
// mismatch (the report still goes to `out`, the diff summary to `err`).
int cli_run(const RunConfig &cfg, std::ostream &out, std::ostream &err);

}  // namespace covhom

#endif
