#ifndef COVHOM_SELFTEST_HPP
#define COVHOM_SELFTEST_HPP

#include <ostream>
#include <string>
#include <vector>

/**
 * @file selftest.hpp
 * @brief The acceptance grid: eight exact-arithmetic criteria over
 *        s in {3,4,5}, k in {2,3,4}.  Failures carry a diff detail and are
 *        reported, never suppressed.
 */

namespace covhom {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;   // first mismatch, or a summary when passing
  double seconds = 0.0;
};

// Runs all criteria; progress lines go to *progress when non-null.
std::vector<CriterionResult> run_acceptance(std::ostream *progress = nullptr);

}  // namespace covhom

#endif
