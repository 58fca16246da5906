#ifndef COVHOM_BURAU_HPP
#define COVHOM_BURAU_HPP

#include "covhom/fox.hpp"

/**
 * @file burau.hpp
 * @brief Collapse from the full deck group (Z/k)^{s-1} to the total-exponent
 *        quotient Z/k, and the comparison of the two Alexander-type matrices.
 */

namespace covhom {

// Group-level collapse: exponent vector -> total exponent mod k.
long collapse_index(const FiniteAbelianGroup &H, long idx);

// Induced ring homomorphism Z[(Z/k)^{s-1}] -> Z[Z/k].
RingElement collapse_element(const RingElement &e);

// Module-level collapse of an ambient vector (s blocks of |H| coordinates
// to s blocks of k coordinates).
std::vector<Int> collapse_vector(const CoverSpec &spec, const std::vector<Int> &v);

struct ReductionReport {
  int s = 0, k = 0;
  // entrywise: collapsing the full-cover matrix reproduces the cyclic one
  bool matrix_match = false;
  // the collapsed full-cover image lies inside the cyclic image mod p
  bool image_contained = false;
  uint64_t p = 0;
  long rank_Q_cyclic = 0;
  long rank_Apsi_cyclic = 0;
  long rank_H1_cyclic = 0;
  long rank_H1_formula = 0;   // (s-2)(k-1)
  bool formulas_match = false;
  long gcd_defect = 0;        // gcd(s-1,k) - 1; formulas hold iff this is 0
};

// p = 0 picks a verification prime automatically.
ReductionReport verify_reduction(int s, int k, uint64_t p = 0);

}  // namespace covhom

#endif
