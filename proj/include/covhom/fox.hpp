#ifndef COVHOM_FOX_HPP
#define COVHOM_FOX_HPP

#include <string>
#include <vector>

#include "covhom/cover.hpp"
#include "covhom/fp.hpp"
#include "covhom/group_ring.hpp"

/**
 * @file fox.hpp
 * @brief Fox calculus, the s x (s+1) Alexander-type matrix of the orbifold
 *        presentation, and the Crowell-sequence rank bookkeeping.
 */

namespace covhom {

FiniteAbelianGroup deck_group(const CoverSpec &spec);

// Deck image of free generator sym (1..s); x_s maps to the inverse of the
// product of the others.
long deck_image(const CoverSpec &spec, const FiniteAbelianGroup &H, int sym);

// d w / d x_j for a word over the s-symbol alphabet (x_s kept formal),
// prefixes pushed into Z[H0] through the deck projection.
RingElement fox_derivative(const CoverSpec &spec, const Word &w, int j);

struct AlexanderMatrix {
  CoverSpec spec;
  FiniteAbelianGroup H;
  std::vector<RingElement> entries;  // s rows, s+1 cols, row-major

  RingElement &at(int i, int j) { return entries[(size_t)i * (spec.s + 1) + j]; }
  const RingElement &at(int i, int j) const { return entries[(size_t)i * (spec.s + 1) + j]; }

  // s|H| x (s+1)|H| integer matrix via the regular representation.
  IntMatrix expanded() const;
};

// Rows d/dx_i, columns: relators x_j^k (j = 1..s) then x_1...x_s, computed
// by differentiating the relators from scratch.
AlexanderMatrix build_alexander_matrix(const CoverSpec &spec);

// The map sending the j-th presentation-module generator to psi(x_j) - 1.
std::vector<RingElement> theta2_entries(const CoverSpec &spec);
IntMatrix theta2_expanded(const CoverSpec &spec);

struct HomologyReport {
  CoverSpec spec;
  long deck_order = 0;
  long rank_A = 0;      // |H0|, free rank of Z[H0]
  long rank_Q = 0;      // from integer SNF of the expanded matrix
  long rank_Apsi = 0;   // s|H0| - rank_Q
  long rank_H1 = 0;     // rank_Apsi - rank_A + 1
  long rank_Q_formula = 0;
  long rank_Apsi_formula = 0;
  long rank_H1_formula = 0;
  bool formulas_match = false;
  long twice_genus_rh = 0;        // Riemann-Hurwitz on the actual branch orders
  long twice_genus_schreier = 0;  // cover generators minus killed relator span
  long twice_genus_crowell = 0;   // = rank_H1
  bool genus_consistent = false;
  bool rank_checked_mod_p = false;  // SNF rank reproduced mod a verification prime
  uint64_t verification_prime = 0;
  std::vector<std::string> notes;
};

HomologyReport crowell_ranks(const CoverSpec &spec);

// Invariant factors of the integral H1 lattice ker(theta2)/im(Q); factors
// sharing a divisor with k are reported, not assumed absent.
struct TorsionReport {
  long free_rank = 0;
  std::vector<Int> torsion;  // invariant factors > 1
  bool k_torsion_flagged = false;
};
TorsionReport h1_torsion(const CoverSpec &spec);

// H1 tensor F_p presented as ker(theta2) / im(Q) with explicit machinery:
// an echelon of im(Q), quotient basis representatives, class coordinates,
// and the deck action both on ambient coordinates and on the quotient.
struct HomologySpace {
  CoverSpec spec;
  FiniteAbelianGroup H;
  Fp F{0};
  long n = 0;    // ambient dimension s|H0|
  int dim = 0;   // quotient dimension
  Echelon q_ech;                              // im(Q)
  Echelon b_ech;                              // quotient basis representatives
  std::vector<std::vector<long>> perm;        // deck generator permutations of 0..n-1

  // Quotient coordinates of an ambient vector lying in ker(theta2).
  std::vector<uint64_t> coords(std::vector<uint64_t> v) const;
  // Matrix of deck generator j (1-based) on the quotient.
  FpMatrix action(int j) const;
};

HomologySpace homology_space(const CoverSpec &spec, uint64_t p);

}  // namespace covhom

#endif
