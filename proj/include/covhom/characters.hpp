#ifndef COVHOM_CHARACTERS_HPP
#define COVHOM_CHARACTERS_HPP

#include <vector>

#include "covhom/fox.hpp"

/**
 * @file characters.hpp
 * @brief Character indices of the full deck group, predicted multiplicities,
 *        and projector-measured isotypic dimensions mod p.
 */

namespace covhom {

struct CharacterIndex {
  std::vector<int> i;  // (i_1,...,i_{s-1}), entries mod k
  int i_s = 0;         // i_1 + ... + i_{s-1} mod k
  int z = 0;           // how many of i_1..i_{s-1}, i_s vanish mod k
  int c = 0;           // predicted multiplicity in im(Q) tensor F
  int C = 0;           // predicted multiplicity in H1 tensor F
};

// All k^{s-1} indices in lexicographic order (full covers only).
std::vector<CharacterIndex> decomposition_table(const CoverSpec &spec);

struct CharacterField {
  uint64_t p = 0;
  uint64_t zeta = 0;  // primitive k-th root from the least primitive root
  Fp F{0};
};
// Smallest prime p = 1 (mod k) with p > |H0|; skip>0 takes later primes.
CharacterField character_field(const CoverSpec &spec, int skip = 0);

// Rank of the isotypic projector P_chi on the homology quotient, built
// literally as the product of the commuting factor projectors
// (1/k) sum_m chi(x_j)^{-m} rho_j^m.
int isotypic_dimension(const HomologySpace &hs, const CharacterField &cf,
                       const std::vector<int> &i);
FpMatrix isotypic_projector(const HomologySpace &hs, const CharacterField &cf,
                            const std::vector<int> &i);

// All isotypic dimensions at once by nesting the images of the factor
// projectors (joint eigenspace splitting); index by deck-group order of i.
std::vector<int> isotypic_all(const HomologySpace &hs, const CharacterField &cf);

// Character multiplicities of im(Q) inside F_p[H0]^s, same indexing.
std::vector<int> imq_multiplicities(const HomologySpace &hs, const CharacterField &cf);

}  // namespace covhom

#endif
