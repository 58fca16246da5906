#ifndef COVHOM_FERMAT_HPP
#define COVHOM_FERMAT_HPP

#include <utility>
#include <vector>

#include "covhom/cover.hpp"

/**
 * @file fermat.hpp
 * @brief The s=3 cover with k=n (a = x1, b = x2): explicit generator
 *        families, the closed-surface homology basis, and the braid action.
 */

namespace covhom {

struct FermatFamilies {
  int n;
  std::vector<Word> A1;  // (b^n)^{a^i},                    n words
  std::vector<Word> A2;  // [b^j,a]^{a^i}, 1<=j<=n-1, 0<=i<=n-2
  std::vector<Word> A3;  // a^n [a^-1, b^j],                n words
};
FermatFamilies fermat_generator_families(int n);

// Endomorphism of F_2 given by generator images.
struct BraidAutomorphism {
  Word image_a, image_b;
  Word apply(const Word &w) const;
  BraidAutomorphism after(const BraidAutomorphism &o) const;  // this o other
  IntMatrix abelianized() const;                              // 2x2
};
BraidAutomorphism braid_sigma1();  // a -> aba^-1, b -> a
BraidAutomorphism braid_sigma2();  // a -> a,      b -> a^-1 b^-1

// Homology of the closed curve: Z^N modulo the saturation of the span of the
// 3n deck-invariant elements, with the commutator classes
// [b,a]^{alpha^i beta^j} (0<=i<=n-2, 0<=j<=n-3) as basis.
class FermatHomology {
public:
  explicit FermatHomology(int n);

  int n() const { return n_; }
  const Cover &cover() const { return cover_; }
  long dim() const { return dim_; }  // (n-1)(n-2) = 2g

  // the 3n words whose classes are killed: (a^n)^{beta^i}, (b^n)^{alpha^i},
  // ((ab)^n)^{alpha^i}
  const std::vector<Word> &invariant_elements() const { return invariants_; }
  // invariant factors of the span; anything != 1 means the unsaturated
  // quotient has torsion
  const std::vector<Int> &span_factors() const { return span_factors_; }

  const std::vector<std::pair<int, int>> &basis_index() const { return basis_index_; }
  Word basis_word(int i, int j) const;  // a^i b^j [b,a] b^-j a^-i

  std::vector<Int> quotient_coords(const Word &w) const;  // length dim
  std::vector<Int> basis_coords(const Word &w) const;     // in the commutator basis

  // Matrix of the automorphism on the quotient in the commutator basis.
  IntMatrix braid_matrix(const BraidAutomorphism &sigma) const;

private:
  int n_;
  Cover cover_;
  long dim_;
  int sat_rank_;
  IntMatrix U_;     // quotient coords = tail of U * v
  IntMatrix Pinv_;  // inverse of the basis matrix in quotient coords
  std::vector<Word> invariants_;
  std::vector<Int> span_factors_;
  std::vector<std::pair<int, int>> basis_index_;
};

}  // namespace covhom

#endif
