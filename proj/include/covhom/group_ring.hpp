#ifndef COVHOM_GROUP_RING_HPP
#define COVHOM_GROUP_RING_HPP

#include <vector>

#include "covhom/fp.hpp"
#include "covhom/intmat.hpp"

/**
 * @file group_ring.hpp
 * @brief Integral group rings of (Z/k)^r with a fixed lexicographic element order.
 */

namespace covhom {

// (Z/k)^r.  Elements are exponent vectors (i_1,...,i_r), 0 <= i_j < k,
// enumerated lexicographically: index = i_1*k^{r-1} + ... + i_r.
struct FiniteAbelianGroup {
  int k = 1;
  int r = 0;

  long order() const {
    long n = 1;
    for (int i = 0; i < r; i++) n *= k;
    return n;
  }
  std::vector<int> element(long idx) const;
  long index(const std::vector<int> &v) const;  // entries reduced mod k
  long mul(long a, long b) const;
  long inverse(long a) const;
  long generator(int j) const;  // e_j, 1-based j

  bool operator==(const FiniteAbelianGroup &o) const = default;
};

// Dense element of Z[(Z/k)^r]; coefficient vector indexed by group index.
class RingElement {
public:
  RingElement() = default;
  explicit RingElement(const FiniteAbelianGroup &g) : grp_(g), coef_(g.order(), 0) {}
  static RingElement unit(const FiniteAbelianGroup &g, long idx);  // 1 * element

  const FiniteAbelianGroup &group() const { return grp_; }
  const Int &operator[](long idx) const { return coef_[idx]; }
  Int &operator[](long idx) { return coef_[idx]; }
  bool is_zero() const;

  RingElement operator+(const RingElement &o) const;
  RingElement operator-(const RingElement &o) const;
  RingElement operator*(const RingElement &o) const;  // convolution
  RingElement operator-() const;
  bool operator==(const RingElement &o) const = default;

  std::string str() const;  // e.g. "1 + g(0,1) - 2*g(1,2)"

private:
  FiniteAbelianGroup grp_;
  std::vector<Int> coef_;
};

// 1 + g + g^2 + ... + g^{k-1} for a single group element g.
RingElement norm_of(const FiniteAbelianGroup &g, long elem_idx);
// Norm on the j-th standard generator (1-based).
RingElement norm_on_generator(const FiniteAbelianGroup &g, int j);
// Norm on (e_1 + ... + e_r)^-1, the deck image of the eliminated generator.
RingElement norm_on_inverse_product(const FiniteAbelianGroup &g);

Int augmentation(const RingElement &e);

// |H| x |H| integer matrix of left multiplication by e in the fixed order.
IntMatrix regular_representation(const RingElement &e);

// chi_i(h) = zeta^{sum_j h_j * i_j} in F_p, zeta a fixed primitive k-th root.
uint64_t character_value(const Fp &F, uint64_t zeta, int k,
                         const std::vector<int> &i, const std::vector<int> &h);

}  // namespace covhom

#endif
