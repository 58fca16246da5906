#ifndef COVHOM_FP_HPP
#define COVHOM_FP_HPP

#include <cstdint>
#include <vector>

#include "covhom/intmat.hpp"

/**
 * @file fp.hpp
 * @brief Prime-field scalars and dense matrices (p < 2^31).
 */

namespace covhom {

struct Fp {
  uint64_t p;

  uint64_t add(uint64_t a, uint64_t b) const { uint64_t s = a + b; return s >= p ? s - p : s; }
  uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p - b; }
  uint64_t mul(uint64_t a, uint64_t b) const { return a * b % p; }
  uint64_t neg(uint64_t a) const { return a == 0 ? 0 : p - a; }
  uint64_t pow(uint64_t a, uint64_t e) const;
  uint64_t inv(uint64_t a) const { return pow(a % p, p - 2); }
  uint64_t from_int(const Int &x) const;
};

struct FpMatrix {
  Fp F{0};
  int rows = 0, cols = 0;
  std::vector<uint64_t> a;  // row-major

  FpMatrix() = default;
  FpMatrix(Fp f, int r, int c) : F(f), rows(r), cols(c), a((size_t)r * c, 0) {}
  static FpMatrix reduce(const IntMatrix &m, uint64_t p);
  static FpMatrix identity(Fp f, int n);

  uint64_t &at(int r, int c) { return a[(size_t)r * cols + c]; }
  uint64_t at(int r, int c) const { return a[(size_t)r * cols + c]; }

  FpMatrix operator*(const FpMatrix &o) const;
  FpMatrix operator+(const FpMatrix &o) const;
  FpMatrix operator-(const FpMatrix &o) const;
  FpMatrix scaled(uint64_t c) const;
  bool operator==(const FpMatrix &o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

int rank_mod_p(FpMatrix m);  // destroys its copy
// Columns form a basis of the right kernel {v : M v = 0}.
FpMatrix kernel_basis(FpMatrix m);

bool is_prime(uint64_t n);
uint64_t least_primitive_root(uint64_t p);
// zeta = g^((p-1)/k) for the least primitive root g.
uint64_t root_of_unity(uint64_t p, int k);
// Smallest prime p = 1 (mod k) with p > floor, skipping `skip` candidates
// (skip=1 gives the second such prime, etc.).
uint64_t character_prime(int k, uint64_t floor_excl, int skip = 0);

// Incremental column echelon over F_p; columns are mutually reduced only
// against earlier pivots, so reduction must sweep columns in insertion order.
struct Echelon {
  Fp F{0};
  int n = 0;
  std::vector<std::vector<uint64_t>> cols;  // pivot entry normalized to 1
  std::vector<int> pivot_row;

  Echelon() = default;
  Echelon(Fp f, int dim) : F(f), n(dim) {}
  int dim() const { return (int)cols.size(); }
  // Reduce v against all stored columns; record the coefficient of each
  // stored column when coeffs != nullptr.
  void reduce(std::vector<uint64_t> &v, std::vector<uint64_t> *coeffs = nullptr) const;
  // Reduce then insert if nonzero.  Returns true when v extended the span.
  bool add(std::vector<uint64_t> v);
};

}  // namespace covhom

#endif
