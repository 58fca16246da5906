#ifndef COVHOM_INTMAT_HPP
#define COVHOM_INTMAT_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

/**
 * @file intmat.hpp
 * @brief Dense integer matrices and Smith normal form, exact throughout.
 */

namespace covhom {

using Int = mpz_class;

struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<Int> a;  // row-major

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a((size_t)r * c, 0) {}

  Int &at(int r, int c) { return a[(size_t)r * cols + c]; }
  const Int &at(int r, int c) const { return a[(size_t)r * cols + c]; }

  bool operator==(const IntMatrix &o) const = default;

  IntMatrix operator*(const IntMatrix &o) const;
  IntMatrix operator-(const IntMatrix &o) const;
  static IntMatrix identity(int n);
  IntMatrix transposed() const;

  // "rows cols" header line, then row-major entries separated by whitespace.
  std::string text() const;
  static IntMatrix parse(const std::string &text);
};

struct SmithForm {
  int rank = 0;
  std::vector<Int> factors;               // nonzero invariant factors d1 | d2 | ...
  std::optional<IntMatrix> U, V;          // U*A*V = D when transforms requested
  std::optional<IntMatrix> Uinv, Vinv;
};

// Least-absolute-value pivoting with gcd-style reduction.  Internally runs on
// overflow-checked 64-bit words and falls back to GMP when a step overflows.
SmithForm smith_normal_form(const IntMatrix &A, bool transforms = false);

// Rank over Q, via Smith normal form.
int rank_exact(const IntMatrix &A);

}  // namespace covhom

#endif
