#ifndef COVHOM_MAGNUS_HPP
#define COVHOM_MAGNUS_HPP

#include <map>
#include <string>
#include <vector>

#include "covhom/word.hpp"

/**
 * @file magnus.hpp
 * @brief Embedding of a free group into the ring of truncated power series
 *        in noncommuting variables, x_i -> 1 + u_i.
 */

namespace covhom {

// Polynomial in noncommuting u_1..u_n, truncated beyond a total degree.
// Keys are monomials as sequences of 1-based variable indices.
class TruncatedSeries {
public:
  TruncatedSeries(int nvars, int degree);
  static TruncatedSeries unit(int nvars, int degree);
  static TruncatedSeries variable(int nvars, int degree, int i);

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  const std::map<std::vector<int8_t>, Int> &terms() const { return terms_; }

  Int coefficient(const std::vector<int> &monomial) const;
  void set(const std::vector<int> &monomial, const Int &c);

  TruncatedSeries operator+(const TruncatedSeries &o) const;
  TruncatedSeries operator-(const TruncatedSeries &o) const;
  TruncatedSeries operator*(const TruncatedSeries &o) const;
  bool operator==(const TruncatedSeries &o) const;

  bool is_unit() const;
  std::string str() const;

private:
  int nvars_, degree_;
  std::map<std::vector<int8_t>, Int> terms_;  // zero coefficients dropped
};

// C(e, i) for arbitrary integer e (generalized binomial).
Int binomial(const Int &e, unsigned long i);

// Image of w under x_i -> 1 + u_i; exact on arbitrary exponents since
// (1 + u)^e expands to sum_i C(e,i) u^i, which truncates finitely.
TruncatedSeries magnus_image(const Word &w, int degree = 4);

// Coefficient of u_{I_1} ... u_{I_m} in the image of w.
Int magnus_coefficient(const std::vector<int> &index, const Word &w);

// Project to commuting variables by sorting each monomial.
TruncatedSeries commutative_image(const TruncatedSeries &f);

}  // namespace covhom

#endif
