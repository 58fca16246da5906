#ifndef COVHOM_WORD_HPP
#define COVHOM_WORD_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

/**
 * @file word.hpp
 * @brief Reduced words in a finitely generated free group, run-length encoded.
 */

namespace covhom {

using Int = mpz_class;

// One maximal run x_sym^exp in a reduced word.  Symbols are 1-based, exponents
// are arbitrary-precision and never zero inside a Word.
struct Letter {
  int sym;
  Int exp;

  bool operator==(const Letter &o) const { return sym == o.sym && exp == o.exp; }
};

// A reduced word over the free group on symbols x1..x_rank.  Adjacent runs
// always carry distinct symbols; the empty word is the identity.
class Word {
public:
  explicit Word(int rank) : rank_(rank) {}

  static Word generator(int rank, int sym, Int exp = 1);

  // Accepts products of x<i>^<e> factors separated by '*', e.g. "x1^2*x2^-1*x3".
  // "1" denotes the identity.  Throws std::invalid_argument on bad input.
  static Word parse(int rank, const std::string &text);

  int rank() const { return rank_; }
  bool is_identity() const { return letters_.empty(); }
  const std::vector<Letter> &letters() const { return letters_; }

  // Number of single-symbol letters after expanding runs.
  Int unit_length() const;

  // Right-multiply by x_sym^exp, reducing at the seam.
  void append(int sym, const Int &exp);

  Word operator*(const Word &o) const;
  Word inverse() const;
  Word pow(const Int &e) const;
  bool operator==(const Word &o) const = default;

  std::string str() const;

  // Exponent-sum vector (index sym-1), i.e. the image in Z^rank.
  std::vector<Int> exponent_sums() const;

private:
  int rank_;
  std::vector<Letter> letters_;
};

// g * w * g^-1; w^g in exponent notation.
Word conjugate(const Word &w, const Word &g);
// [u,v] = u v u^-1 v^-1, so that [x^j,y] = [x,y]^{x^{j-1}} ... [x,y]^x [x,y].
Word commutator(const Word &u, const Word &v);

}  // namespace covhom

#endif
