#include <random>

#include "covhom/word.hpp"
#include "doctest.h"

using namespace covhom;

namespace {

Word random_word(std::mt19937 &rng, int rank, int len) {
  Word w(rank);
  std::uniform_int_distribution<int> sym(1, rank), exp(-3, 3);
  for (int i = 0; i < len; i++) {
    int e = exp(rng);
    if (e) w.append(sym(rng), e);
  }
  return w;
}

}  // namespace

TEST_CASE("word reduction at the seam") {
  Word a = Word::generator(2, 1);
  CHECK((a * a.inverse()).is_identity());
  Word w = Word::parse(3, "x1^2*x2^-1*x3");
  CHECK(w.str() == "x1^2*x2^-1*x3");
  CHECK(Word::parse(3, "1").is_identity());
  CHECK(Word(3).str() == "1");
  // x1^2 * x1^-2 * x2 collapses the run entirely
  Word u = Word::parse(2, "x1^2");
  Word v = Word::parse(2, "x1^-2*x2");
  CHECK((u * v).str() == "x2");
}

TEST_CASE("word parse rejects malformed input") {
  CHECK_THROWS(Word::parse(2, "x3"));       // symbol out of range
  CHECK_THROWS(Word::parse(2, "y1"));
  CHECK_THROWS(Word::parse(2, "x1^"));
  CHECK_THROWS(Word::parse(2, "x1 x2"));
  CHECK_THROWS(Word::parse(2, ""));
  CHECK_THROWS(Word::generator(2, 1) * Word::generator(3, 1));  // alphabet mismatch
}

TEST_CASE("parse/str round trip") {
  std::mt19937 rng(12345);
  for (int it = 0; it < 200; it++) {
    Word w = random_word(rng, 4, it % 12);
    CHECK(Word::parse(4, w.str()) == w);
  }
}

TEST_CASE("group axioms on random words") {
  std::mt19937 rng(12345);
  for (int it = 0; it < 200; it++) {
    Word u = random_word(rng, 3, 6), v = random_word(rng, 3, 6), w = random_word(rng, 3, 6);
    CHECK((u * v) * w == u * (v * w));
    CHECK((u * v).inverse() == v.inverse() * u.inverse());
    CHECK((u * u.inverse()).is_identity());
    CHECK(u.pow(3) == u * u * u);
    CHECK(u.pow(-2) == (u * u).inverse());
    CHECK(u.pow(5) * u.pow(-3) == u.pow(2));
  }
}

TEST_CASE("exponent sums abelianize") {
  Word w = Word::parse(3, "x1^2*x2^-1*x1^-2*x2*x3^4");
  std::vector<Int> v = w.exponent_sums();
  CHECK(v[0] == 0);
  CHECK(v[1] == 0);
  CHECK(v[2] == 4);
}

TEST_CASE("commutator power expansions") {
  // [x^j, y] = [x,y]^{x^{j-1}} ... [x,y]^x [x,y]
  // [x, y^j] = [x,y] [x,y]^y ... [x,y]^{y^{j-1}}
  Word x = Word::generator(2, 1), y = Word::generator(2, 2);
  Word c = commutator(x, y);
  for (int j = 1; j <= 6; j++) {
    Word lhs = commutator(x.pow(j), y);
    Word rhs(2);
    for (int i = j - 1; i >= 0; i--) rhs = rhs * conjugate(c, x.pow(i));
    CHECK(lhs == rhs);

    Word lhs2 = commutator(x, y.pow(j));
    Word rhs2(2);
    for (int i = 0; i < j; i++) rhs2 = rhs2 * conjugate(c, y.pow(i));
    CHECK(lhs2 == rhs2);
  }
}

TEST_CASE("big exponents stay exact") {
  Int huge("123456789012345678901234567890");
  Word w = Word::generator(2, 1, huge);
  CHECK(w.exponent_sums()[0] == huge);
  CHECK((w * w).exponent_sums()[0] == huge * 2);
  CHECK(w.pow(huge).exponent_sums()[0] == huge * huge);
}
