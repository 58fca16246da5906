#include "covhom/word.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace covhom {

Word Word::generator(int rank, int sym, Int exp) {
  if (sym < 1 || sym > rank) throw std::invalid_argument("generator symbol out of range");
  Word w(rank);
  w.append(sym, exp);
  return w;
}

void Word::append(int sym, const Int &exp) {
  if (sym < 1 || sym > rank_) throw std::invalid_argument("symbol out of range");
  if (exp == 0) return;
  if (!letters_.empty() && letters_.back().sym == sym) {
    letters_.back().exp += exp;
    if (letters_.back().exp == 0) letters_.pop_back();
    return;
  }
  letters_.push_back({sym, exp});
}

Word Word::operator*(const Word &o) const {
  if (rank_ != o.rank_) throw std::invalid_argument("alphabet mismatch in product");
  Word r = *this;
  for (const Letter &l : o.letters_) r.append(l.sym, l.exp);
  return r;
}

Word Word::inverse() const {
  Word r(rank_);
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    r.letters_.push_back({it->sym, -it->exp});
  return r;
}

Word Word::pow(const Int &e) const {
  if (e == 0) return Word(rank_);
  Word base = e < 0 ? inverse() : *this;
  Int n = abs(e);
  // Cyclically reduced powers would concatenate cheaply; generic square-and-
  // multiply keeps reduction correct for arbitrary words.
  Word acc(rank_);
  Word sq = base;
  while (n > 0) {
    if (mpz_odd_p(n.get_mpz_t())) acc = acc * sq;
    n >>= 1;
    if (n > 0) sq = sq * sq;
  }
  return acc;
}

Int Word::unit_length() const {
  Int n = 0;
  for (const Letter &l : letters_) n += abs(l.exp);
  return n;
}

std::vector<Int> Word::exponent_sums() const {
  std::vector<Int> v(rank_, 0);
  for (const Letter &l : letters_) v[l.sym - 1] += l.exp;
  return v;
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const Letter &l : letters_) {
    if (!first) os << "*";
    first = false;
    os << "x" << l.sym;
    if (l.exp != 1) os << "^" << l.exp.get_str();
  }
  return os.str();
}

Word Word::parse(int rank, const std::string &text) {
  Word w(rank);
  size_t pos = 0;
  auto skip_ws = [&] { while (pos < text.size() && std::isspace((unsigned char)text[pos])) pos++; };
  skip_ws();
  if (pos < text.size() && text[pos] == '1') {
    pos++;
    skip_ws();
    if (pos != text.size()) throw std::invalid_argument("trailing input after identity word");
    return w;
  }
  bool expect_factor = true;
  while (pos < text.size()) {
    skip_ws();
    if (!expect_factor) {
      if (text[pos] != '*') throw std::invalid_argument("expected '*' between factors");
      pos++;
      skip_ws();
    }
    if (pos >= text.size() || text[pos] != 'x') throw std::invalid_argument("expected generator xN");
    pos++;
    size_t start = pos;
    while (pos < text.size() && std::isdigit((unsigned char)text[pos])) pos++;
    if (pos == start) throw std::invalid_argument("missing generator index");
    int sym = std::stoi(text.substr(start, pos - start));
    Int exp = 1;
    skip_ws();
    if (pos < text.size() && text[pos] == '^') {
      pos++;
      skip_ws();
      start = pos;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) pos++;
      while (pos < text.size() && std::isdigit((unsigned char)text[pos])) pos++;
      if (pos == start) throw std::invalid_argument("missing exponent");
      exp = Int(text.substr(start, pos - start));
    }
    w.append(sym, exp);
    expect_factor = false;
    skip_ws();
  }
  if (expect_factor) throw std::invalid_argument("empty word text");
  return w;
}

Word conjugate(const Word &w, const Word &g) { return g * w * g.inverse(); }

Word commutator(const Word &u, const Word &v) { return u * v * u.inverse() * v.inverse(); }

}  // namespace covhom
