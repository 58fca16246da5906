#include "covhom/magnus.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace covhom {

TruncatedSeries::TruncatedSeries(int nvars, int degree)
    : nvars_(nvars), degree_(degree) {
  if (nvars < 1 || degree < 0) throw std::invalid_argument("bad series shape");
}

TruncatedSeries TruncatedSeries::unit(int nvars, int degree) {
  TruncatedSeries f(nvars, degree);
  f.terms_[{}] = 1;
  return f;
}

TruncatedSeries TruncatedSeries::variable(int nvars, int degree, int i) {
  if (i < 1 || i > nvars) throw std::invalid_argument("variable out of range");
  TruncatedSeries f(nvars, degree);
  if (degree >= 1) f.terms_[{(int8_t)i}] = 1;
  return f;
}

Int TruncatedSeries::coefficient(const std::vector<int> &monomial) const {
  std::vector<int8_t> key(monomial.begin(), monomial.end());
  auto it = terms_.find(key);
  return it == terms_.end() ? Int(0) : it->second;
}

void TruncatedSeries::set(const std::vector<int> &monomial, const Int &c) {
  if ((int)monomial.size() > degree_) return;
  for (int v : monomial)
    if (v < 1 || v > nvars_) throw std::invalid_argument("variable out of range");
  std::vector<int8_t> key(monomial.begin(), monomial.end());
  if (c == 0)
    terms_.erase(key);
  else
    terms_[key] = c;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries &o) const {
  if (nvars_ != o.nvars_ || degree_ != o.degree_)
    throw std::invalid_argument("shape mismatch");
  TruncatedSeries out = *this;
  for (const auto &[k, c] : o.terms_) {
    Int v = out.terms_[k] += c;
    if (v == 0) out.terms_.erase(k);
  }
  return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries &o) const {
  if (nvars_ != o.nvars_ || degree_ != o.degree_)
    throw std::invalid_argument("shape mismatch");
  TruncatedSeries out = *this;
  for (const auto &[k, c] : o.terms_) {
    Int v = out.terms_[k] -= c;
    if (v == 0) out.terms_.erase(k);
  }
  return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries &o) const {
  if (nvars_ != o.nvars_ || degree_ != o.degree_)
    throw std::invalid_argument("shape mismatch");
  TruncatedSeries out(nvars_, degree_);
  for (const auto &[ka, ca] : terms_)
    for (const auto &[kb, cb] : o.terms_) {
      if ((int)(ka.size() + kb.size()) > degree_) continue;
      std::vector<int8_t> k = ka;
      k.insert(k.end(), kb.begin(), kb.end());
      Int v = out.terms_[k] += ca * cb;
      if (v == 0) out.terms_.erase(k);
    }
  return out;
}

bool TruncatedSeries::operator==(const TruncatedSeries &o) const {
  return nvars_ == o.nvars_ && degree_ == o.degree_ && terms_ == o.terms_;
}

bool TruncatedSeries::is_unit() const {
  return terms_.size() == 1 && terms_.begin()->first.empty() &&
         terms_.begin()->second == 1;
}

std::string TruncatedSeries::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    for (int8_t v : k) os << "*u" << (int)v;
  }
  return os.str();
}

Int binomial(const Int &e, unsigned long i) {
  Int r;
  mpz_bin_ui(r.get_mpz_t(), e.get_mpz_t(), i);
  return r;
}

TruncatedSeries magnus_image(const Word &w, int degree) {
  int n = w.rank();
  TruncatedSeries out = TruncatedSeries::unit(n, degree);
  for (const Letter &l : w.letters()) {
    // (1 + u)^e truncates after degree terms for any integer e
    TruncatedSeries f(n, degree);
    std::vector<int> mono;
    for (int i = 0; i <= degree; i++) {
      f.set(mono, binomial(l.exp, i));
      mono.push_back(l.sym);
    }
    out = out * f;
  }
  return out;
}

Int magnus_coefficient(const std::vector<int> &index, const Word &w) {
  int degree = std::max((int)index.size(), 1);
  return magnus_image(w, degree).coefficient(index);
}

TruncatedSeries commutative_image(const TruncatedSeries &f) {
  TruncatedSeries out(f.nvars(), f.degree());
  std::map<std::vector<int8_t>, Int> acc;
  for (const auto &[k, c] : f.terms()) {
    std::vector<int8_t> s = k;
    std::sort(s.begin(), s.end());
    acc[s] += c;
  }
  for (const auto &[k, c] : acc)
    out.set(std::vector<int>(k.begin(), k.end()), c);
  return out;
}

}  // namespace covhom
