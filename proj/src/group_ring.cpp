#include "covhom/group_ring.hpp"

#include <sstream>
#include <stdexcept>

namespace covhom {

std::vector<int> FiniteAbelianGroup::element(long idx) const {
  std::vector<int> v(r);
  for (int j = r - 1; j >= 0; j--) {
    v[j] = (int)(idx % k);
    idx /= k;
  }
  return v;
}

long FiniteAbelianGroup::index(const std::vector<int> &v) const {
  if ((int)v.size() != r) throw std::invalid_argument("element arity mismatch");
  long idx = 0;
  for (int j = 0; j < r; j++) {
    int c = v[j] % k;
    if (c < 0) c += k;
    idx = idx * k + c;
  }
  return idx;
}

long FiniteAbelianGroup::mul(long a, long b) const {
  long idx = 0;
  long pw = 1;
  for (int j = 0; j < r - 1; j++) pw *= k;
  for (int j = 0; j < r; j++) {
    long da = (a / pw) % k, db = (b / pw) % k;
    idx = idx * k + (da + db) % k;
    pw /= k;
  }
  return idx;
}

long FiniteAbelianGroup::inverse(long a) const {
  std::vector<int> v = element(a);
  for (int &x : v) x = -x;
  return index(v);
}

long FiniteAbelianGroup::generator(int j) const {
  if (j < 1 || j > r) throw std::invalid_argument("generator index out of range");
  std::vector<int> v(r, 0);
  v[j - 1] = 1;
  return index(v);
}

RingElement RingElement::unit(const FiniteAbelianGroup &g, long idx) {
  RingElement e(g);
  e[idx] = 1;
  return e;
}

bool RingElement::is_zero() const {
  for (const Int &c : coef_)
    if (c != 0) return false;
  return true;
}

RingElement RingElement::operator+(const RingElement &o) const {
  if (grp_ != o.grp_) throw std::invalid_argument("group mismatch");
  RingElement r = *this;
  for (size_t i = 0; i < coef_.size(); i++) r.coef_[i] += o.coef_[i];
  return r;
}

RingElement RingElement::operator-(const RingElement &o) const {
  if (grp_ != o.grp_) throw std::invalid_argument("group mismatch");
  RingElement r = *this;
  for (size_t i = 0; i < coef_.size(); i++) r.coef_[i] -= o.coef_[i];
  return r;
}

RingElement RingElement::operator-() const {
  RingElement r = *this;
  for (Int &c : r.coef_) c = -c;
  return r;
}

RingElement RingElement::operator*(const RingElement &o) const {
  if (grp_ != o.grp_) throw std::invalid_argument("group mismatch");
  RingElement r(grp_);
  long n = grp_.order();
  for (long a = 0; a < n; a++) {
    if (coef_[a] == 0) continue;
    for (long b = 0; b < n; b++) {
      if (o.coef_[b] == 0) continue;
      r.coef_[grp_.mul(a, b)] += coef_[a] * o.coef_[b];
    }
  }
  return r;
}

std::string RingElement::str() const {
  std::ostringstream os;
  bool first = true;
  long n = grp_.order();
  for (long i = 0; i < n; i++) {
    if (coef_[i] == 0) continue;
    Int c = coef_[i];
    if (first) {
      if (c < 0) { os << "-"; c = -c; }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    std::vector<int> v = grp_.element(i);
    bool is_id = true;
    for (int x : v) is_id &= (x == 0);
    if (is_id) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << "*";
      os << "g(";
      for (size_t j = 0; j < v.size(); j++) os << (j ? "," : "") << v[j];
      os << ")";
    }
  }
  if (first) os << "0";
  return os.str();
}

RingElement norm_of(const FiniteAbelianGroup &g, long elem_idx) {
  RingElement e(g);
  long cur = g.index(std::vector<int>(g.r, 0));
  for (int v = 0; v < g.k; v++) {
    e[cur] += 1;
    cur = g.mul(cur, elem_idx);
  }
  return e;
}

RingElement norm_on_generator(const FiniteAbelianGroup &g, int j) {
  return norm_of(g, g.generator(j));
}

RingElement norm_on_inverse_product(const FiniteAbelianGroup &g) {
  std::vector<int> v(g.r, -1);
  return norm_of(g, g.index(v));
}

Int augmentation(const RingElement &e) {
  Int s = 0;
  long n = e.group().order();
  for (long i = 0; i < n; i++) s += e[i];
  return s;
}

IntMatrix regular_representation(const RingElement &e) {
  const FiniteAbelianGroup &g = e.group();
  long n = g.order();
  IntMatrix m((int)n, (int)n);
  for (long a = 0; a < n; a++) {
    if (e[a] == 0) continue;
    for (long h = 0; h < n; h++) m.at((int)g.mul(a, h), (int)h) += e[a];
  }
  return m;
}

uint64_t character_value(const Fp &F, uint64_t zeta, int k,
                         const std::vector<int> &i, const std::vector<int> &h) {
  if (i.size() != h.size()) throw std::invalid_argument("character arity mismatch");
  long e = 0;
  for (size_t j = 0; j < i.size(); j++) e += (long)i[j] * h[j];
  e %= k;
  if (e < 0) e += k;
  return F.pow(zeta, (uint64_t)e);
}

}  // namespace covhom
