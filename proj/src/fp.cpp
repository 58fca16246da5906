#include "covhom/fp.hpp"

#include <stdexcept>

namespace covhom {

uint64_t Fp::pow(uint64_t a, uint64_t e) const {
  uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

uint64_t Fp::from_int(const Int &x) const {
  Int r = x % (long)p;
  if (r < 0) r += (long)p;
  return r.get_ui();
}

FpMatrix FpMatrix::reduce(const IntMatrix &m, uint64_t p) {
  FpMatrix r(Fp{p}, m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); i++) r.a[i] = r.F.from_int(m.a[i]);
  return r;
}

FpMatrix FpMatrix::identity(Fp f, int n) {
  FpMatrix r(f, n, n);
  for (int i = 0; i < n; i++) r.at(i, i) = 1;
  return r;
}

FpMatrix FpMatrix::operator*(const FpMatrix &o) const {
  if (cols != o.rows || F.p != o.F.p) throw std::invalid_argument("fp product mismatch");
  FpMatrix r(F, rows, o.cols);
  for (int i = 0; i < rows; i++)
    for (int k = 0; k < cols; k++) {
      uint64_t x = at(i, k);
      if (!x) continue;
      const uint64_t *src = &o.a[(size_t)k * o.cols];
      uint64_t *dst = &r.a[(size_t)i * o.cols];
      for (int j = 0; j < o.cols; j++) dst[j] = (dst[j] + x * src[j]) % F.p;
    }
  return r;
}

FpMatrix FpMatrix::operator+(const FpMatrix &o) const {
  FpMatrix r = *this;
  for (size_t i = 0; i < a.size(); i++) r.a[i] = F.add(r.a[i], o.a[i]);
  return r;
}

FpMatrix FpMatrix::operator-(const FpMatrix &o) const {
  FpMatrix r = *this;
  for (size_t i = 0; i < a.size(); i++) r.a[i] = F.sub(r.a[i], o.a[i]);
  return r;
}

FpMatrix FpMatrix::scaled(uint64_t c) const {
  FpMatrix r = *this;
  for (auto &x : r.a) x = F.mul(x, c);
  return r;
}

namespace {

// Forward elimination; returns pivot column list, m left in echelon form.
std::vector<int> echelonize(FpMatrix &m) {
  const Fp F = m.F;
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; col++) {
    int piv = -1;
    for (int i = row; i < m.rows; i++)
      if (m.at(i, col)) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = col; j < m.cols; j++) std::swap(m.at(piv, j), m.at(row, j));
    uint64_t inv = F.inv(m.at(row, col));
    for (int j = col; j < m.cols; j++) m.at(row, j) = F.mul(m.at(row, j), inv);
    for (int i = 0; i < m.rows; i++) {
      if (i == row) continue;
      uint64_t f = m.at(i, col);
      if (!f) continue;
      uint64_t nf = F.p - f;
      const uint64_t *src = &m.a[(size_t)row * m.cols];
      uint64_t *dst = &m.a[(size_t)i * m.cols];
      for (int j = col; j < m.cols; j++) dst[j] = (dst[j] + nf * src[j]) % F.p;
    }
    pivots.push_back(col);
    row++;
  }
  return pivots;
}

}  // namespace

int rank_mod_p(FpMatrix m) { return (int)echelonize(m).size(); }

FpMatrix kernel_basis(FpMatrix m) {
  const Fp F = m.F;
  int n = m.cols;
  std::vector<int> pivots = echelonize(m);
  std::vector<char> is_pivot(n, 0);
  for (int c : pivots) is_pivot[c] = 1;
  FpMatrix K(F, n, n - (int)pivots.size());
  int out = 0;
  for (int free_col = 0; free_col < n; free_col++) {
    if (is_pivot[free_col]) continue;
    K.at(free_col, out) = 1;
    for (size_t r = 0; r < pivots.size(); r++) {
      uint64_t v = m.at((int)r, free_col);
      if (v) K.at(pivots[r], out) = F.neg(v);
    }
    out++;
  }
  return K;
}

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; d++)
    if (n % d == 0) return false;
  return true;
}

uint64_t least_primitive_root(uint64_t p) {
  if (p == 2) return 1;
  uint64_t phi = p - 1;
  std::vector<uint64_t> primes;
  uint64_t m = phi;
  for (uint64_t d = 2; d * d <= m; d++)
    if (m % d == 0) {
      primes.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) primes.push_back(m);
  Fp F{p};
  for (uint64_t g = 2; g < p; g++) {
    bool ok = true;
    for (uint64_t q : primes)
      if (F.pow(g, phi / q) == 1) { ok = false; break; }
    if (ok) return g;
  }
  throw std::logic_error("no primitive root found");
}

uint64_t root_of_unity(uint64_t p, int k) {
  if ((p - 1) % (uint64_t)k != 0) throw std::invalid_argument("k does not divide p-1");
  return Fp{p}.pow(least_primitive_root(p), (p - 1) / (uint64_t)k);
}

uint64_t character_prime(int k, uint64_t floor_excl, int skip) {
  for (uint64_t p = floor_excl + 1;; p++) {
    if ((p - 1) % (uint64_t)k == 0 && is_prime(p)) {
      if (skip == 0) return p;
      skip--;
    }
  }
}

void Echelon::reduce(std::vector<uint64_t> &v, std::vector<uint64_t> *coeffs) const {
  if (coeffs) coeffs->assign(cols.size(), 0);
  for (size_t c = 0; c < cols.size(); c++) {
    uint64_t f = v[pivot_row[c]];
    if (coeffs) (*coeffs)[c] = f;
    if (!f) continue;
    uint64_t nf = F.p - f;
    const std::vector<uint64_t> &col = cols[c];
    for (int i = 0; i < n; i++)
      if (col[i]) v[i] = (v[i] + nf * col[i]) % F.p;
  }
}

bool Echelon::add(std::vector<uint64_t> v) {
  reduce(v);
  int pr = -1;
  for (int i = 0; i < n; i++)
    if (v[i]) { pr = i; break; }
  if (pr < 0) return false;
  uint64_t inv = F.inv(v[pr]);
  for (auto &x : v) x = F.mul(x, inv);
  cols.push_back(std::move(v));
  pivot_row.push_back(pr);
  return true;
}

}  // namespace covhom
