#include "covhom/intmat.hpp"

#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace covhom {

IntMatrix IntMatrix::operator*(const IntMatrix &o) const {
  if (cols != o.rows) throw std::invalid_argument("matrix product shape mismatch");
  IntMatrix r(rows, o.cols);
  for (int i = 0; i < rows; i++)
    for (int k = 0; k < cols; k++) {
      const Int &x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols; j++) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix &o) const {
  if (rows != o.rows || cols != o.cols) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix r(rows, cols);
  for (size_t i = 0; i < a.size(); i++) r.a[i] = a[i] - o.a[i];
  return r;
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix r(n, n);
  for (int i = 0; i < n; i++) r.at(i, i) = 1;
  return r;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix r(cols, rows);
  for (int i = 0; i < rows; i++)
    for (int j = 0; j < cols; j++) r.at(j, i) = at(i, j);
  return r;
}

std::string IntMatrix::text() const {
  std::ostringstream os;
  os << rows << " " << cols << "\n";
  for (int i = 0; i < rows; i++) {
    for (int j = 0; j < cols; j++) os << (j ? " " : "") << at(i, j).get_str();
    os << "\n";
  }
  return os.str();
}

IntMatrix IntMatrix::parse(const std::string &text) {
  std::istringstream is(text);
  int r, c;
  if (!(is >> r >> c) || r < 0 || c < 0) throw std::invalid_argument("bad matrix header");
  IntMatrix m(r, c);
  std::string tok;
  for (size_t i = 0; i < m.a.size(); i++) {
    if (!(is >> tok)) throw std::invalid_argument("matrix entries truncated");
    m.a[i] = Int(tok);
  }
  return m;
}

namespace {

struct snf_overflow {};

constexpr long long kLim = 1LL << 62;

inline long long chk(__int128 v) {
  if (v > kLim || v < -kLim) throw snf_overflow{};
  return (long long)v;
}

inline void submul(long long &a, long long q, long long b) { a = chk((__int128)a - (__int128)q * b); }
inline void submul(Int &a, const Int &q, const Int &b) { a -= q * b; }
inline bool abs_less(long long a, long long b) {
  unsigned long long ua = a < 0 ? -(unsigned long long)a : a;
  unsigned long long ub = b < 0 ? -(unsigned long long)b : b;
  return ua < ub;
}
inline bool abs_less(const Int &a, const Int &b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0;
}

// Row/column elimination to diagonal form with the divisibility chain
// enforced before each pivot is finalized.  U*A*V = D throughout.
template <class T>
struct SnfWorker {
  int m, n;
  bool want;
  std::vector<std::vector<T>> A, U, Uinv, V, Vinv;

  SnfWorker(const IntMatrix &src, bool transforms) : m(src.rows), n(src.cols), want(transforms) {
    A.assign(m, std::vector<T>(n, T(0)));
    for (int i = 0; i < m; i++)
      for (int j = 0; j < n; j++) A[i][j] = from_int(src.at(i, j));
    if (want) {
      U = eye(m); Uinv = eye(m);
      V = eye(n); Vinv = eye(n);
    }
  }

  static T from_int(const Int &x) {
    if constexpr (std::is_same_v<T, long long>) {
      if (!x.fits_slong_p()) throw snf_overflow{};
      return x.get_si();
    } else {
      return x;
    }
  }

  static std::vector<std::vector<T>> eye(int k) {
    std::vector<std::vector<T>> e(k, std::vector<T>(k, T(0)));
    for (int i = 0; i < k; i++) e[i][i] = T(1);
    return e;
  }

  void swap_rows(int i, int j) {
    if (i == j) return;
    A[i].swap(A[j]);
    if (want) {
      U[i].swap(U[j]);
      for (int r = 0; r < m; r++) std::swap(Uinv[r][i], Uinv[r][j]);
    }
  }

  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < m; r++) std::swap(A[r][i], A[r][j]);
    if (want) {
      for (int r = 0; r < n; r++) std::swap(V[r][i], V[r][j]);
      Vinv[i].swap(Vinv[j]);
    }
  }

  // row i -= q * row t
  void row_sub(int i, int t, const T &q, int from_col) {
    if (q == T(0)) return;
    for (int j = from_col; j < n; j++)
      if (A[t][j] != T(0)) submul(A[i][j], q, A[t][j]);
    if (want) {
      for (int j = 0; j < m; j++)
        if (U[t][j] != T(0)) submul(U[i][j], q, U[t][j]);
      T nq = T(0) - q;
      for (int r = 0; r < m; r++)
        if (Uinv[r][i] != T(0)) submul(Uinv[r][t], nq, Uinv[r][i]);
    }
  }

  // col j -= q * col t
  void col_sub(int j, int t, const T &q, int from_row) {
    if (q == T(0)) return;
    for (int i = from_row; i < m; i++)
      if (A[i][t] != T(0)) submul(A[i][j], q, A[i][t]);
    if (want) {
      for (int r = 0; r < n; r++)
        if (V[r][t] != T(0)) submul(V[r][j], q, V[r][t]);
      T nq = T(0) - q;
      for (int c = 0; c < n; c++)
        if (Vinv[j][c] != T(0)) submul(Vinv[t][c], nq, Vinv[j][c]);
    }
  }

  void negate_row(int t) {
    for (int j = 0; j < n; j++) A[t][j] = T(0) - A[t][j];
    if (want) {
      for (int j = 0; j < m; j++) U[t][j] = T(0) - U[t][j];
      for (int r = 0; r < m; r++) Uinv[r][t] = T(0) - Uinv[r][t];
    }
  }

  bool find_pivot(int t, int &pi, int &pj) {
    bool found = false;
    for (int i = t; i < m; i++)
      for (int j = t; j < n; j++)
        if (A[i][j] != T(0) && (!found || abs_less(A[i][j], A[pi][pj]))) {
          pi = i; pj = j; found = true;
        }
    return found;
  }

  void run(SmithForm &out) {
    int t = 0;
    int lim = m < n ? m : n;
    while (t < lim) {
      int pi, pj;
      if (!find_pivot(t, pi, pj)) break;
      swap_rows(t, pi);
      swap_cols(t, pj);
      for (;;) {
        bool dirty = false;
        for (int i = t + 1; i < m; i++) {
          if (A[i][t] == T(0)) continue;
          T q = A[i][t] / A[t][t];
          row_sub(i, t, q, t);
          if (A[i][t] != T(0)) { swap_rows(i, t); dirty = true; }
        }
        if (dirty) continue;
        for (int j = t + 1; j < n; j++) {
          if (A[t][j] == T(0)) continue;
          T q = A[t][j] / A[t][t];
          col_sub(j, t, q, t);
          if (A[t][j] != T(0)) { swap_cols(j, t); dirty = true; }
        }
        if (!dirty) break;
      }
      // Pivot must divide every remaining entry before it is frozen.
      bool fixed = false;
      for (int i = t + 1; i < m && !fixed; i++)
        for (int j = t + 1; j < n && !fixed; j++)
          if (A[i][j] % A[t][t] != T(0)) {
            row_sub(t, i, T(0) - T(1), t);  // row t += row i
            fixed = true;
          }
      if (fixed) continue;
      if (A[t][t] < T(0)) negate_row(t);
      t++;
    }
    out.rank = t;
    out.factors.clear();
    for (int i = 0; i < t; i++) out.factors.push_back(to_int(A[i][i]));
    if (want) {
      out.U = to_mat(U);
      out.Uinv = to_mat(Uinv);
      out.V = to_mat(V);
      out.Vinv = to_mat(Vinv);
    }
  }

  static Int to_int(const T &x) {
    if constexpr (std::is_same_v<T, long long>) return Int((long)x);
    else return x;
  }

  static IntMatrix to_mat(const std::vector<std::vector<T>> &v) {
    IntMatrix r((int)v.size(), v.empty() ? 0 : (int)v[0].size());
    for (int i = 0; i < r.rows; i++)
      for (int j = 0; j < r.cols; j++) r.at(i, j) = to_int(v[i][j]);
    return r;
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix &A, bool transforms) {
  SmithForm out;
  try {
    SnfWorker<long long> w(A, transforms);
    w.run(out);
    return out;
  } catch (const snf_overflow &) {
    // 64-bit fast path overflowed; redo exactly.
  }
  SnfWorker<Int> w(A, transforms);
  w.run(out);
  return out;
}

int rank_exact(const IntMatrix &A) { return smith_normal_form(A, false).rank; }

}  // namespace covhom
