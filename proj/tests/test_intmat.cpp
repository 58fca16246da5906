#include <random>

#include "covhom/fp.hpp"
#include "covhom/intmat.hpp"
#include "doctest.h"

using namespace covhom;

namespace {

IntMatrix random_matrix(std::mt19937 &rng, int r, int c, int lim) {
  IntMatrix m(r, c);
  std::uniform_int_distribution<int> d(-lim, lim);
  for (auto &x : m.a) x = d(rng);
  return m;
}

bool unimodular(const IntMatrix &m) {
  if (m.rows != m.cols) return false;
  SmithForm s = smith_normal_form(m);
  if (s.rank != m.rows) return false;
  for (const Int &f : s.factors)
    if (f != 1) return false;
  return true;
}

IntMatrix diag_of(const SmithForm &s, int rows, int cols) {
  IntMatrix d(rows, cols);
  for (int i = 0; i < s.rank; i++) d.at(i, i) = s.factors[i];
  return d;
}

}  // namespace

TEST_CASE("smith normal form on known matrices") {
  IntMatrix m(2, 2);
  m.at(0, 0) = 2; m.at(0, 1) = 4; m.at(1, 0) = 6; m.at(1, 1) = 8;
  SmithForm s = smith_normal_form(m);
  REQUIRE(s.rank == 2);
  CHECK(s.factors[0] == 2);
  CHECK(s.factors[1] == 4);

  IntMatrix d(3, 3);
  d.at(0, 0) = 6; d.at(1, 1) = 10; d.at(2, 2) = 15;
  s = smith_normal_form(d);
  REQUIRE(s.rank == 3);
  CHECK(s.factors == std::vector<Int>{1, 30, 30});

  IntMatrix z(2, 3);
  s = smith_normal_form(z);
  CHECK(s.rank == 0);
}

TEST_CASE("smith transforms: U*A*V = D, all unimodular, inverses consistent") {
  std::mt19937 rng(12345);
  for (int it = 0; it < 40; it++) {
    int r = 1 + (int)(rng() % 5), c = 1 + (int)(rng() % 5);
    IntMatrix a = random_matrix(rng, r, c, 9);
    SmithForm s = smith_normal_form(a, true);
    IntMatrix d = diag_of(s, r, c);
    CHECK(*s.U * a * *s.V == d);
    CHECK(unimodular(*s.U));
    CHECK(unimodular(*s.V));
    CHECK(*s.Uinv * *s.U == IntMatrix::identity(r));
    CHECK(*s.V * *s.Vinv == IntMatrix::identity(c));
    // divisibility chain
    for (int i = 0; i + 1 < s.rank; i++) CHECK(s.factors[i + 1] % s.factors[i] == 0);
  }
}

TEST_CASE("rank over Q agrees with rank mod a large prime") {
  std::mt19937 rng(54321);
  for (int it = 0; it < 30; it++) {
    IntMatrix a = random_matrix(rng, 4 + (int)(rng() % 4), 4 + (int)(rng() % 4), 6);
    CHECK(rank_exact(a) == rank_mod_p(FpMatrix::reduce(a, 1000003)));
  }
}

TEST_CASE("64-bit overflow falls back to exact arithmetic") {
  // Entries near 2^62 force the fallback path immediately.
  IntMatrix m(2, 2);
  Int big = Int(1) << 61;
  m.at(0, 0) = big; m.at(0, 1) = big + 1; m.at(1, 0) = big - 1; m.at(1, 1) = big;
  SmithForm s = smith_normal_form(m, true);
  CHECK(s.rank == 2);
  CHECK(*s.U * m * *s.V == diag_of(s, 2, 2));
  // det = big^2 - (big^2 - 1) = 1, so the matrix is unimodular
  CHECK(s.factors == std::vector<Int>{1, 1});
}

TEST_CASE("matrix text format round trip") {
  std::mt19937 rng(7);
  IntMatrix a = random_matrix(rng, 3, 4, 20);
  CHECK(IntMatrix::parse(a.text()) == a);
  CHECK(IntMatrix::parse("2 2\n1 2\n3 4\n").at(1, 0) == 3);
  CHECK_THROWS(IntMatrix::parse("2 2\n1 2 3"));
}

TEST_CASE("fp kernel basis") {
  std::mt19937 rng(99);
  Fp F{97};
  for (int it = 0; it < 30; it++) {
    IntMatrix a = random_matrix(rng, 3 + (int)(rng() % 3), 4 + (int)(rng() % 3), 8);
    FpMatrix m = FpMatrix::reduce(a, F.p);
    FpMatrix K = kernel_basis(m);
    CHECK(K.cols == m.cols - rank_mod_p(m));
    FpMatrix prod = m * K;
    for (uint64_t x : prod.a) CHECK(x == 0);
    CHECK(rank_mod_p(K) == K.cols);
  }
}

TEST_CASE("incremental echelon matches batch rank") {
  std::mt19937 rng(2024);
  Fp F{1009};
  for (int it = 0; it < 20; it++) {
    int n = 6, cols = 9;
    IntMatrix a = random_matrix(rng, n, cols, 5);
    FpMatrix m = FpMatrix::reduce(a, F.p);
    Echelon e(F, n);
    for (int c = 0; c < cols; c++) {
      std::vector<uint64_t> v(n);
      for (int i = 0; i < n; i++) v[i] = m.at(i, c);
      e.add(v);
    }
    CHECK(e.dim() == rank_mod_p(m));
    // every column reduces to zero against the finished echelon
    for (int c = 0; c < cols; c++) {
      std::vector<uint64_t> v(n), coeffs;
      for (int i = 0; i < n; i++) v[i] = m.at(i, c);
      e.reduce(v, &coeffs);
      for (uint64_t x : v) CHECK(x == 0);
    }
  }
}

TEST_CASE("prime and root helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(character_prime(3, 9) == 13);
  CHECK(character_prime(3, 9, 1) == 19);
  CHECK(character_prime(4, 256) == 257);
  CHECK(character_prime(2, 4) == 5);
  for (int k : {2, 3, 4, 5}) {
    uint64_t p = character_prime(k, 50);
    uint64_t z = root_of_unity(p, k);
    Fp F{p};
    CHECK(F.pow(z, k) == 1);
    for (int j = 1; j < k; j++) CHECK(F.pow(z, j) != 1);
  }
}
