#include <random>

#include "covhom/fox.hpp"
#include "doctest.h"

using namespace covhom;

namespace {

// image of a word over the s-symbol alphabet in the deck group
long word_image(const CoverSpec &spec, const FiniteAbelianGroup &H, const Word &w) {
  long cur = 0;
  for (const Letter &l : w.letters()) {
    long g = l.exp > 0 ? deck_image(spec, H, l.sym) : H.inverse(deck_image(spec, H, l.sym));
    Int reps = abs(l.exp);
    for (Int v = 0; v < reps; v++) cur = H.mul(cur, g);
  }
  return cur;
}

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

TEST_CASE("fox derivative basics") {
  CoverSpec spec{3, 3, CoverKind::Full};
  FiniteAbelianGroup H = deck_group(spec);
  Word x1 = Word::generator(3, 1), x2 = Word::generator(3, 2);
  CHECK(fox_derivative(spec, x1, 1) == RingElement::unit(H, 0));
  CHECK(fox_derivative(spec, x1, 2).is_zero());
  // d(x^-1)/dx = -x^-1
  RingElement d = fox_derivative(spec, x1.inverse(), 1);
  CHECK(d == -RingElement::unit(H, H.inverse(H.generator(1))));
  // d(x^k)/dx = 1 + x + ... + x^{k-1}
  CHECK(fox_derivative(spec, x1.pow(3), 1) == norm_on_generator(H, 1));
  CHECK(fox_derivative(spec, x1 * x2, 2) == RingElement::unit(H, H.generator(1)));
}

TEST_CASE("fox product rule on random words") {
  std::mt19937 rng(12345);
  for (CoverKind kind : {CoverKind::Full, CoverKind::Cyclic}) {
    CoverSpec spec{4, 2, kind};
    FiniteAbelianGroup H = deck_group(spec);
    for (int it = 0; it < 60; it++) {
      Word u = random_word(rng, 4, 5), v = random_word(rng, 4, 5);
      for (int j = 1; j <= 4; j++) {
        RingElement lhs = fox_derivative(spec, u * v, j);
        RingElement rhs = fox_derivative(spec, u, j) +
                          RingElement::unit(H, word_image(spec, H, u)) * fox_derivative(spec, v, j);
        CHECK(lhs == rhs);
      }
      // derivative of a product of inverse pairs vanishes
      Word w = u * u.inverse();
      for (int j = 1; j <= 4; j++) CHECK(fox_derivative(spec, w, j).is_zero());
    }
  }
}

TEST_CASE("matrix closed form: diagonal norms and telescoping last column") {
  for (CoverKind kind : {CoverKind::Full, CoverKind::Cyclic})
    for (int s : {3, 4})
      for (int k : {2, 3}) {
        CoverSpec spec{s, k, kind};
        AlexanderMatrix m = build_alexander_matrix(spec);
        const FiniteAbelianGroup &H = m.H;
        for (int i = 1; i <= s; i++)
          for (int j = 1; j <= s; j++) {
            RingElement expect(H);
            if (i == j)
              expect = norm_of(H, deck_image(spec, H, j));
            CHECK(m.at(i - 1, j - 1) == expect);
          }
        // last column: row i carries the prefix image x_1 ... x_{i-1}
        long pre = 0;
        for (int i = 1; i <= s; i++) {
          CHECK(m.at(i - 1, s) == RingElement::unit(H, pre));
          pre = H.mul(pre, deck_image(spec, H, i));
        }
      }
}

TEST_CASE("cyclic matrix over Z[Z/2] for s=4") {
  CoverSpec spec{4, 2, CoverKind::Cyclic};
  AlexanderMatrix m = build_alexander_matrix(spec);
  FiniteAbelianGroup H = m.H;
  RingElement one_plus_t = RingElement::unit(H, 0) + RingElement::unit(H, H.index({1}));
  for (int j = 0; j < 4; j++) CHECK(m.at(j, j) == one_plus_t);
  // last column (1, t, t^2, t^3) with t^2 = 1
  CHECK(m.at(0, 4) == RingElement::unit(H, 0));
  CHECK(m.at(1, 4) == RingElement::unit(H, H.index({1})));
  CHECK(m.at(2, 4) == RingElement::unit(H, 0));
  CHECK(m.at(3, 4) == RingElement::unit(H, H.index({1})));
}

TEST_CASE("expanded shape and rank for the smallest full cover") {
  CoverSpec spec{3, 2, CoverKind::Full};
  IntMatrix q = build_alexander_matrix(spec).expanded();
  CHECK(q.rows == 12);
  CHECK(q.cols == 16);
  CHECK(smith_normal_form(q).rank == 9);
}

TEST_CASE("crowell rank bookkeeping, full covers") {
  struct Row { int s, k; long rank_Q, rank_Apsi, rank_H1; };
  // closed forms: rank_Q = s k^{s-2} + k^{s-1} - 1, etc.
  std::vector<Row> rows = {
      {3, 2, 9, 3, 0}, {3, 3, 17, 10, 2}, {4, 2, 23, 9, 2}, {4, 3, 62, 46, 20}};
  for (const Row &r : rows) {
    HomologyReport rep = crowell_ranks(CoverSpec{r.s, r.k, CoverKind::Full});
    CHECK(rep.rank_Q == r.rank_Q);
    CHECK(rep.rank_Apsi == r.rank_Apsi);
    CHECK(rep.rank_H1 == r.rank_H1);
    CHECK(rep.formulas_match);
    CHECK(rep.genus_consistent);
    CHECK(rep.rank_checked_mod_p);
    CHECK(rep.twice_genus_rh == rep.rank_H1);
  }
  // genus spot values
  CHECK(crowell_ranks(CoverSpec{3, 2, CoverKind::Full}).twice_genus_rh == 0);
  CHECK(crowell_ranks(CoverSpec{3, 3, CoverKind::Full}).twice_genus_rh == 2);
  CHECK(crowell_ranks(CoverSpec{4, 3, CoverKind::Full}).twice_genus_rh == 20);
}

TEST_CASE("crowell rank bookkeeping, cyclic covers") {
  // gcd(s-1,k)=1: the closed forms hold
  {
    HomologyReport rep = crowell_ranks(CoverSpec{3, 3, CoverKind::Cyclic});
    CHECK(rep.rank_Apsi == 4);
    CHECK(rep.rank_H1 == 2);
    CHECK(rep.formulas_match);
    CHECK(rep.genus_consistent);
  }
  {
    HomologyReport rep = crowell_ranks(CoverSpec{4, 2, CoverKind::Cyclic});
    CHECK(rep.rank_Q == 5);
    CHECK(rep.rank_Apsi == 3);
    CHECK(rep.rank_H1 == 2);
    CHECK(rep.formulas_match);
    CHECK(rep.genus_consistent);
  }
  // gcd(s-1,k)>1: x_s is not fully branched, the closed forms overshoot by
  // gcd-1 while the three computed genus routes still agree.
  // Hand-computed oracles (frozen before implementation):
  //   s=4,k=3: rank_Q = 1+1+1+3+2 = 8, rank_Apsi = 4, rank_H1 = 2
  //   s=5,k=2: rank_Q = 4+2+1 = 7,     rank_Apsi = 3, rank_H1 = 2
  //   s=3,k=2: rank_Q = 1+1+2+1 = 5,   rank_Apsi = 1, rank_H1 = 0
  struct Row { int s, k; long rank_Q, rank_Apsi, rank_H1; };
  for (const Row &r : std::vector<Row>{{4, 3, 8, 4, 2}, {5, 2, 7, 3, 2}, {3, 2, 5, 1, 0}}) {
    HomologyReport rep = crowell_ranks(CoverSpec{r.s, r.k, CoverKind::Cyclic});
    CHECK(rep.rank_Q == r.rank_Q);
    CHECK(rep.rank_Apsi == r.rank_Apsi);
    CHECK(rep.rank_H1 == r.rank_H1);
    CHECK_FALSE(rep.formulas_match);
    CHECK(rep.genus_consistent);
    long defect = std::gcd(r.s - 1, r.k) - 1;
    CHECK(rep.rank_Apsi_formula - rep.rank_Apsi == defect);
    CHECK(rep.rank_H1_formula - rep.rank_H1 == defect);
  }
}

TEST_CASE("integral H1 torsion report") {
  for (int s : {3, 4})
    for (int k : {2, 3}) {
      TorsionReport t = h1_torsion(CoverSpec{s, k, CoverKind::Full});
      HomologyReport rep = crowell_ranks(CoverSpec{s, k, CoverKind::Full});
      CHECK(t.free_rank == rep.rank_H1);
      // torsion factors are reported, never silently asserted away; flag
      // must fire exactly when a factor shares a divisor with k
      bool has_k_factor = false;
      for (const Int &f : t.torsion) has_k_factor |= gcd(f, Int(k)) != 1;
      CHECK(t.k_torsion_flagged == has_k_factor);
    }
}

TEST_CASE("homology space mod p") {
  for (int s : {3, 4})
    for (int k : {2, 3}) {
      CoverSpec spec{s, k, CoverKind::Full};
      uint64_t p = character_prime(k, (uint64_t)spec.order());
      HomologySpace hs = homology_space(spec, p);
      HomologyReport rep = crowell_ranks(spec);
      CHECK(hs.dim == rep.rank_H1);
      CHECK(hs.q_ech.dim() == rep.rank_Q);
      // deck action on the quotient: order divides k, matrices commute
      std::vector<FpMatrix> act;
      for (int j = 1; j <= spec.deck_rank(); j++) act.push_back(hs.action(j));
      FpMatrix id = FpMatrix::identity(hs.F, hs.dim);
      for (size_t i = 0; i < act.size(); i++) {
        FpMatrix pw = id;
        for (int e = 0; e < k; e++) pw = pw * act[i];
        CHECK(pw == id);
        for (size_t j = i + 1; j < act.size(); j++) CHECK(act[i] * act[j] == act[j] * act[i]);
      }
    }
}

TEST_CASE("im(Q) block structure: norm blocks and last block overlap in rank 1") {
  for (int s : {3, 4})
    for (int k : {2, 3}) {
      CoverSpec spec{s, k, CoverKind::Full};
      long h = spec.order();
      IntMatrix q = build_alexander_matrix(spec).expanded();
      uint64_t p = 1000003;
      FpMatrix all = FpMatrix::reduce(q, p);
      FpMatrix first(Fp{p}, q.rows, (int)(s * h)), last(Fp{p}, q.rows, (int)h);
      for (int r = 0; r < q.rows; r++) {
        for (long c = 0; c < s * h; c++) first.at(r, (int)c) = all.at(r, (int)c);
        for (long c = 0; c < h; c++) last.at(r, (int)c) = all.at(r, (int)(s * h + c));
      }
      long ks2 = h / k;
      CHECK(rank_mod_p(first) == s * ks2);
      CHECK(rank_mod_p(last) == h);
      CHECK(s * ks2 + h - rank_mod_p(all) == 1);
    }
}

TEST_CASE("theta2 rank is |H0|-1") {
  for (CoverKind kind : {CoverKind::Full, CoverKind::Cyclic})
    for (int s : {3, 4})
      for (int k : {2, 3}) {
        CoverSpec spec{s, k, kind};
        IntMatrix th = theta2_expanded(spec);
        CHECK(th.rows == spec.order());
        CHECK(th.cols == spec.s * spec.order());
        CHECK(rank_exact(th) == spec.order() - 1);
      }
}
