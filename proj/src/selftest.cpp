#include "covhom/selftest.hpp"

#include <chrono>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>

#include "covhom/burau.hpp"
#include "covhom/characters.hpp"
#include "covhom/fermat.hpp"
#include "covhom/magnus.hpp"

namespace covhom {

namespace {

constexpr unsigned kSeed = 12345;

std::vector<std::pair<int, int>> grid() {
  std::vector<std::pair<int, int>> g;
  for (int s : {3, 4, 5})
    for (int k : {2, 3, 4}) {
      long h = 1;
      for (int i = 0; i < s - 1; i++) h *= k;
      if (h <= 1024) g.push_back({s, k});
    }
  return g;
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

struct Check {
  bool ok = true;
  std::string detail;
  long asserts = 0;

  void expect(bool cond, const std::string &msg) {
    asserts++;
    if (!cond && ok) {
      ok = false;
      detail = msg;
    }
  }
  std::string summary() const {
    if (ok) {
      std::ostringstream os;
      os << asserts << " exact checks";
      return os.str();
    }
    return detail;
  }
};

template <class F>
CriterionResult run_one(int id, const std::string &name, F body) {
  auto t0 = std::chrono::steady_clock::now();
  Check c;
  try {
    body(c);
  } catch (const std::exception &e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  auto t1 = std::chrono::steady_clock::now();
  return CriterionResult{id, name, c.ok, c.summary(),
                         std::chrono::duration<double>(t1 - t0).count()};
}

std::string point(int s, int k) {
  std::ostringstream os;
  os << "(s=" << s << ",k=" << k << ")";
  return os.str();
}

void criterion_schreier(Check &c) {
  for (auto [s, k] : grid()) {
    Cover cover(CoverSpec{s, k, CoverKind::Full});
    long h = cover.order();
    long expect = (long)(s - 2) * h + 1;
    c.expect((long)cover.generators().size() == expect,
             point(s, k) + " generator count != (s-2)k^{s-1}+1");
    if (s == 3) {
      FermatFamilies f = fermat_generator_families(k);
      c.expect((long)f.A1.size() == k && (long)f.A2.size() == (long)(k - 1) * (k - 1) &&
                   (long)f.A3.size() == k,
               point(s, k) + " family sizes != (n, (n-1)^2, n)");
      std::set<std::string> words, schreier;
      for (const auto &fam : {f.A1, f.A2, f.A3})
        for (const Word &w : fam) words.insert(w.str());
      for (const auto &g : cover.generators()) schreier.insert(g.value.str());
      c.expect(words == schreier, point(s, k) + " families != Schreier set");
    }
  }
}

void criterion_ranks(Check &c) {
  for (auto [s, k] : grid()) {
    HomologyReport r = crowell_ranks(CoverSpec{s, k, CoverKind::Full});
    long h = r.deck_order, hk = h / k;
    c.expect(r.rank_Q == (long)s * hk + h - 1, point(s, k) + " rank_Q != s k^{s-2}+k^{s-1}-1");
    c.expect(r.rank_Apsi == (long)(s - 1) * h - (long)s * hk + 1,
             point(s, k) + " rank_Apsi formula mismatch");
    c.expect(r.rank_checked_mod_p, point(s, k) + " SNF rank not reproduced mod p");
    c.expect(r.formulas_match, point(s, k) + " closed forms disagree with SNF");
  }
}

void criterion_genus(Check &c) {
  for (auto [s, k] : grid()) {
    HomologyReport r = crowell_ranks(CoverSpec{s, k, CoverKind::Full});
    c.expect(r.rank_H1 == r.twice_genus_rh && r.rank_H1 == r.twice_genus_schreier,
             point(s, k) + " triple genus disagreement");
    if (s == 3 && k == 3) c.expect(r.rank_H1 == 2, "(3,3) rank_H1 != 2");
    if (s == 4 && k == 2) c.expect(r.rank_H1 == 2, "(4,2) rank_H1 != 2");
    if (s == 4 && k == 3) c.expect(r.rank_H1 == 20, "(4,3) rank_H1 != 20");
  }
}

void criterion_characters(Check &c) {
  for (auto [s, k] : grid())
    for (int skip : {0, 1}) {
      CoverSpec spec{s, k, CoverKind::Full};
      CharacterField cf = character_field(spec, skip);
      HomologySpace hs = homology_space(spec, cf.p);
      std::vector<CharacterIndex> table = decomposition_table(spec);
      std::vector<int> dims = isotypic_all(hs, cf);
      long total = 0;
      for (size_t idx = 0; idx < table.size(); idx++) {
        c.expect(dims[idx] == table[idx].C,
                 point(s, k) + " isotypic dim != C at an index, p=" + std::to_string(cf.p));
        total += dims[idx];
      }
      HomologyReport r = crowell_ranks(spec);
      c.expect(total == r.rank_H1, point(s, k) + " sum of C != rank_H1");
    }
  // s=3, k=4: support {(i,j): 1<=i,j<=3, i+j != 4}, multiplicity 1
  std::set<std::pair<int, int>> support, expect;
  for (const CharacterIndex &ci : decomposition_table(CoverSpec{3, 4, CoverKind::Full}))
    if (ci.C > 0) {
      c.expect(ci.C == 1, "(3,4) multiplicity != 1 on the support");
      support.insert({ci.i[0], ci.i[1]});
    }
  for (int i = 1; i <= 3; i++)
    for (int j = 1; j <= 3; j++)
      if (i + j != 4) expect.insert({i, j});
  c.expect(support == expect, "(3,4) support mismatch");
}

void criterion_cyclic(Check &c) {
  for (auto [s, k] : grid()) {
    ReductionReport r = verify_reduction(s, k);
    c.expect(r.matrix_match, point(s, k) + " collapsed matrix != direct cyclic matrix");
    c.expect(r.rank_Apsi_cyclic == (long)(s - 1) * k - s + 1,
             point(s, k) + " cyclic rank_Apsi != (s-1)k-s+1"
                           " [computed " + std::to_string(r.rank_Apsi_cyclic) +
                           ", formula " + std::to_string((long)(s - 1) * k - s + 1) +
                           ", gcd(s-1,k)-1 = " + std::to_string(r.gcd_defect) + "]");
    c.expect(r.rank_H1_cyclic == (long)(s - 2) * (k - 1),
             point(s, k) + " cyclic rank_H1 != (s-2)(k-1)"
                           " [computed " + std::to_string(r.rank_H1_cyclic) +
                           ", formula " + std::to_string((long)(s - 2) * (k - 1)) +
                           ", gcd(s-1,k)-1 = " + std::to_string(r.gcd_defect) + "]");
  }
}

void criterion_braid(Check &c) {
  for (int n : {3, 4, 5}) {
    Cover cover(CoverSpec{3, n, CoverKind::Full});
    Word a = Word::generator(2, 1), b = Word::generator(2, 2);
    BraidAutomorphism s1 = braid_sigma1(), s2 = braid_sigma2();
    auto neg = [](std::vector<Int> v) {
      for (Int &x : v) x = -x;
      return v;
    };
    for (int i = 0; i < n; i++) {
      c.expect(cover.abelianized(s1.apply(conjugate(b.pow(n), a.pow(i)))) ==
                   cover.abelianized(conjugate(a.pow(n), b.pow(i))),
               "sigma1 on (b^n)^{a^i} mismatch, n=" + std::to_string(n));
      c.expect(s1.apply(conjugate(a.pow(n), b.pow(i))) == conjugate(b.pow(n), a.pow(i + 1)),
               "sigma1 on (a^n)^{b^i} mismatch, n=" + std::to_string(n));
      c.expect(cover.abelianized(s2.apply(conjugate(b.pow(n), a.pow(i)))) ==
                   neg(cover.abelianized(conjugate((b * a).pow(n), a.pow(i)))),
               "sigma2 on (b^n)^{a^i} mismatch, n=" + std::to_string(n));
      for (int j = 0; j < n; j++) {
        Word w = conjugate(commutator(b, a), a.pow(i) * b.pow(j));
        Word img1 = conjugate(commutator(b, a), a.pow(j + 1) * b.pow(i)).inverse();
        c.expect(cover.abelianized(s1.apply(w)) == cover.abelianized(img1),
                 "sigma1 on a commutator class mismatch, n=" + std::to_string(n));
      }
    }
    FermatHomology fh(n);
    IntMatrix m1 = fh.braid_matrix(s1), m2 = fh.braid_matrix(s2);
    c.expect(m1 * m2 * m1 == m2 * m1 * m2, "braid relation fails, n=" + std::to_string(n));
  }
}

void criterion_magnus(Check &c) {
  std::mt19937 rng(kSeed);
  for (int it = 0; it < 100; it++) {
    Word u = random_word(rng, 3, 5), v = random_word(rng, 3, 5);
    c.expect(magnus_image(u * v, 4) == magnus_image(u, 4) * magnus_image(v, 4),
             "homomorphism property fails at degree 4");
  }
  Word x1 = Word::generator(3, 1), x2 = Word::generator(3, 2);
  Word com = commutator(x1, x2);
  c.expect(magnus_coefficient({1, 2}, com) == 1, "mu((1,2),[x1,x2]) != 1");
  c.expect(magnus_coefficient({2, 1}, com) == -1, "mu((2,1),[x1,x2]) != -1");
  for (int it = 0; it < 20; it++) {
    Word w = commutator(random_word(rng, 3, 4), random_word(rng, 3, 4));
    for (int j = 1; j <= 3; j++)
      c.expect(magnus_coefficient({j}, w) == 0, "degree-1 part of a commutator != 0");
  }
}

void criterion_properties(Check &c) {
  std::mt19937 rng(kSeed);
  // free-word group axioms
  for (int it = 0; it < 50; it++) {
    Word u = random_word(rng, 3, 4), v = random_word(rng, 3, 4), w = random_word(rng, 3, 4);
    c.expect((u * v) * w == u * (v * w), "associativity fails");
    c.expect((u * u.inverse()).unit_length() == 0, "right inverse fails");
    c.expect((u * v).inverse() == v.inverse() * u.inverse(), "antihomomorphism fails");
  }
  // commutator expansion [x^j, y] = [x,y]^{x^{j-1}} ... [x,y], j <= 6
  Word x = Word::generator(2, 1), y = Word::generator(2, 2);
  for (int j = 1; j <= 6; j++) {
    Word rhs(2);
    for (int m = j - 1; m >= 0; m--) rhs = rhs * conjugate(commutator(x, y), x.pow(m));
    c.expect(commutator(x.pow(j), y) == rhs, "commutator expansion fails at j=" + std::to_string(j));
  }
  // rewriting round trip, 100 words per grid spec, both kinds
  for (auto [s, k] : grid())
    for (CoverKind kind : {CoverKind::Full, CoverKind::Cyclic}) {
      Cover cover(CoverSpec{s, k, kind});
      for (int it = 0; it < 100; it++) {
        Word w = random_word(rng, s - 1, 6);
        CosetLabel l = coset_label(cover.spec(), w);
        w = w * cover.transversal()[cover.label_index(l)].inverse();
        Word back(s - 1);
        for (const Cover::Factor &f : cover.rewrite(w)) {
          const Word &g = cover.generators()[f.gen].value;
          back = back * (f.sign > 0 ? g : g.inverse());
        }
        c.expect(back == w, point(s, k) + " rewrite round trip fails");
      }
    }
  // SNF divisibility chain and transform verification
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int it = 0; it < 25; it++) {
    IntMatrix A(4, 5);
    for (Int &v : A.a) v = entry(rng);
    SmithForm sf = smith_normal_form(A, true);
    for (size_t i = 1; i < sf.factors.size(); i++)
      c.expect(sf.factors[i] % sf.factors[i - 1] == 0, "invariant factor chain broken");
    IntMatrix D = *sf.U * A * *sf.V;
    for (int r = 0; r < D.rows; r++)
      for (int col = 0; col < D.cols; col++) {
        Int want = (r == col && r < sf.rank) ? sf.factors[r] : 0;
        c.expect(D.at(r, col) == want, "U*A*V != D");
      }
    c.expect(*sf.U * *sf.Uinv == IntMatrix::identity(4), "U inverse fails");
    c.expect(*sf.V * *sf.Vinv == IntMatrix::identity(5), "V inverse fails");
  }
  // projector idempotence and completeness
  CoverSpec spec{3, 3, CoverKind::Full};
  CharacterField cf = character_field(spec);
  HomologySpace hs = homology_space(spec, cf.p);
  FpMatrix sum(cf.F, hs.dim, hs.dim);
  for (const CharacterIndex &ci : decomposition_table(spec)) {
    FpMatrix pr = isotypic_projector(hs, cf, ci.i);
    c.expect(pr * pr == pr, "projector not idempotent");
    sum = sum + pr;
  }
  c.expect(sum == FpMatrix::identity(cf.F, hs.dim), "projectors do not sum to identity");
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::ostream *progress) {
  struct Entry {
    int id;
    const char *name;
    void (*body)(Check &);
  };
  const Entry entries[] = {
      {1, "schreier generator counts and s=3 families", criterion_schreier},
      {2, "alexander ranks vs closed forms (SNF + mod p)", criterion_ranks},
      {3, "triple genus agreement", criterion_genus},
      {4, "character decomposition, two primes per point", criterion_characters},
      {5, "cyclic covers: collapse and closed-form ranks", criterion_cyclic},
      {6, "braid action closed forms and braid relation", criterion_braid},
      {7, "magnus expansion properties", criterion_magnus},
      {8, "property suites (words, rewriting, SNF, projectors)", criterion_properties},
  };
  std::vector<CriterionResult> out;
  for (const Entry &e : entries) {
    CriterionResult r = run_one(e.id, e.name, e.body);
    if (progress)
      *progress << "criterion " << r.id << " [" << (r.pass ? "PASS" : "FAIL") << "] "
                << r.name << " — " << r.detail << " (" << std::fixed
                << std::setprecision(1) << r.seconds << "s)\n";
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace covhom
