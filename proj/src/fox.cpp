#include "covhom/fox.hpp"

#include <numeric>
#include <stdexcept>

namespace covhom {

FiniteAbelianGroup deck_group(const CoverSpec &spec) {
  return FiniteAbelianGroup{spec.k, spec.deck_rank()};
}

long deck_image(const CoverSpec &spec, const FiniteAbelianGroup &H, int sym) {
  if (sym < 1 || sym > spec.s) throw std::invalid_argument("free generator out of range");
  if (spec.kind == CoverKind::Full) {
    if (sym < spec.s) return H.generator(sym);
    return H.index(std::vector<int>(H.r, -1));
  }
  if (sym < spec.s) return H.index({1});
  return H.index({-(spec.s - 1)});
}

namespace {

int order_of(const FiniteAbelianGroup &H, long g) {
  long cur = g;
  int ord = 1;
  long id = 0;
  while (cur != id) {
    cur = H.mul(cur, g);
    ord++;
  }
  return ord;
}

// 1 + g + ... + g^{e-1} for e >= 0, exact in the exponent.
RingElement geometric_sum(const FiniteAbelianGroup &H, long g, const Int &e) {
  RingElement r(H);
  if (e <= 0) return r;
  int ord = order_of(H, g);
  Int q = e / ord;
  long rem = Int(e % ord).get_si();
  long cur = 0;
  for (int v = 0; v < ord; v++) {
    r[cur] += q;
    if (v < rem) r[cur] += 1;
    cur = H.mul(cur, g);
  }
  return r;
}

}  // namespace

RingElement fox_derivative(const CoverSpec &spec, const Word &w, int j) {
  if (w.rank() != spec.s) throw std::invalid_argument("fox derivative wants the s-symbol alphabet");
  if (j < 1 || j > spec.s) throw std::invalid_argument("derivative index out of range");
  FiniteAbelianGroup H = deck_group(spec);
  RingElement out(H);
  long prefix = 0;
  for (const Letter &l : w.letters()) {
    long g = deck_image(spec, H, l.sym);
    if (l.sym == j) {
      if (l.exp > 0) {
        RingElement part = geometric_sum(H, g, l.exp);
        for (long i = 0; i < H.order(); i++)
          if (part[i] != 0) out[H.mul(prefix, i)] += part[i];
      } else {
        // d(x^-m)/dx = -x^-m (1 + x + ... + x^{m-1})
        RingElement part = geometric_sum(H, g, -l.exp);
        Int m = -l.exp;
        long shift = 0;
        long ginv = H.inverse(g);
        Int mm = m % order_of(H, g);
        for (Int v = 0; v < mm; v++) shift = H.mul(shift, ginv);
        long base = H.mul(prefix, shift);
        for (long i = 0; i < H.order(); i++)
          if (part[i] != 0) out[H.mul(base, i)] -= part[i];
      }
    }
    // advance the prefix by g^exp
    long step = 0;
    long gg = l.exp > 0 ? g : H.inverse(g);
    Int reps = abs(l.exp) % order_of(H, g);
    for (Int v = 0; v < reps; v++) step = H.mul(step, gg);
    prefix = H.mul(prefix, step);
  }
  return out;
}

AlexanderMatrix build_alexander_matrix(const CoverSpec &spec) {
  const int s = spec.s;
  FiniteAbelianGroup H = deck_group(spec);
  AlexanderMatrix m{spec, H, {}};
  m.entries.assign((size_t)s * (s + 1), RingElement(H));
  std::vector<Word> relators;
  for (int jj = 1; jj <= s; jj++) relators.push_back(Word::generator(s, jj).pow(spec.k));
  Word prod(s);
  for (int jj = 1; jj <= s; jj++) prod.append(jj, 1);
  relators.push_back(prod);
  for (int i = 1; i <= s; i++)
    for (int jj = 0; jj <= s; jj++) m.at(i - 1, jj) = fox_derivative(spec, relators[jj], i);
  return m;
}

IntMatrix AlexanderMatrix::expanded() const {
  long h = H.order();
  const int s = spec.s;
  IntMatrix out((int)(s * h), (int)((s + 1) * h));
  for (int i = 0; i < s; i++)
    for (int jj = 0; jj <= s; jj++) {
      IntMatrix block = regular_representation(at(i, jj));
      for (long r = 0; r < h; r++)
        for (long c = 0; c < h; c++)
          if (block.at((int)r, (int)c) != 0)
            out.at((int)(i * h + r), (int)(jj * h + c)) = block.at((int)r, (int)c);
    }
  return out;
}

std::vector<RingElement> theta2_entries(const CoverSpec &spec) {
  FiniteAbelianGroup H = deck_group(spec);
  std::vector<RingElement> v;
  for (int j = 1; j <= spec.s; j++)
    v.push_back(RingElement::unit(H, deck_image(spec, H, j)) - RingElement::unit(H, 0));
  return v;
}

IntMatrix theta2_expanded(const CoverSpec &spec) {
  FiniteAbelianGroup H = deck_group(spec);
  long h = H.order();
  std::vector<RingElement> ent = theta2_entries(spec);
  IntMatrix out((int)h, (int)(spec.s * h));
  for (int j = 0; j < spec.s; j++) {
    IntMatrix block = regular_representation(ent[j]);
    for (long r = 0; r < h; r++)
      for (long c = 0; c < h; c++)
        if (block.at((int)r, (int)c) != 0) out.at((int)r, (int)(j * h + c)) = block.at((int)r, (int)c);
  }
  return out;
}

namespace {

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Branch orders of the s loop classes in the deck group.
std::vector<int> branch_orders(const CoverSpec &spec) {
  FiniteAbelianGroup H = deck_group(spec);
  std::vector<int> ords;
  for (int j = 1; j <= spec.s; j++) ords.push_back(order_of(H, deck_image(spec, H, j)));
  return ords;
}

}  // namespace

HomologyReport crowell_ranks(const CoverSpec &spec) {
  spec.validate();
  HomologyReport rep;
  rep.spec = spec;
  const int s = spec.s, k = spec.k;
  const long h = spec.order();
  rep.deck_order = h;
  rep.rank_A = h;

  AlexanderMatrix am = build_alexander_matrix(spec);

  // theta2 must kill every column of the matrix, exactly in the group ring.
  std::vector<RingElement> th = theta2_entries(spec);
  for (int c = 0; c <= s; c++) {
    RingElement acc(am.H);
    for (int r = 0; r < s; r++) acc = acc + th[r] * am.at(r, c);
    if (!acc.is_zero()) throw std::logic_error("theta2 does not annihilate the matrix columns");
  }

  IntMatrix q = am.expanded();
  rep.rank_Q = smith_normal_form(q).rank;
  rep.verification_prime = 1000003;
  rep.rank_checked_mod_p = rank_mod_p(FpMatrix::reduce(q, rep.verification_prime)) == rep.rank_Q;
  rep.rank_Apsi = s * h - rep.rank_Q;
  rep.rank_H1 = rep.rank_Apsi - rep.rank_A + 1;

  if (spec.kind == CoverKind::Full) {
    long ks2 = ipow(k, s - 2), ks1 = ipow(k, s - 1);
    rep.rank_Q_formula = s * ks2 + ks1 - 1;
    rep.rank_Apsi_formula = (s - 1) * ks1 - s * ks2 + 1;
    rep.rank_H1_formula = (s - 2) * ks1 + 2 - s * ks2;
    rep.notes.push_back("rank_H1 leading coefficient is (s-2), cross-checked against Riemann-Hurwitz");
  } else {
    rep.rank_Q_formula = s + k - 1;
    rep.rank_Apsi_formula = (s - 1) * k - s + 1;
    rep.rank_H1_formula = (s - 2) * (k - 1);
    int g = std::gcd(s - 1, k);
    if (g != 1)
      rep.notes.push_back("deck image of x_s has order k/" + std::to_string(g) +
                          ": cyclic closed-form ranks assume gcd(s-1,k)=1");
  }
  rep.formulas_match = rep.rank_Q == rep.rank_Q_formula &&
                       rep.rank_Apsi == rep.rank_Apsi_formula &&
                       rep.rank_H1 == rep.rank_H1_formula;

  // Riemann-Hurwitz from the actual branch orders.
  long rh = 2 - 2 * h;
  for (int ord : branch_orders(spec)) rh += h - h / ord;
  rep.twice_genus_rh = rh;

  // Schreier route: cover generators minus the relator-conjugate span.
  Cover cov(spec);
  auto rel = cov.relator_conjugates();
  long n = (long)cov.generators().size();
  IntMatrix span((int)n, (int)rel.size());
  for (size_t j = 0; j < rel.size(); j++) {
    std::vector<Int> v = cov.abelianized(rel[j]);
    for (long i = 0; i < n; i++) span.at((int)i, (int)j) = v[i];
  }
  SmithForm sf = smith_normal_form(span);
  rep.twice_genus_schreier = n - sf.rank;
  for (const Int &f : sf.factors)
    if (f != 1) rep.notes.push_back("relator span quotient has torsion factor " + f.get_str());

  rep.twice_genus_crowell = rep.rank_H1;
  rep.genus_consistent = rep.twice_genus_rh == rep.twice_genus_schreier &&
                         rep.twice_genus_schreier == rep.twice_genus_crowell &&
                         rep.twice_genus_crowell % 2 == 0;
  return rep;
}

TorsionReport h1_torsion(const CoverSpec &spec) {
  // Integral kernel of theta2, im(Q) expressed in that kernel basis, SNF.
  IntMatrix th = theta2_expanded(spec);
  SmithForm sth = smith_normal_form(th, true);
  long nk = th.cols - sth.rank;
  IntMatrix q = build_alexander_matrix(spec).expanded();
  // coords of each column of Q in the V-basis; kernel coords are the tail.
  IntMatrix vc = *sth.Vinv * q;
  // columns of Q lie in ker(theta2), so head coordinates must vanish
  for (int i = 0; i < sth.rank; i++)
    for (int j = 0; j < q.cols; j++)
      if (vc.at(i, j) != 0) throw std::logic_error("im(Q) escapes ker(theta2) integrally");
  IntMatrix x((int)nk, q.cols);
  for (long i = 0; i < nk; i++)
    for (int j = 0; j < q.cols; j++) x.at((int)i, j) = vc.at((int)(sth.rank + i), j);
  SmithForm sx = smith_normal_form(x);
  TorsionReport t;
  t.free_rank = nk - sx.rank;
  for (const Int &f : sx.factors)
    if (f != 1) {
      t.torsion.push_back(f);
      if (gcd(f, Int(spec.k)) != 1) t.k_torsion_flagged = true;
    }
  return t;
}

std::vector<uint64_t> HomologySpace::coords(std::vector<uint64_t> v) const {
  std::vector<uint64_t> c;
  q_ech.reduce(v);
  b_ech.reduce(v, &c);
  for (uint64_t x : v)
    if (x) throw std::logic_error("vector not in ker(theta2) mod im(Q)");
  return c;
}

FpMatrix HomologySpace::action(int j) const {
  FpMatrix m(F, dim, dim);
  const std::vector<long> &pm = perm[j - 1];
  for (int c = 0; c < dim; c++) {
    std::vector<uint64_t> w(n, 0);
    const std::vector<uint64_t> &src = b_ech.cols[c];
    for (long i = 0; i < n; i++)
      if (src[i]) w[pm[i]] = src[i];
    std::vector<uint64_t> cc = coords(std::move(w));
    for (int r = 0; r < dim; r++) m.at(r, c) = cc[r];
  }
  return m;
}

HomologySpace homology_space(const CoverSpec &spec, uint64_t p) {
  spec.validate();
  if (p <= (uint64_t)spec.order() || !is_prime(p) || (p - 1) % (uint64_t)spec.k != 0)
    throw std::invalid_argument("prime must exceed |H0| and be 1 mod k");
  HomologySpace hs;
  hs.spec = spec;
  hs.H = deck_group(spec);
  hs.F = Fp{p};
  long h = hs.H.order();
  hs.n = (long)spec.s * h;
  hs.q_ech = Echelon(hs.F, (int)hs.n);
  hs.b_ech = Echelon(hs.F, (int)hs.n);

  FpMatrix q = FpMatrix::reduce(build_alexander_matrix(spec).expanded(), p);
  for (int c = 0; c < q.cols; c++) {
    std::vector<uint64_t> v((size_t)hs.n);
    for (long i = 0; i < hs.n; i++) v[i] = q.at((int)i, c);
    hs.q_ech.add(std::move(v));
  }

  FpMatrix th = FpMatrix::reduce(theta2_expanded(spec), p);
  FpMatrix K = kernel_basis(th);
  for (int c = 0; c < K.cols; c++) {
    std::vector<uint64_t> v((size_t)hs.n);
    for (long i = 0; i < hs.n; i++) v[i] = K.at((int)i, c);
    hs.q_ech.reduce(v);
    hs.b_ech.add(std::move(v));
  }
  hs.dim = hs.b_ech.dim();

  for (int j = 1; j <= spec.deck_rank(); j++) {
    long g = hs.H.generator(j);
    std::vector<long> pm(hs.n);
    for (int blk = 0; blk < spec.s; blk++)
      for (long x = 0; x < h; x++) pm[blk * h + x] = blk * h + hs.H.mul(g, x);
    hs.perm.push_back(std::move(pm));
  }
  return hs;
}

}  // namespace covhom
