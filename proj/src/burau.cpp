#include "covhom/burau.hpp"

#include <numeric>
#include <stdexcept>

namespace covhom {

long collapse_index(const FiniteAbelianGroup &H, long idx) {
  std::vector<int> v = H.element(idx);
  long total = 0;
  for (int x : v) total += x;
  return total % H.k;
}

RingElement collapse_element(const RingElement &e) {
  const FiniteAbelianGroup &H = e.group();
  FiniteAbelianGroup C{H.k, 1};
  RingElement out(C);
  for (long g = 0; g < H.order(); g++)
    if (e[g] != 0) out[collapse_index(H, g)] += e[g];
  return out;
}

std::vector<Int> collapse_vector(const CoverSpec &spec, const std::vector<Int> &v) {
  FiniteAbelianGroup H = deck_group(CoverSpec{spec.s, spec.k, CoverKind::Full});
  long h = H.order();
  if ((long)v.size() % h != 0) throw std::invalid_argument("bad block size");
  long blocks = (long)v.size() / h;
  std::vector<Int> out((size_t)(blocks * spec.k), 0);
  for (long b = 0; b < blocks; b++)
    for (long g = 0; g < h; g++)
      if (v[b * h + g] != 0) out[b * spec.k + collapse_index(H, g)] += v[b * h + g];
  return out;
}

ReductionReport verify_reduction(int s, int k, uint64_t p) {
  CoverSpec full{s, k, CoverKind::Full}, cyc{s, k, CoverKind::Cyclic};
  full.validate();
  ReductionReport rep;
  rep.s = s;
  rep.k = k;
  rep.gcd_defect = std::gcd(s - 1, k) - 1;
  rep.p = p ? p : character_prime(k, (uint64_t)full.order());

  AlexanderMatrix qf = build_alexander_matrix(full);
  AlexanderMatrix qc = build_alexander_matrix(cyc);
  rep.matrix_match = true;
  for (int i = 0; i < s; i++)
    for (int j = 0; j <= s; j++)
      if (collapse_element(qf.at(i, j)) != qc.at(i, j)) rep.matrix_match = false;

  // column-space containment of the collapsed full image mod p
  IntMatrix ec = qc.expanded();
  Fp F{rep.p};
  Echelon ech(F, ec.rows);
  for (int c = 0; c < ec.cols; c++) {
    std::vector<uint64_t> col(ec.rows);
    for (int r = 0; r < ec.rows; r++) col[r] = F.from_int(ec.at(r, c));
    ech.add(std::move(col));
  }
  int base = ech.dim();
  IntMatrix ef = qf.expanded();
  rep.image_contained = true;
  for (int c = 0; c < ef.cols; c++) {
    std::vector<Int> col(ef.rows);
    for (int r = 0; r < ef.rows; r++) col[r] = ef.at(r, c);
    std::vector<Int> w = collapse_vector(full, col);
    std::vector<uint64_t> v(w.size());
    for (size_t r = 0; r < w.size(); r++) v[r] = F.from_int(w[r]);
    if (ech.add(std::move(v))) rep.image_contained = false;
  }
  if (ech.dim() != base) rep.image_contained = false;

  HomologyReport hr = crowell_ranks(cyc);
  rep.rank_Q_cyclic = hr.rank_Q;
  rep.rank_Apsi_cyclic = hr.rank_Apsi;
  rep.rank_H1_cyclic = hr.rank_H1;
  rep.rank_H1_formula = hr.rank_H1_formula;
  rep.formulas_match = hr.formulas_match;
  return rep;
}

}  // namespace covhom
