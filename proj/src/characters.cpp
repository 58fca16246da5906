#include "covhom/characters.hpp"

#include <functional>
#include <stdexcept>

namespace covhom {

std::vector<CharacterIndex> decomposition_table(const CoverSpec &spec) {
  if (spec.kind != CoverKind::Full)
    throw std::logic_error("character table applies to the full cover");
  const int s = spec.s, k = spec.k;
  FiniteAbelianGroup G{k, s - 1};
  std::vector<CharacterIndex> out;
  for (long idx = 0; idx < G.order(); idx++) {
    CharacterIndex ci;
    ci.i = G.element(idx);
    int sum = 0;
    for (int v : ci.i) sum += v;
    ci.i_s = sum % k;
    ci.z = ci.i_s == 0 ? 1 : 0;
    bool all_zero = ci.i_s == 0;
    for (int v : ci.i) {
      if (v == 0) ci.z++;
      all_zero &= v == 0;
    }
    ci.c = ci.z == s ? ci.z : 1 + ci.z;
    ci.C = all_zero ? s - ci.z : s - ci.z - 2;
    out.push_back(std::move(ci));
  }
  return out;
}

CharacterField character_field(const CoverSpec &spec, int skip) {
  CharacterField cf;
  cf.p = character_prime(spec.k, (uint64_t)spec.order(), skip);
  cf.zeta = root_of_unity(cf.p, spec.k);
  cf.F = Fp{cf.p};
  return cf;
}

FpMatrix isotypic_projector(const HomologySpace &hs, const CharacterField &cf,
                            const std::vector<int> &i) {
  if ((int)i.size() != hs.spec.deck_rank()) throw std::invalid_argument("index arity mismatch");
  const Fp F = cf.F;
  const int k = hs.spec.k;
  uint64_t inv_k = F.inv((uint64_t)k % F.p);
  FpMatrix P = FpMatrix::identity(F, hs.dim);
  for (int j = 1; j <= hs.spec.deck_rank(); j++) {
    FpMatrix rho = hs.action(j);
    // (1/k) sum_m chi(x_j)^{-m} rho^m
    uint64_t chi_inv = F.inv(F.pow(cf.zeta, (uint64_t)((i[j - 1] % k + k) % k)));
    FpMatrix acc(F, hs.dim, hs.dim);
    FpMatrix pw = FpMatrix::identity(F, hs.dim);
    uint64_t coef = 1;
    for (int m = 0; m < k; m++) {
      acc = acc + pw.scaled(coef);
      pw = pw * rho;
      coef = F.mul(coef, chi_inv);
    }
    P = P * acc.scaled(inv_k);
  }
  return P;
}

int isotypic_dimension(const HomologySpace &hs, const CharacterField &cf,
                       const std::vector<int> &i) {
  return rank_mod_p(isotypic_projector(hs, cf, i));
}

namespace {

// Nested image computation: split a subspace (columns of S inside an n-dim
// ambient space) into eigenspaces of op for each k-th root of unity.  Each
// split is the image of one commuting factor projector restricted to S.
struct Leaf {
  std::vector<int> prefix;
  FpMatrix S;  // n x d, full column rank
};

std::vector<int> split_all(const Fp &F, int n, int k, uint64_t zeta, int levels,
                           const FpMatrix &start,
                           const std::function<FpMatrix(int, const FpMatrix &)> &apply,
                           const FiniteAbelianGroup &G) {
  std::vector<Leaf> leaves{{{}, start}};
  for (int j = 1; j <= levels; j++) {
    std::vector<Leaf> next;
    for (Leaf &lf : leaves) {
      if (lf.S.cols == 0) continue;
      FpMatrix M = apply(j, lf.S);
      for (int m = 0; m < k; m++) {
        uint64_t ev = F.pow(zeta, (uint64_t)m);
        // kernel of (M - ev*S) as combinations of the columns of S
        FpMatrix W = M - lf.S.scaled(ev);
        FpMatrix C = kernel_basis(W);
        if (C.cols == 0) continue;
        Leaf child{lf.prefix, lf.S * C};
        child.prefix.push_back(m);
        next.push_back(std::move(child));
      }
    }
    leaves = std::move(next);
  }
  (void)n;
  std::vector<int> dims(G.order(), 0);
  for (const Leaf &lf : leaves) dims[G.index(lf.prefix)] = lf.S.cols;
  return dims;
}

}  // namespace

std::vector<int> isotypic_all(const HomologySpace &hs, const CharacterField &cf) {
  const int dr = hs.spec.deck_rank();
  FiniteAbelianGroup G{hs.spec.k, dr};
  std::vector<FpMatrix> rho;
  for (int j = 1; j <= dr; j++) rho.push_back(hs.action(j));
  FpMatrix start = FpMatrix::identity(cf.F, hs.dim);
  auto apply = [&](int j, const FpMatrix &S) { return rho[j - 1] * S; };
  return split_all(cf.F, hs.dim, hs.spec.k, cf.zeta, dr, start, apply, G);
}

std::vector<int> imq_multiplicities(const HomologySpace &hs, const CharacterField &cf) {
  const int dr = hs.spec.deck_rank();
  FiniteAbelianGroup G{hs.spec.k, dr};
  // column matrix of the im(Q) echelon inside the ambient space
  FpMatrix S(cf.F, (int)hs.n, hs.q_ech.dim());
  for (int c = 0; c < S.cols; c++)
    for (long r = 0; r < hs.n; r++) S.at((int)r, c) = hs.q_ech.cols[c][r];
  auto apply = [&](int j, const FpMatrix &M) {
    FpMatrix R(cf.F, M.rows, M.cols);
    const std::vector<long> &pm = hs.perm[j - 1];
    for (int r = 0; r < M.rows; r++) {
      long tr = pm[r];
      for (int c = 0; c < M.cols; c++) R.at((int)tr, c) = M.at(r, c);
    }
    return R;
  };
  return split_all(cf.F, (int)hs.n, hs.spec.k, cf.zeta, dr, S, apply, G);
}

}  // namespace covhom
