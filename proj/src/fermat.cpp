#include "covhom/fermat.hpp"

#include <stdexcept>

namespace covhom {

namespace {

Word gen_a() { return Word::generator(2, 1); }
Word gen_b() { return Word::generator(2, 2); }

}  // namespace

FermatFamilies fermat_generator_families(int n) {
  if (n < 2) throw std::invalid_argument("need n >= 2");
  FermatFamilies f{n, {}, {}, {}};
  Word a = gen_a(), b = gen_b();
  for (int i = 0; i < n; i++) f.A1.push_back(conjugate(b.pow(n), a.pow(i)));
  for (int j = 1; j <= n - 1; j++)
    for (int i = 0; i <= n - 2; i++)
      f.A2.push_back(conjugate(commutator(b.pow(j), a), a.pow(i)));
  for (int j = 0; j < n; j++) f.A3.push_back(a.pow(n) * commutator(a.inverse(), b.pow(j)));
  return f;
}

Word BraidAutomorphism::apply(const Word &w) const {
  if (w.rank() != 2) throw std::invalid_argument("braid acts on rank-2 words");
  Word out(2);
  for (const Letter &l : w.letters()) {
    const Word &img = l.sym == 1 ? image_a : image_b;
    out = out * img.pow(l.exp);
  }
  return out;
}

BraidAutomorphism BraidAutomorphism::after(const BraidAutomorphism &o) const {
  return BraidAutomorphism{apply(o.image_a), apply(o.image_b)};
}

IntMatrix BraidAutomorphism::abelianized() const {
  IntMatrix m(2, 2);
  std::vector<Int> ca = image_a.exponent_sums(), cb = image_b.exponent_sums();
  m.at(0, 0) = ca[0]; m.at(1, 0) = ca[1];
  m.at(0, 1) = cb[0]; m.at(1, 1) = cb[1];
  return m;
}

BraidAutomorphism braid_sigma1() {
  Word a = gen_a(), b = gen_b();
  return BraidAutomorphism{a * b * a.inverse(), a};
}

BraidAutomorphism braid_sigma2() {
  Word a = gen_a(), b = gen_b();
  return BraidAutomorphism{a, a.inverse() * b.inverse()};
}

FermatHomology::FermatHomology(int n)
    : n_(n), cover_(CoverSpec{3, n, CoverKind::Full}) {
  Word a = gen_a(), b = gen_b();
  long N = (long)cover_.generators().size();
  if (N != (long)n * n + 1) throw std::logic_error("unexpected cover generator count");

  Word ab = a * b;
  for (int i = 0; i < n; i++) invariants_.push_back(conjugate(a.pow(n), b.pow(i)));
  for (int i = 0; i < n; i++) invariants_.push_back(conjugate(b.pow(n), a.pow(i)));
  for (int i = 0; i < n; i++) invariants_.push_back(conjugate(ab.pow(n), a.pow(i)));

  IntMatrix span((int)N, (int)invariants_.size());
  for (size_t j = 0; j < invariants_.size(); j++) {
    std::vector<Int> v = cover_.abelianized(invariants_[j]);
    for (long i = 0; i < N; i++) span.at((int)i, (int)j) = v[i];
  }
  SmithForm sf = smith_normal_form(span, true);
  sat_rank_ = sf.rank;
  span_factors_ = sf.factors;
  U_ = *sf.U;
  dim_ = N - sat_rank_;

  for (int i = 0; i <= n - 2; i++)
    for (int j = 0; j <= n - 3; j++) basis_index_.push_back({i, j});
  if ((long)basis_index_.size() != dim_)
    throw std::logic_error("commutator classes do not match the quotient dimension");

  IntMatrix P((int)dim_, (int)dim_);
  for (size_t c = 0; c < basis_index_.size(); c++) {
    std::vector<Int> q = quotient_coords(basis_word(basis_index_[c].first, basis_index_[c].second));
    for (long r = 0; r < dim_; r++) P.at((int)r, (int)c) = q[r];
  }
  SmithForm sp = smith_normal_form(P, true);
  if (sp.rank != dim_) throw std::logic_error("commutator classes do not span");
  for (const Int &f : sp.factors)
    if (f != 1) throw std::logic_error("commutator classes are not a Z-basis");
  Pinv_ = *sp.V * *sp.U;  // P = Uinv * I * Vinv, so P^-1 = V * U
}

Word FermatHomology::basis_word(int i, int j) const {
  Word a = gen_a(), b = gen_b();
  return conjugate(commutator(b, a), a.pow(i) * b.pow(j));
}

std::vector<Int> FermatHomology::quotient_coords(const Word &w) const {
  std::vector<Int> v = cover_.abelianized(w);
  std::vector<Int> out(dim_, 0);
  for (long r = 0; r < dim_; r++) {
    Int acc = 0;
    for (size_t c = 0; c < v.size(); c++)
      if (v[c] != 0) acc += U_.at((int)(sat_rank_ + r), (int)c) * v[c];
    out[r] = acc;
  }
  return out;
}

std::vector<Int> FermatHomology::basis_coords(const Word &w) const {
  std::vector<Int> q = quotient_coords(w);
  std::vector<Int> out(dim_, 0);
  for (long r = 0; r < dim_; r++) {
    Int acc = 0;
    for (long c = 0; c < dim_; c++) acc += Pinv_.at((int)r, (int)c) * q[c];
    out[r] = acc;
  }
  return out;
}

IntMatrix FermatHomology::braid_matrix(const BraidAutomorphism &sigma) const {
  IntMatrix m((int)dim_, (int)dim_);
  for (size_t c = 0; c < basis_index_.size(); c++) {
    Word img = sigma.apply(basis_word(basis_index_[c].first, basis_index_[c].second));
    std::vector<Int> coords = basis_coords(img);
    for (long r = 0; r < dim_; r++) m.at((int)r, (int)c) = coords[r];
  }
  return m;
}

}  // namespace covhom
