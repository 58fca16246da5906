#include "covhom/cover.hpp"

#include <stdexcept>

namespace covhom {

long CoverSpec::order() const {
  long n = 1;
  int reps = kind == CoverKind::Full ? s - 1 : 1;
  for (int i = 0; i < reps; i++) n *= k;
  return n;
}

void CoverSpec::validate(long max_order) const {
  if (s < 3) throw std::invalid_argument("need at least 3 punctures");
  if (k < 2) throw std::invalid_argument("need deck exponent k >= 2");
  if (order() > max_order) throw std::invalid_argument("deck group order exceeds limit");
}

CosetLabel coset_label(const CoverSpec &spec, const Word &w) {
  if (w.rank() != spec.rank()) throw std::invalid_argument("word alphabet mismatch");
  std::vector<Int> sums = w.exponent_sums();
  CosetLabel l(spec.deck_rank(), 0);
  if (spec.kind == CoverKind::Full) {
    for (int j = 0; j < spec.rank(); j++) {
      Int m = sums[j] % spec.k;
      if (m < 0) m += spec.k;
      l[j] = (int)m.get_si();
    }
  } else {
    Int total = 0;
    for (const Int &x : sums) total += x;
    Int m = total % spec.k;
    if (m < 0) m += spec.k;
    l[0] = (int)m.get_si();
  }
  return l;
}

std::string SchreierGenerator::family_name() const {
  switch (family) {
    case Family::ALast: return "A_last";
    case Family::B: return "B" + std::to_string(nu);
    case Family::BPrime: return "B'" + std::to_string(nu);
    case Family::Conjugate: return "conjugate";
    case Family::Closing: return "closing";
  }
  return "?";
}

long Cover::label_index(const CosetLabel &l) const {
  long idx = 0;
  for (int c : l) idx = idx * spec_.k + c;
  return idx;
}

CosetLabel Cover::step(const CosetLabel &l, int sym, int dir) const {
  CosetLabel r = l;
  int pos = spec_.kind == CoverKind::Full ? sym - 1 : 0;
  r[pos] = (r[pos] + dir + spec_.k) % spec_.k;
  return r;
}

Cover::Cover(CoverSpec spec) : spec_(spec), order_(spec.order()) {
  spec_.validate();
  const int k = spec_.k;
  const int rank = spec_.rank();
  const int dr = spec_.deck_rank();

  labels_.resize(order_);
  reps_.reserve(order_);
  for (long idx = 0; idx < order_; idx++) {
    CosetLabel l(dr);
    long v = idx;
    for (int j = dr - 1; j >= 0; j--) {
      l[j] = (int)(v % k);
      v /= k;
    }
    labels_[idx] = l;
    Word rep(rank);
    if (spec_.kind == CoverKind::Full) {
      for (int j = 0; j < dr; j++)
        if (l[j]) rep.append(j + 1, l[j]);
    } else {
      if (l[0]) rep.append(1, l[0]);
    }
    reps_.push_back(rep);
  }

  gen_at_.assign(order_ * rank, -1);
  for (long t = 0; t < order_; t++) {
    for (int x = 1; x <= rank; x++) {
      CosetLabel dst = step(labels_[t], x, +1);
      Word g = reps_[t] * Word::generator(rank, x) * reps_[label_index(dst)].inverse();
      if (g.is_identity()) continue;
      SchreierGenerator sg{0, 0, Word(rank), SchreierGenerator::Family::ALast, 0};
      sg.t_index = t;
      sg.x = x;
      sg.value = g;
      sg.nu = 0;
      const CosetLabel &l = labels_[t];
      if (spec_.kind == CoverKind::Full) {
        if (x == rank) {
          sg.family = SchreierGenerator::Family::ALast;
        } else if (l[x - 1] == k - 1) {
          sg.family = SchreierGenerator::Family::BPrime;
          sg.nu = x;
        } else {
          sg.family = SchreierGenerator::Family::B;
          sg.nu = x;
        }
      } else {
        sg.family = l[0] == k - 1 ? SchreierGenerator::Family::Closing
                                  : SchreierGenerator::Family::Conjugate;
      }
      gen_at_[t * rank + (x - 1)] = (long)gens_.size();
      gens_.push_back(std::move(sg));
    }
  }
}

std::vector<Cover::Factor> Cover::rewrite(const Word &w) const {
  CosetLabel l = coset_label(spec_, w);
  for (int c : l)
    if (c != 0) throw std::invalid_argument("word is not in the cover subgroup");
  std::vector<Factor> out;
  CosetLabel cur(spec_.deck_rank(), 0);
  const int rank = spec_.rank();
  for (const Letter &letter : w.letters()) {
    // Run-length letters are consumed one unit at a time so every prefix
    // visits an actual coset.
    Int reps = abs(letter.exp);
    int dir = letter.exp > 0 ? +1 : -1;
    for (Int u = 0; u < reps; u++) {
      if (dir > 0) {
        long g = gen_at_[label_index(cur) * rank + (letter.sym - 1)];
        if (g >= 0) out.push_back({(int)g, +1});
        cur = step(cur, letter.sym, +1);
      } else {
        cur = step(cur, letter.sym, -1);
        long g = gen_at_[label_index(cur) * rank + (letter.sym - 1)];
        if (g >= 0) out.push_back({(int)g, -1});
      }
    }
  }
  return out;
}

std::vector<Int> Cover::abelianized(const Word &w) const {
  std::vector<Int> v(gens_.size(), 0);
  for (const Factor &f : rewrite(w)) v[f.gen] += f.sign;
  return v;
}

std::vector<IntMatrix> Cover::homology_action() const {
  const int rank = spec_.rank();
  const int dr = spec_.deck_rank();
  const long n = (long)gens_.size();
  std::vector<IntMatrix> out;
  for (int j = 1; j <= dr; j++) {
    IntMatrix m((int)n, (int)n);
    Word xj = Word::generator(rank, j);
    for (long i = 0; i < n; i++) {
      std::vector<Int> col = abelianized(conjugate(gens_[i].value, xj));
      for (long r = 0; r < n; r++) m.at((int)r, (int)i) = col[r];
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<Cover::StabilizedElement> Cover::stabilized_elements() const {
  if (spec_.kind != CoverKind::Full)
    throw std::logic_error("branch-cycle census table applies to the full cover");
  const int s = spec_.s, k = spec_.k, rank = spec_.rank();
  std::vector<StabilizedElement> out;
  // Conjugator monomials x_a^{i_a} ... x_b^{i_b} over all exponent choices on
  // the listed coordinate range(s).
  auto monomials = [&](const std::vector<int> &coords) {
    std::vector<Word> ms;
    long total = 1;
    for (size_t c = 0; c < coords.size(); c++) total *= k;
    for (long idx = 0; idx < total; idx++) {
      Word m(rank);
      long v = idx;
      std::vector<int> e(coords.size());
      for (int j = (int)coords.size() - 1; j >= 0; j--) {
        e[j] = (int)(v % k);
        v /= k;
      }
      for (size_t j = 0; j < coords.size(); j++)
        if (e[j]) m.append(coords[j], e[j]);
      ms.push_back(m);
    }
    return ms;
  };

  std::vector<int> head;  // 1..s-2
  for (int c = 1; c <= s - 2; c++) head.push_back(c);

  Word xlast_k = Word::generator(rank, rank).pow(k);
  for (const Word &t : monomials(head))
    out.push_back({conjugate(xlast_k, t), Word::generator(rank, rank), "last"});

  for (int nu = 1; nu <= s - 2; nu++) {
    std::vector<int> coords;
    for (int c = 1; c <= rank; c++)
      if (c != nu) coords.push_back(c);
    Word xnu_k = Word::generator(rank, nu).pow(k);
    for (const Word &t : monomials(coords))
      out.push_back({conjugate(xnu_k, t), Word::generator(rank, nu), "mid" + std::to_string(nu)});
  }

  Word prod(rank);
  for (int c = 1; c <= rank; c++) prod.append(c, 1);
  Word prod_k = prod.pow(k);
  for (const Word &t : monomials(head))
    out.push_back({conjugate(prod_k, t), prod, "product"});
  return out;
}

std::vector<Word> Cover::relator_conjugates() const {
  const int rank = spec_.rank();
  std::vector<Word> out;
  std::vector<Word> relators;
  for (int j = 1; j <= rank; j++) relators.push_back(Word::generator(rank, j).pow(spec_.k));
  Word prod(rank);
  for (int c = 1; c <= rank; c++) prod.append(c, 1);
  relators.push_back(prod.pow(spec_.k));
  for (const Word &rel : relators)
    for (const Word &t : reps_) out.push_back(conjugate(rel, t));
  return out;
}

}  // namespace covhom
