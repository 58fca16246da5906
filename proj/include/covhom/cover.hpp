#ifndef COVHOM_COVER_HPP
#define COVHOM_COVER_HPP

#include <string>
#include <vector>

#include "covhom/intmat.hpp"
#include "covhom/word.hpp"

/**
 * @file cover.hpp
 * @brief Schreier transversals, generators and rewriting for the abelian
 *        covers of the s-punctured sphere (full (Z/k)^{s-1} and cyclic Z/k).
 */

namespace covhom {

enum class CoverKind { Full, Cyclic };

struct CoverSpec {
  int s = 3;
  int k = 2;
  CoverKind kind = CoverKind::Full;

  int rank() const { return s - 1; }                     // free group rank
  int deck_rank() const { return kind == CoverKind::Full ? s - 1 : 1; }
  long order() const;                                    // |H0|
  void validate(long max_order = 4096) const;            // throws on bad input
  std::string kind_name() const { return kind == CoverKind::Full ? "full" : "cyclic"; }
};

using CosetLabel = std::vector<int>;  // length deck_rank(), entries mod k

CosetLabel coset_label(const CoverSpec &spec, const Word &w);

struct SchreierGenerator {
  long t_index;     // transversal position, lexicographic
  int x;            // acted-on generator symbol
  Word value;       // t * x * rep(t x)^{-1}, reduced
  enum class Family { ALast, B, BPrime, Conjugate, Closing };
  Family family;
  int nu;           // tower position for B / BPrime, else 0
  std::string family_name() const;
};

class Cover {
public:
  explicit Cover(CoverSpec spec);

  const CoverSpec &spec() const { return spec_; }
  long order() const { return order_; }

  const std::vector<CosetLabel> &labels() const { return labels_; }
  const std::vector<Word> &transversal() const { return reps_; }
  long label_index(const CosetLabel &l) const;

  const std::vector<SchreierGenerator> &generators() const { return gens_; }
  long expected_generator_count() const { return order_ * (spec_.s - 2) + 1; }

  struct Factor {
    int gen;   // index into generators()
    int sign;  // +1 or -1
  };
  // Left-to-right prefix rewriting; requires coset_label(w) trivial.
  std::vector<Factor> rewrite(const Word &w) const;

  // Image of a subgroup element in the free abelianization Z^N of the cover
  // group, N = generators().size().
  std::vector<Int> abelianized(const Word &w) const;

  // Deck transformation matrices on Z^N, one per deck generator
  // (conjugation by x_1..x_{s-1} for Full, by x_1 for Cyclic).
  std::vector<IntMatrix> homology_action() const;

  struct StabilizedElement {
    Word w;            // branch-cycle class representative
    Word fixed_by;     // deck generator word whose action fixes it
    std::string family;
  };
  // Branch-cycle census for the Full cover: s * k^{s-2} elements.
  std::vector<StabilizedElement> stabilized_elements() const;

  // Relator-conjugate classes (x_j^k)^t over the whole transversal; their
  // span in Z^N is what gets killed when the cover is closed up.
  std::vector<Word> relator_conjugates() const;

private:
  CoverSpec spec_;
  long order_;
  std::vector<CosetLabel> labels_;
  std::vector<Word> reps_;
  std::vector<SchreierGenerator> gens_;
  std::vector<long> gen_at_;  // (t_index * rank + x-1) -> generator index or -1

  CosetLabel step(const CosetLabel &l, int sym, int dir) const;
};

}  // namespace covhom

#endif
