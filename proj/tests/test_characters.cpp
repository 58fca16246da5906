#include <set>

#include "covhom/characters.hpp"
#include "doctest.h"

using namespace covhom;

TEST_CASE("table spot values, s=3 k=3") {
  CoverSpec spec{3, 3, CoverKind::Full};
  auto table = decomposition_table(spec);
  REQUIRE(table.size() == 9);
  FiniteAbelianGroup G{3, 2};
  CHECK(table[G.index({1, 1})].C == 1);
  CHECK(table[G.index({2, 2})].C == 1);
  CHECK(table[G.index({1, 2})].C == 0);  // i_s = 0
  CHECK(table[G.index({0, 0})].C == 0);
  CHECK(table[G.index({0, 1})].C == 0);
  CHECK(table[G.index({0, 0})].c == 3);
  CHECK(table[G.index({0, 1})].c == 2);
  CHECK(table[G.index({1, 1})].c == 1);
}

TEST_CASE("support for s=3 k=4 is i+j != 4, 1 <= i,j <= 3") {
  CoverSpec spec{3, 4, CoverKind::Full};
  auto table = decomposition_table(spec);
  FiniteAbelianGroup G{4, 2};
  std::set<std::pair<int, int>> support;
  for (const auto &ci : table)
    if (ci.C > 0) {
      CHECK(ci.C == 1);
      support.insert({ci.i[0], ci.i[1]});
    }
  std::set<std::pair<int, int>> expect;
  for (int i = 1; i <= 3; i++)
    for (int j = 1; j <= 3; j++)
      if (i + j != 4) expect.insert({i, j});
  CHECK(support == expect);
}

TEST_CASE("table sums: sum C = rank_H1, sum c = rank_Q") {
  for (int s : {3, 4})
    for (int k : {2, 3}) {
      CoverSpec spec{s, k, CoverKind::Full};
      auto table = decomposition_table(spec);
      long sum_C = 0, sum_c = 0;
      for (const auto &ci : table) {
        sum_C += ci.C;
        sum_c += ci.c;
        CHECK(ci.C >= 0);
      }
      HomologyReport rep = crowell_ranks(spec);
      CHECK(sum_C == rep.rank_H1);
      CHECK(sum_c == rep.rank_Q);
    }
}

TEST_CASE("character field choices") {
  CHECK(character_field(CoverSpec{3, 3, CoverKind::Full}).p == 13);
  CHECK(character_field(CoverSpec{3, 3, CoverKind::Full}, 1).p == 19);
  CHECK(character_field(CoverSpec{5, 4, CoverKind::Full}).p == 257);
  CharacterField cf = character_field(CoverSpec{3, 4, CoverKind::Full});
  CHECK(cf.F.pow(cf.zeta, 4) == 1);
  CHECK(cf.F.pow(cf.zeta, 2) != 1);
}

TEST_CASE("projector-measured isotypic dimensions match the table") {
  for (int skip : {0, 1})
    for (int s : {3, 4})
      for (int k : {2, 3}) {
        CoverSpec spec{s, k, CoverKind::Full};
        CharacterField cf = character_field(spec, skip);
        HomologySpace hs = homology_space(spec, cf.p);
        auto table = decomposition_table(spec);
        std::vector<int> dims = isotypic_all(hs, cf);
        REQUIRE(dims.size() == table.size());
        long total = 0;
        for (size_t idx = 0; idx < table.size(); idx++) {
          CHECK(dims[idx] == table[idx].C);
          total += dims[idx];
        }
        CHECK(total == hs.dim);
      }
}

TEST_CASE("literal projector rank agrees with the nested-image route") {
  for (int s : {3, 4})
    for (int k : {2, 3}) {
      CoverSpec spec{s, k, CoverKind::Full};
      CharacterField cf = character_field(spec);
      HomologySpace hs = homology_space(spec, cf.p);
      auto table = decomposition_table(spec);
      std::vector<int> dims = isotypic_all(hs, cf);
      for (size_t idx = 0; idx < table.size(); idx++)
        CHECK(isotypic_dimension(hs, cf, table[idx].i) == dims[idx]);
    }
}

TEST_CASE("projector idempotence, orthogonality and completeness") {
  CoverSpec spec{3, 3, CoverKind::Full};
  CharacterField cf = character_field(spec);
  HomologySpace hs = homology_space(spec, cf.p);
  auto table = decomposition_table(spec);
  std::vector<FpMatrix> projs;
  for (const auto &ci : table) projs.push_back(isotypic_projector(hs, cf, ci.i));
  FpMatrix sum(cf.F, hs.dim, hs.dim);
  for (size_t a = 0; a < projs.size(); a++) {
    CHECK(projs[a] * projs[a] == projs[a]);
    sum = sum + projs[a];
    for (size_t b = a + 1; b < projs.size(); b++) {
      FpMatrix prod = projs[a] * projs[b];
      for (uint64_t x : prod.a) CHECK(x == 0);
    }
  }
  CHECK(sum == FpMatrix::identity(cf.F, hs.dim));
}

TEST_CASE("im(Q) character census matches c_i") {
  for (int s : {3, 4})
    for (int k : {2, 3}) {
      CoverSpec spec{s, k, CoverKind::Full};
      CharacterField cf = character_field(spec);
      HomologySpace hs = homology_space(spec, cf.p);
      auto table = decomposition_table(spec);
      std::vector<int> mult = imq_multiplicities(hs, cf);
      long total = 0;
      for (size_t idx = 0; idx < table.size(); idx++) {
        CHECK(mult[idx] == table[idx].c);
        total += mult[idx];
      }
      CHECK(total == hs.q_ech.dim());
    }
}
