#include <fstream>
#include <sstream>

#include "covhom/cli.hpp"
#include "covhom/intmat.hpp"
#include "covhom/reports.hpp"
#include "doctest.h"

using namespace covhom;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(RunConfig cfg) {
  std::ostringstream out, err;
  int code = cli_run(cfg, out, err);
  return Run{code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("identical inputs produce byte-identical json") {
  for (const char *sub : {"schreier", "homology", "characters", "reduce"}) {
    RunConfig cfg;
    cfg.subcommand = sub;
    cfg.s = 3;
    cfg.k = 3;
    Run a = run(cfg), b = run(cfg);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
  }
}

TEST_CASE("healthy full-cover homology exits 0 with expected numbers") {
  RunConfig cfg;
  cfg.subcommand = "homology";
  cfg.s = 3;
  cfg.k = 3;
  Run r = run(cfg);
  REQUIRE(r.code == 0);
  Json rep = Json::parse(r.out);
  CHECK(rep["rank_H1"] == 2);
  CHECK(rep["genus"] == 1);
  CHECK(rep["consistent"] == true);
  CHECK(rep["schema_version"] == kSchemaVersion);
}

TEST_CASE("formula mismatch exits 2") {
  // a cyclic point with gcd(s-1,k) > 1: the closed forms genuinely fail
  RunConfig cfg;
  cfg.subcommand = "homology";
  cfg.s = 4;
  cfg.k = 3;
  cfg.kind = "cyclic";
  Run r = run(cfg);
  CHECK(r.code == 2);
  CHECK(Json::parse(r.out)["formulas_match"] == false);
  CHECK(r.err.find("mismatch") != std::string::npos);
  // corrupted formula table on an otherwise healthy point
  RunConfig good;
  good.subcommand = "homology";
  good.s = 3;
  good.k = 3;
  CHECK(run(good).code == 0);
  good.corrupt_formulas = true;
  Run c = run(good);
  CHECK(c.code == 2);
  CHECK(Json::parse(c.out)["rank_H1_formula"] == 3);  // offset by one
}

TEST_CASE("usage errors exit 1") {
  RunConfig cfg;
  cfg.subcommand = "homology";
  cfg.kind = "diagonal";
  CHECK(run(cfg).code == 1);
  cfg.kind = "full";
  cfg.s = 7;
  CHECK(run(cfg).code == 1);
  cfg.s = 5;
  cfg.k = 4;
  cfg.max_order = 100;  // 4^4 = 256 over the cap
  CHECK(run(cfg).code == 1);
  cfg.max_order = 4096;  // raised cap admits it again (range check only)
  RunConfig m;
  m.subcommand = "magnus";
  CHECK(run(m).code == 1);  // missing --word
  m.word = "x1*x^oops";
  CHECK(run(m).code == 1);
  RunConfig u;
  u.subcommand = "frobnicate";
  CHECK(run(u).code == 1);
}

TEST_CASE("characters csv shape") {
  RunConfig cfg;
  cfg.subcommand = "characters";
  cfg.s = 3;
  cfg.k = 2;
  cfg.format = "csv";
  Run r = run(cfg);
  REQUIRE(r.code == 0);
  std::istringstream is(r.out);
  std::string line;
  std::getline(is, line);
  CHECK(line == "i1,i2,i_s,z,c,C,verified_dim");
  int rows = 0;
  while (std::getline(is, line)) rows++;
  CHECK(rows == 4);
}

TEST_CASE("fermat and magnus reports") {
  RunConfig cfg;
  cfg.subcommand = "fermat";
  cfg.n = 3;
  cfg.action = true;
  Run r = run(cfg);
  REQUIRE(r.code == 0);
  Json rep = Json::parse(r.out);
  CHECK(rep["braid_relation_holds"] == true);
  CHECK(rep["dim"] == 2);
  CHECK(rep["genus"] == 1);

  RunConfig m;
  m.subcommand = "magnus";
  m.word = "x1*x2*x1^-1*x2^-1";
  m.degree = 3;
  Run mr = run(m);
  REQUIRE(mr.code == 0);
  Json mrep = Json::parse(mr.out);
  bool found12 = false;
  for (const Json &t : mrep["terms"])
    if (t["monomial"] == Json::array({1, 2})) {
      CHECK(t["coefficient"] == "1");
      found12 = true;
    }
  CHECK(found12);
}

TEST_CASE("dump-matrix round trips through the text format") {
  RunConfig cfg;
  cfg.subcommand = "homology";
  cfg.s = 3;
  cfg.k = 2;
  cfg.dump_matrix = "/tmp/covhom_dump_test.txt";
  REQUIRE(run(cfg).code == 0);
  std::ifstream f(cfg.dump_matrix);
  std::stringstream ss;
  ss << f.rdbuf();
  IntMatrix m = IntMatrix::parse(ss.str());
  CHECK(m.rows == 12);
  CHECK(m.cols == 16);
  CHECK(rank_exact(m) == 9);
}

TEST_CASE("text format renders flat key-value lines") {
  RunConfig cfg;
  cfg.subcommand = "reduce";
  cfg.s = 3;
  cfg.k = 3;
  cfg.format = "text";
  Run r = run(cfg);
  REQUIRE(r.code == 0);
  CHECK(r.out.find("matrix_match = true") != std::string::npos);
  CHECK(r.out.find("rank_H1_cyclic = 2") != std::string::npos);
}
