#include "covhom/cli.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include "covhom/reports.hpp"
#include "covhom/selftest.hpp"

namespace covhom {

namespace {

CoverSpec make_spec(const RunConfig &cfg) {
  if (cfg.s < 3 || cfg.s > 6) throw std::invalid_argument("s must be in [3, 6]");
  if (cfg.k < 2 || cfg.k > 8) throw std::invalid_argument("k must be in [2, 8]");
  CoverKind kind;
  if (cfg.kind == "full")
    kind = CoverKind::Full;
  else if (cfg.kind == "cyclic")
    kind = CoverKind::Cyclic;
  else
    throw std::invalid_argument("kind must be full or cyclic");
  CoverSpec spec{cfg.s, cfg.k, kind};
  spec.validate(cfg.max_order);
  return spec;
}

Word parse_free_word(const std::string &text) {
  int rank = 1;
  for (size_t i = 0; i + 1 < text.size(); i++)
    if (text[i] == 'x' && isdigit((unsigned char)text[i + 1]))
      rank = std::max(rank, atoi(text.c_str() + i + 1));
  return Word::parse(rank, text);
}

// Offsets every closed-form field by one, so a healthy pipeline must report
// the mismatch through exit code 2.
void corrupt(Json &rep) {
  for (const char *key : {"rank_Q_formula", "rank_Apsi_formula", "rank_H1_formula"})
    if (rep.contains(key)) rep[key] = rep[key].get<long>() + 1;
  if (rep.contains("formulas_match")) rep["formulas_match"] = false;
}

// Consistency verdict per report kind; false means exit code 2.
bool verdict(const std::string &sub, const Json &rep, std::string &why) {
  auto flag = [&](const char *key) {
    if (!rep.contains(key) || rep[key].get<bool>()) return true;
    why += std::string(why.empty() ? "" : "; ") + key + " = false";
    return false;
  };
  bool ok = true;
  if (sub == "schreier") {
    if (rep["count"] != rep["expected_count"]) {
      why = "count != expected_count";
      ok = false;
    }
  } else if (sub == "homology") {
    ok = flag("formulas_match") & flag("consistent") & flag("rank_checked_mod_p");
  } else if (sub == "characters") {
    for (const Json &row : rep["rows"])
      if (row["verified_dim"] != row["C"]) {
        why = "verified_dim != C at i = " + row["i"].dump();
        ok = false;
        break;
      }
  } else if (sub == "fermat") {
    ok = flag("span_torsion_free");
    if (rep.contains("braid_relation_holds")) ok &= flag("braid_relation_holds");
  } else if (sub == "reduce") {
    ok = flag("matrix_match") & flag("image_contained") & flag("formulas_match");
  }
  return ok;
}

int emit(const RunConfig &cfg, const Json &rep, std::ostream &out, std::ostream &err) {
  if (cfg.format == "json")
    out << rep.dump(2) << "\n";
  else if (cfg.format == "text")
    out << render_text(rep);
  else if (cfg.format == "csv" && cfg.subcommand == "characters")
    out << characters_csv(make_spec(cfg));
  else
    throw std::invalid_argument("format " + cfg.format + " not supported for " +
                                cfg.subcommand);
  std::string why;
  if (!verdict(cfg.subcommand, rep, why)) {
    err << "consistency mismatch: " << why << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int cli_run(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  try {
    if (cfg.subcommand == "schreier") {
      return emit(cfg, schreier_report(make_spec(cfg)), out, err);
    }
    if (cfg.subcommand == "homology") {
      CoverSpec spec = make_spec(cfg);
      if (!cfg.dump_matrix.empty()) {
        std::ofstream f(cfg.dump_matrix);
        if (!f) throw std::invalid_argument("cannot write " + cfg.dump_matrix);
        f << build_alexander_matrix(spec).expanded().text();
      }
      Json rep = homology_report(spec, cfg.prime);
      if (cfg.corrupt_formulas) corrupt(rep);
      return emit(cfg, rep, out, err);
    }
    if (cfg.subcommand == "characters") {
      return emit(cfg, characters_report(make_spec(cfg)), out, err);
    }
    if (cfg.subcommand == "fermat") {
      if (cfg.n < 2 || (long)cfg.n * cfg.n > cfg.max_order)
        throw std::invalid_argument("n out of range");
      return emit(cfg, fermat_report(cfg.n, cfg.action), out, err);
    }
    if (cfg.subcommand == "magnus") {
      if (cfg.word.empty()) throw std::invalid_argument("magnus needs --word");
      if (cfg.degree < 0 || cfg.degree > 8)
        throw std::invalid_argument("degree must be in [0, 8]");
      return emit(cfg, magnus_report(parse_free_word(cfg.word), cfg.degree), out, err);
    }
    if (cfg.subcommand == "reduce") {
      make_spec(cfg);  // range validation only
      Json rep = reduction_report(cfg.s, cfg.k);
      if (cfg.corrupt_formulas) corrupt(rep);
      return emit(cfg, rep, out, err);
    }
    if (cfg.subcommand == "selftest") {
      std::vector<CriterionResult> rs = run_acceptance(&out);
      bool all = true;
      for (const CriterionResult &r : rs) all &= r.pass;
      out << (all ? "all criteria passed" : "criteria FAILED") << "\n";
      return all ? 0 : 2;
    }
    throw std::invalid_argument("unknown subcommand " + cfg.subcommand);
  } catch (const std::invalid_argument &e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace covhom
