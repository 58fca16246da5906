#include "covhom/reports.hpp"

#include <sstream>
#include <stdexcept>

namespace covhom {

namespace {

long checked_long(const Int &x) {
  if (!x.fits_slong_p()) throw std::overflow_error("matrix entry too large for report");
  return x.get_si();
}

Json json_matrix(const IntMatrix &m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows; r++) {
    Json row = Json::array();
    for (int c = 0; c < m.cols; c++) row.push_back(checked_long(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json json_spec(const CoverSpec &spec) {
  return Json{{"s", spec.s}, {"k", spec.k}, {"kind", spec.kind_name()}};
}

}  // namespace

Json schreier_report(const CoverSpec &spec) {
  Cover cover(spec);
  Json gens = Json::array();
  for (const SchreierGenerator &g : cover.generators())
    gens.push_back(Json{{"t", cover.transversal()[g.t_index].str()},
                        {"x", g.x},
                        {"word", g.value.str()},
                        {"family", g.family_name()}});
  return Json{{"schema_version", kSchemaVersion},
              {"report", "schreier"},
              {"spec", json_spec(spec)},
              {"count", cover.generators().size()},
              {"expected_count", cover.expected_generator_count()},
              {"generators", std::move(gens)}};
}

Json homology_report(const CoverSpec &spec, uint64_t prime) {
  HomologyReport r = crowell_ranks(spec);
  Json out{{"schema_version", kSchemaVersion},
           {"report", "homology"},
           {"spec", json_spec(spec)},
           {"deck_order", r.deck_order},
           {"rank_A", r.rank_A},
           {"rank_Q", r.rank_Q},
           {"rank_Apsi", r.rank_Apsi},
           {"rank_H1", r.rank_H1},
           {"rank_Q_formula", r.rank_Q_formula},
           {"rank_Apsi_formula", r.rank_Apsi_formula},
           {"rank_H1_formula", r.rank_H1_formula},
           {"formulas_match", r.formulas_match},
           {"twice_genus_rh", r.twice_genus_rh},
           {"twice_genus_schreier", r.twice_genus_schreier},
           {"twice_genus_crowell", r.twice_genus_crowell},
           {"genus", r.twice_genus_crowell / 2},
           {"consistent", r.genus_consistent},
           {"rank_checked_mod_p", r.rank_checked_mod_p},
           {"verification_prime", r.verification_prime},
           {"notes", r.notes}};
  if (prime != 0) {
    HomologySpace hs = homology_space(spec, prime);
    out["mod_p"] = Json{{"prime", prime},
                        {"dim_H1", hs.dim},
                        {"dim_imQ", hs.q_ech.dim()},
                        {"matches_integral_rank", (long)hs.dim == r.rank_H1}};
  }
  TorsionReport t = h1_torsion(spec);
  Json factors = Json::array();
  for (const Int &f : t.torsion) factors.push_back(f.get_str());
  out["torsion"] = Json{{"free_rank", t.free_rank},
                        {"invariant_factors", std::move(factors)},
                        {"k_torsion_flagged", t.k_torsion_flagged}};
  return out;
}

Json characters_report(const CoverSpec &spec) {
  CharacterField cf = character_field(spec);
  HomologySpace hs = homology_space(spec, cf.p);
  std::vector<CharacterIndex> table = decomposition_table(spec);
  std::vector<int> dims = isotypic_all(hs, cf);
  Json rows = Json::array();
  long sum_C = 0;
  for (size_t idx = 0; idx < table.size(); idx++) {
    const CharacterIndex &ci = table[idx];
    sum_C += ci.C;
    rows.push_back(Json{{"i", ci.i},
                        {"i_s", ci.i_s},
                        {"z", ci.z},
                        {"c", ci.c},
                        {"C", ci.C},
                        {"verified_dim", dims[idx]}});
  }
  return Json{{"schema_version", kSchemaVersion},
              {"report", "characters"},
              {"spec", json_spec(spec)},
              {"prime", cf.p},
              {"sum_C", sum_C},
              {"rows", std::move(rows)}};
}

std::string characters_csv(const CoverSpec &spec) {
  Json rep = characters_report(spec);
  std::ostringstream os;
  for (int j = 1; j <= spec.s - 1; j++) os << "i" << j << ",";
  os << "i_s,z,c,C,verified_dim\n";
  for (const Json &row : rep["rows"]) {
    for (const Json &v : row["i"]) os << v.get<int>() << ",";
    os << row["i_s"].get<int>() << "," << row["z"].get<int>() << ","
       << row["c"].get<int>() << "," << row["C"].get<int>() << ","
       << row["verified_dim"].get<int>() << "\n";
  }
  return os.str();
}

Json fermat_report(int n, bool action) {
  FermatHomology fh(n);
  Json basis = Json::array();
  for (auto [i, j] : fh.basis_index())
    basis.push_back(Json{{"i", i}, {"j", j}, {"word", fh.basis_word(i, j).str()}});
  Json invariants = Json::array();
  for (const Word &w : fh.invariant_elements()) invariants.push_back(w.str());
  bool torsion_free = true;
  for (const Int &f : fh.span_factors()) torsion_free &= f == 1;
  Json out{{"schema_version", kSchemaVersion},
           {"report", "fermat"},
           {"n", n},
           {"dim", fh.dim()},
           {"genus", fh.dim() / 2},
           {"span_torsion_free", torsion_free},
           {"killed_span_rank", (long)fh.cover().generators().size() - fh.dim()},
           {"basis", std::move(basis)},
           {"killed_elements", std::move(invariants)}};
  if (action) {
    IntMatrix m1 = fh.braid_matrix(braid_sigma1());
    IntMatrix m2 = fh.braid_matrix(braid_sigma2());
    out["sigma1"] = json_matrix(m1);
    out["sigma2"] = json_matrix(m2);
    out["braid_relation_holds"] = m1 * m2 * m1 == m2 * m1 * m2;
  }
  return out;
}

Json magnus_report(const Word &w, int degree) {
  TruncatedSeries f = magnus_image(w, degree);
  Json terms = Json::array();
  for (const auto &[k, c] : f.terms()) {
    Json mono = Json::array();
    for (int8_t v : k) mono.push_back((int)v);
    terms.push_back(Json{{"monomial", std::move(mono)}, {"coefficient", c.get_str()}});
  }
  TruncatedSeries ci = commutative_image(f);
  Json cterms = Json::array();
  for (const auto &[k, c] : ci.terms()) {
    Json mono = Json::array();
    for (int8_t v : k) mono.push_back((int)v);
    cterms.push_back(Json{{"monomial", std::move(mono)}, {"coefficient", c.get_str()}});
  }
  return Json{{"schema_version", kSchemaVersion},
              {"report", "magnus"},
              {"word", w.str()},
              {"degree", degree},
              {"terms", std::move(terms)},
              {"commutative_terms", std::move(cterms)}};
}

Json reduction_report(int s, int k) {
  ReductionReport r = verify_reduction(s, k);
  return Json{{"schema_version", kSchemaVersion},
              {"report", "reduce"},
              {"s", s},
              {"k", k},
              {"matrix_match", r.matrix_match},
              {"image_contained", r.image_contained},
              {"prime", r.p},
              {"rank_Q_cyclic", r.rank_Q_cyclic},
              {"rank_Apsi_cyclic", r.rank_Apsi_cyclic},
              {"rank_H1_cyclic", r.rank_H1_cyclic},
              {"rank_H1_formula", r.rank_H1_formula},
              {"formulas_match", r.formulas_match},
              {"gcd_defect", r.gcd_defect}};
}

namespace {

void render(const Json &v, const std::string &prefix, std::ostringstream &os) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it)
      render(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), os);
  } else if (v.is_array() && !v.empty() && (v[0].is_object() || v[0].is_array())) {
    for (size_t i = 0; i < v.size(); i++)
      render(v[i], prefix + "[" + std::to_string(i) + "]", os);
  } else {
    os << prefix << " = " << v.dump() << "\n";
  }
}

}  // namespace

std::string render_text(const Json &report) {
  std::ostringstream os;
  render(report, "", os);
  return os.str();
}

}  // namespace covhom
