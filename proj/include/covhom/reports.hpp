#ifndef COVHOM_REPORTS_HPP
#define COVHOM_REPORTS_HPP

#include <string>

#include "covhom/burau.hpp"
#include "covhom/characters.hpp"
#include "covhom/fermat.hpp"
#include "covhom/fox.hpp"
#include "covhom/magnus.hpp"
#include "json.hpp"

/**
 * @file reports.hpp
 * @brief Machine-readable reports for every pipeline.  Key and element order
 *        is fixed so identical inputs serialize byte-identically.
 */

namespace covhom {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json schreier_report(const CoverSpec &spec);
// prime = 0 skips the mod-p homology block.
Json homology_report(const CoverSpec &spec, uint64_t prime = 0);
Json characters_report(const CoverSpec &spec);
std::string characters_csv(const CoverSpec &spec);
Json fermat_report(int n, bool action);
Json magnus_report(const Word &w, int degree);
Json reduction_report(int s, int k);

std::string render_text(const Json &report);

}  // namespace covhom

#endif
