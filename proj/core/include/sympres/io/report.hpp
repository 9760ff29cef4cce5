#ifndef SYMPRES_IO_REPORT_HPP
#define SYMPRES_IO_REPORT_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sympres/classify/verdict.hpp"
#include "sympres/error.hpp"
#include "sympres/srg/row_check.hpp"

namespace sympres {

// JSON emitters; each document validates against the schema named after it.

nlohmann::json to_json(const Verdict &v);                 // verdict.schema.json
nlohmann::json to_json(const ClassifyReport &r);          // classify_report.schema.json
nlohmann::json to_json(const ThreeFactorWitness &w);          // three_factor.schema.json
nlohmann::json to_json(const RowCheck &c);                // row_check.schema.json
/// The measured bundle alone, without the tabulated values.
nlohmann::json bundle_json(const RowCheck &c);            // bundle.schema.json
nlohmann::json verify_tables_json(const std::vector<RowCheck> &checks); // verify_tables.schema.json
nlohmann::json charpoly_check_json(int m, int a, int i);          // charpoly_check.schema.json
nlohmann::json catalog_json();                            // catalog.schema.json
nlohmann::json error_json(const Error &e);                // error.schema.json

/// McKay graph of H with the twisting action of K/H.
struct McKayReport {
  KleinianSpec k, h;
  GammaAction action;
};
McKayReport mckay_report(const KleinianSpec &k, const KleinianSpec &h);
nlohmann::json to_json(const McKayReport &r);             // mckay.schema.json
/// Graphviz rendering; vertices labeled "rho_i(dim d)" and filled by orbit.
std::string to_dot(const McKayReport &r);

// Plain-text renderings.
std::string to_text(const Verdict &v);
std::string to_text(const ClassifyReport &r);
std::string to_text(const ThreeFactorWitness &w);
std::string to_text(const RowCheck &c);
std::string bundle_text(const RowCheck &c);
std::string to_text(const McKayReport &r);
std::string catalog_text();

/// Orbit id of every vertex, numbered by first appearance.
std::vector<int> vertex_orbit_ids(const GammaAction &a);

} // namespace sympres

#endif // SYMPRES_IO_REPORT_HPP
