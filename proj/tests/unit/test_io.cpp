#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "sympres/error.hpp"
#include "sympres/io/report.hpp"
#include "sympres/io/schema.hpp"

using namespace sympres;
using nlohmann::json;

namespace {

using K = KleinianSpec;

void expect_valid(const json &doc, const char *name)
{
  EXPECT_EQ(validate(doc, name), "") << doc.dump().substr(0, 400);
  // Text round trip preserves the document exactly.
  EXPECT_EQ(json::parse(doc.dump()), doc);
}

TableRow row(const char *spec) { return parse_row_spec(spec); }

} // namespace

TEST(Schema, EveryEmbeddedSchemaIsAnObject)
{
  auto names = schema_names();
  EXPECT_EQ(names.size(), 10u);
  for (const auto &n : names) {
    EXPECT_TRUE(schema(n).is_object()) << n;
    EXPECT_EQ(schema(n).at("$id"), n);
  }
  EXPECT_THROW(schema("nope.schema.json"), Error);
}

TEST(Schema, RejectsViolations)
{
  json ok = {{"error", "ParseError"}, {"detail", "x"}};
  EXPECT_EQ(validate(ok, "error.schema.json"), "");
  json missing = {{"error", "ParseError"}};
  EXPECT_NE(validate(missing, "error.schema.json"), "");
  json extra = ok;
  extra["more"] = 1;
  EXPECT_NE(validate(extra, "error.schema.json"), "");
  json wrong_type = {{"error", 3}, {"detail", "x"}};
  EXPECT_NE(validate(wrong_type, "error.schema.json"), "");

  json v = to_json(classify(Case2::from_row(row("A(m=2)"))));
  ASSERT_EQ(validate(v, "verdict.schema.json"), "");
  json bad_enum = v;
  bad_enum["result"] = "Maybe";
  EXPECT_NE(validate(bad_enum, "verdict.schema.json"), "");
  json bad_kind = v;
  bad_kind["witness"]["kind"] = "other";
  EXPECT_NE(validate(bad_kind, "verdict.schema.json"), "");
  json negative = v;
  negative["witness"]["translation"] = -1;
  EXPECT_NE(validate(negative, "verdict.schema.json"), "");
  EXPECT_THROW(require_valid(bad_enum, "verdict.schema.json"), Error);
}

TEST(Report, VerdictDocuments)
{
  for (const char *spec : {"A(m=2)", "B(m=1,l=1,r=1)", "E(m=1)", "H", "I", "N", "G(m=2,r=1)", "D(m=3)"}) {
    Verdict v = classify(Case2::from_row(row(spec)));
    json j = to_json(v);
    expect_valid(j, "verdict.schema.json");
    EXPECT_EQ(j["result"], std::string(to_string(v.result)));
    EXPECT_FALSE(to_text(v).empty());
  }
  json s = to_json(classify(Case2::from_row(row("A(m=2)"))));
  EXPECT_EQ(s["witness"]["kind"], "singular");
  json n = to_json(classify(CaseN{3, K::binary_dihedral(2), K::cyclic(2)}));
  expect_valid(n, "verdict.schema.json");
  EXPECT_EQ(n["witness"]["kind"], "parabolic");
  EXPECT_EQ(n["witness"]["stabilizer_order"], 768);
  EXPECT_TRUE(n["witness"]["three_factor"]["passed"].get<bool>());
}

TEST(Report, ClassifyReportDocument)
{
  ClassifyOptions opts;
  opts.max_m = 2;
  opts.max_l = 2;
  opts.ns = {3};
  ClassifyReport r = classify_all(opts);
  json j = to_json(r);
  expect_valid(j, "classify_report.schema.json");
  EXPECT_EQ(j["rows"].size(), r.rows.size());
  EXPECT_EQ(j["primitive"].size(), 7u);
  EXPECT_EQ(j["mismatches"], r.mismatches());
}

TEST(Report, ThreeFactorAndCharpolyDocuments)
{
  expect_valid(to_json(verify_lemma71()), "three_factor.schema.json");
  json p = charpoly_check_json(5, 3, 2);
  expect_valid(p, "charpoly_check.schema.json");
  EXPECT_TRUE(p["holds"].get<bool>());
  EXPECT_EQ(p["charpoly"], p["expected"]);
  EXPECT_EQ(p["matrix"].size(), 16u);
}

TEST(Report, RowCheckDocuments)
{
  std::vector<RowCheck> checks{check_row(row("E(m=2)")), check_row(row("A(m=2)")), check_row(row("O"))};
  for (const auto &c : checks) {
    expect_valid(to_json(c), "row_check.schema.json");
    expect_valid(bundle_json(c), "bundle.schema.json");
  }
  json all = verify_tables_json(checks);
  expect_valid(all, "verify_tables.schema.json");
  // Row (O) disagrees with the printed |L_alpha|.
  EXPECT_EQ(all["failures"], 1);
  EXPECT_FALSE(all["rows"][2]["pass"].get<bool>());
}

TEST(Report, CatalogDocument)
{
  json c = catalog_json();
  expect_valid(c, "catalog.schema.json");
  std::set<std::string> letters;
  for (const auto &r : c["rows"])
    letters.insert(r["letter"].get<std::string>());
  EXPECT_EQ(letters.size(), row_letters().size());
  EXPECT_FALSE(catalog_text().empty());
}

TEST(Report, McKayDocument)
{
  McKayReport r = mckay_report(K::binary_dihedral(2), K::cyclic(2));
  json j = to_json(r);
  expect_valid(j, "mckay.schema.json");
  EXPECT_EQ(j["gamma_order"], 4);
  // Orbit ids are constant on Gamma-orbits and the action permutes vertices.
  auto orbit = vertex_orbit_ids(r.action);
  for (const auto &perm : r.action.perm) {
    auto sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (int v = 0; v < r.action.vertex_count(); ++v) {
      EXPECT_EQ(sorted[v], v);
      EXPECT_EQ(orbit[perm[v]], orbit[v]);
    }
  }
  std::string dot = to_dot(r);
  EXPECT_EQ(dot.rfind("graph mckay {", 0), 0u);
  EXPECT_NE(dot.find("fillcolor"), std::string::npos);
}

TEST(Report, ErrorDocument)
{
  json e = error_json(Error(ErrorCode::InvalidRowParameters, "m must be positive"));
  expect_valid(e, "error.schema.json");
  EXPECT_EQ(e["error"], "InvalidRowParameters");
}
