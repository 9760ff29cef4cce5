#include "sympres/io/report.hpp"

#include <sstream>

#include "sympres/kleinian/kleinian.hpp"

namespace sympres {

using nlohmann::json;

namespace {

json point_json(const MarkedPoint &p)
{
  bool inter = p.kind == MarkedKind::Intersection;
  return {{"kind", inter ? "intersection" : "free"},
          {"vertex", p.v},
          {"other", inter ? json(p.u) : json(nullptr)},
          {"member", p.member},
          {"stabilizer", p.stabilizer}};
}

json witness_json(const Witness &w)
{
  if (const auto *s = std::get_if<SingularWitness>(&w))
    return {{"kind", "singular"}, {"rule", to_string(s->rule)}, {"P", s->p}, {"P_generators", s->p_generators},
            {"alpha_P", s->alpha_p}, {"x", point_json(s->x)}, {"y", point_json(s->y)},
            {"translation", s->translation}, {"citation", s->citation}};
  if (const auto *o = std::get_if<OrderSixWitness>(&w))
    return {{"kind", "order"}, {"element", o->element}, {"order", o->order}, {"matrix", o->matrix.serialize()}};
  if (const auto *r = std::get_if<ParabolicReduction>(&w))
    return {{"kind", "parabolic"},
            {"n", r->n},
            {"stabilizer", r->stabilizer},
            {"stabilizer_order", r->stabilizer_order},
            {"three_factor", r->lemma ? to_json(*r->lemma) : json(nullptr)}};
  return nullptr;
}

json entry_json(const ReportEntry &e)
{
  return {{"label", e.label}, {"expected", to_string(e.expected)}, {"match", e.matches()}, {"verdict", to_json(e.verdict)}};
}

json strings(const std::vector<Cyclotomic> &v)
{
  json out = json::array();
  for (const auto &x : v)
    out.push_back(x.to_string());
  return out;
}

std::string kleinian_family(const KleinianSpec &s)
{
  switch (s.family) {
  case KleinianFamily::Cyclic: return "cyclic";
  case KleinianFamily::BinaryDihedral: return "binary dihedral";
  case KleinianFamily::Tetrahedral: return "binary tetrahedral";
  case KleinianFamily::Octahedral: return "binary octahedral";
  case KleinianFamily::Icosahedral: return "binary icosahedral";
  }
  return "?";
}

std::vector<KleinianSpec> kleinian_catalog()
{
  std::vector<KleinianSpec> out;
  for (int m = 1; m <= 12; ++m)
    out.push_back(KleinianSpec::cyclic(m));
  for (int m = 1; m <= 6; ++m)
    out.push_back(KleinianSpec::binary_dihedral(m));
  out.push_back(KleinianSpec::T());
  out.push_back(KleinianSpec::O());
  out.push_back(KleinianSpec::I());
  return out;
}

// First instance of each letter, smallest parameters first.
std::vector<TableRow> row_examples()
{
  std::vector<TableRow> out;
  for (const auto &row : default_rows(4, 4, true))
    if (out.empty() || out.back().letter != row.letter)
      out.push_back(row);
  return out;
}

std::string vertex_label(const GammaAction &a, int v)
{
  return "rho_" + std::to_string(v) + "(dim " + std::to_string(a.graph.dims[v]) + ")";
}

} // namespace

json to_json(const Verdict &v)
{
  return {{"input", v.input},       {"result", to_string(v.result)},
          {"rule", v.rule},         {"reason", v.reason},
          {"inconclusive", v.inconclusive}, {"witness", witness_json(v.witness)},
          {"citations", v.citations}, {"notes", v.notes}};
}

json to_json(const ClassifyReport &r)
{
  json rows = json::array(), cases = json::array(), prim = json::array();
  for (const auto &e : r.rows)
    rows.push_back(entry_json(e));
  for (const auto &e : r.case_n)
    cases.push_back(entry_json(e));
  for (const auto &p : r.primitive)
    prim.push_back({{"type", p.type},
                    {"dimension", p.dimension},
                    {"result", to_string(p.result)},
                    {"reduction", p.reduction},
                    {"reason", p.reason}});
  return {{"rows", rows}, {"case_n", cases}, {"primitive", prim}, {"mismatches", r.mismatches()}};
}

json to_json(const ThreeFactorWitness &w)
{
  json elements = json::array(), fixed = json::array(), point = json::array();
  for (const auto &m : w.elements)
    elements.push_back(m.serialize());
  for (const auto &f : w.fixed) {
    json pair = json::array();
    for (const auto &p : f)
      pair.push_back(p.to_string());
    fixed.push_back(pair);
  }
  for (const auto &p : w.point)
    point.push_back(p.to_string());
  return {{"elements", elements},
          {"fixed_points", fixed},
          {"point", point},
          {"wreath_stabilizer_order", w.wreath_stabilizer_order},
          {"stabilizer", w.stabilizer},
          {"tangent_weights", strings(w.tangent_weights)},
          {"tangent_rank", w.tangent_rank},
          {"passed", true}};
}

json to_json(const RowCheck &c)
{
  return {{"row", c.row.label()},
          {"K", c.row.k.name()},
          {"H", c.row.h.name()},
          {"gamma", c.row.gamma_name},
          {"alpha", c.row.alpha.describe()},
          {"order", c.order},
          {"table_order", c.row.table_order},
          {"l_alpha", c.l_alpha},
          {"table_l_alpha", c.row.table_l_alpha},
          {"reflections", c.reflections},
          {"census_formula", c.census_formula},
          {"reflections_generate", c.reflections_generate},
          {"pass", c.passes()}};
}

json bundle_json(const RowCheck &c)
{
  return {{"row", c.row.label()},
          {"K", c.row.k.name()},
          {"H", c.row.h.name()},
          {"gamma", c.row.gamma_name},
          {"alpha", c.row.alpha.describe()},
          {"order", c.order},
          {"l_alpha", c.l_alpha},
          {"reflection_count", c.reflections},
          {"generated_by_reflections", c.reflections_generate}};
}

json verify_tables_json(const std::vector<RowCheck> &checks)
{
  json rows = json::array();
  int failures = 0;
  for (const auto &c : checks) {
    rows.push_back(to_json(c));
    failures += !c.passes();
  }
  return {{"rows", rows}, {"failures", failures}};
}

json charpoly_check_json(int m, int a, int i)
{
  bool holds = charpoly_prop57_check(m, a, i);
  return {{"m", m},
          {"a", a},
          {"i", i},
          {"matrix", twisted_swap_matrix(m, a, i).serialize()},
          {"charpoly", strings(twisted_swap_matrix(m, a, i).characteristic_polynomial())},
          {"expected", strings(twisted_swap_quartic(m, a, i))},
          {"holds", holds}};
}

json catalog_json()
{
  json kl = json::array(), rows = json::array();
  for (const auto &s : kleinian_catalog())
    kl.push_back({{"name", s.name()}, {"family", kleinian_family(s)}, {"order", s.order()}});
  for (const auto &row : row_examples())
    rows.push_back({{"letter", std::string(1, row.letter)},
                    {"parameters", row_parameter_names(row.letter)},
                    {"constraints", row_constraints(row.letter)},
                    {"example",
                     {{"label", row.label()},
                      {"K", row.k.name()},
                      {"H", row.h.name()},
                      {"gamma", row.gamma_name},
                      {"alpha", row.alpha.describe()},
                      {"order", row.table_order},
                      {"l_alpha", row.table_l_alpha}}}});
  return {{"kleinian", kl}, {"rows", rows}};
}

json error_json(const Error &e) { return {{"error", std::string(to_string(e.code()))}, {"detail", e.detail()}}; }

McKayReport mckay_report(const KleinianSpec &k, const KleinianSpec &h)
{
  FiniteMatrixGroup kg = build_kleinian(k);
  Subset hs = canonical_subset(kg, k, h, true);
  auto gamma = std::make_shared<QuotientGroup>(kg, hs);
  return {k, h, gamma_action(kg, hs, gamma)};
}

std::vector<int> vertex_orbit_ids(const GammaAction &a)
{
  std::vector<int> id(a.vertex_count(), -1);
  int next = 0;
  for (int v = 0; v < a.vertex_count(); ++v) {
    if (id[v] >= 0)
      continue;
    for (int u : vertex_orbit(a, v))
      id[u] = next;
    ++next;
  }
  return id;
}

json to_json(const McKayReport &r)
{
  const auto &a = r.action;
  auto orbit = vertex_orbit_ids(a);
  json vertices = json::array();
  for (int v = 0; v < a.vertex_count(); ++v)
    vertices.push_back({{"index", v}, {"dim", a.graph.dims[v]}, {"label", vertex_label(a, v)}, {"orbit", orbit[v]}});
  return {{"K", r.k.name()},
          {"H", r.h.name()},
          {"gamma_order", a.gamma->order()},
          {"vertices", vertices},
          {"m", a.graph.m},
          {"ade_type", a.graph.ade_type},
          {"extending_vertex", a.graph.extending_vertex},
          {"action", a.perm}};
}

std::string to_dot(const McKayReport &r)
{
  static const char *palette[] = {"white", "lightblue", "lightpink", "palegreen", "khaki", "plum", "lightsalmon",
                                  "lightcyan", "wheat"};
  const auto &a = r.action;
  auto orbit = vertex_orbit_ids(a);
  std::ostringstream os;
  os << "graph mckay {\n  label=\"" << r.h.name() << " in " << r.k.name() << ", affine " << a.graph.ade_type
     << "\";\n  node [style=filled];\n";
  for (int v = 0; v < a.vertex_count(); ++v)
    os << "  v" << v << " [label=\"" << vertex_label(a, v) << "\", fillcolor=" << palette[orbit[v] % 9]
       << (v == a.graph.extending_vertex ? ", shape=doublecircle" : "") << "];\n";
  for (int v = 0; v < a.vertex_count(); ++v)
    for (int u = v; u < a.vertex_count(); ++u)
      for (int e = 0; e < (u == v ? a.graph.m[v][u] / 2 : a.graph.m[v][u]); ++e)
        os << "  v" << v << " -- v" << u << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_text(const Verdict &v)
{
  std::ostringstream os;
  os << v.input << ": " << to_string(v.result) << " [" << v.rule << "] " << v.reason;
  if (const auto *s = std::get_if<SingularWitness>(&v.witness))
    os << "\n  P order " << s->p.size() << ", x = " << s->x.describe() << ", y = " << s->y.describe()
       << ", translation " << s->translation;
  if (const auto *o = std::get_if<OrderSixWitness>(&v.witness))
    os << "\n  element " << o->element << " of order " << o->order;
  if (const auto *r = std::get_if<ParabolicReduction>(&v.witness))
    os << "\n  stabilizer " << r->stabilizer << " of order " << r->stabilizer_order
       << (r->lemma ? ", three-factor check passed" : "");
  for (const auto &c : v.citations)
    os << "\n  cites: " << c;
  os << "\n";
  return os.str();
}

std::string to_text(const ClassifyReport &r)
{
  std::ostringstream os;
  auto line = [&](const ReportEntry &e) {
    os << (e.matches() ? "ok       " : "MISMATCH ") << e.label << "  " << to_string(e.verdict.result) << " ["
       << e.verdict.rule << "]";
    if (!e.matches())
      os << "  expected " << to_string(e.expected);
    os << "\n";
  };
  for (const auto &e : r.rows)
    line(e);
  for (const auto &e : r.case_n)
    line(e);
  for (const auto &p : r.primitive)
    os << "primitive " << p.type << " (dim " << p.dimension << ")  " << to_string(p.result)
       << (p.reduction.empty() ? "" : "  via " + p.reduction) << "\n";
  os << "mismatches: " << r.mismatches() << "\n";
  return os.str();
}

std::string to_text(const ThreeFactorWitness &w)
{
  std::ostringstream os;
  const char *names[] = {"g", "h", "gh"};
  for (int k = 0; k < 3; ++k)
    os << "F_" << names[k] << " = {" << w.fixed[k][0].pretty() << ", " << w.fixed[k][1].pretty() << "}\n";
  os << "p = (";
  for (std::size_t k = 0; k < w.point.size(); ++k)
    os << (k ? ", " : "") << w.point[k].pretty();
  os << ")\n";
  os << "stabilizer of p in D_2 wr S_3: order " << w.wreath_stabilizer_order << "\n";
  os << "stabilizer of p in G_3(D_2, C_2): order " << w.stabilizer.size() << "\n";
  os << "tangent weights:";
  for (const auto &t : w.tangent_weights)
    os << " " << t.pretty();
  os << "\ntangent rank(1 - t) = " << w.tangent_rank << "\n";
  return os.str();
}

std::string to_text(const RowCheck &c)
{
  std::ostringstream os;
  os << (c.passes() ? "PASS " : "FAIL ") << c.row.label() << "  |G| " << c.order << " (table " << c.row.table_order
     << ")  |L| " << c.l_alpha << " (table " << c.row.table_l_alpha << ")  reflections " << c.reflections
     << (c.census_matches() ? "" : " (census mismatch)") << (c.reflections_generate ? "" : "  NOT generated") << "\n";
  return os.str();
}

std::string bundle_text(const RowCheck &c)
{
  std::ostringstream os;
  os << c.row.label() << ": G(" << c.row.k.name() << ", " << c.row.h.name() << ", " << c.row.alpha.describe()
     << ")\n  |G| = " << c.order << "\n  |L_alpha| = " << c.l_alpha << "\n  reflections = " << c.reflections
     << "\n  generated by reflections: " << (c.reflections_generate ? "yes" : "no") << "\n";
  return os.str();
}

std::string to_text(const McKayReport &r)
{
  const auto &a = r.action;
  std::ostringstream os;
  os << r.h.name() << " in " << r.k.name() << ": affine " << a.graph.ade_type << ", |Gamma| = " << a.gamma->order()
     << "\n";
  auto orbit = vertex_orbit_ids(a);
  for (int v = 0; v < a.vertex_count(); ++v) {
    os << "  " << vertex_label(a, v) << "  orbit " << orbit[v] << "  neighbours";
    for (int u = 0; u < a.vertex_count(); ++u)
      if (a.graph.m[v][u])
        os << " " << u << (a.graph.m[v][u] > 1 ? "x" + std::to_string(a.graph.m[v][u]) : "");
    os << "\n";
  }
  return os.str();
}

std::string catalog_text()
{
  std::ostringstream os;
  os << "Kleinian groups:\n";
  for (const auto &s : kleinian_catalog())
    os << "  " << s.name() << "  order " << s.order() << "\n";
  os << "Table rows:\n";
  for (const auto &row : row_examples()) {
    os << "  (" << row.letter << ")";
    if (!row_parameter_names(row.letter).empty())
      os << " " << row_constraints(row.letter) << "; e.g. " << row.label() << ":";
    os << " K = " << row.k.name() << ", H = " << row.h.name() << ", Gamma = " << row.gamma_name
       << ", alpha = " << row.alpha.describe() << ", |G| = " << row.table_order << "\n";
  }
  return os.str();
}

} // namespace sympres
