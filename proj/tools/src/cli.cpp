#include "sympres_cli/cli.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <regex>

#include <CLI11.hpp>

#include "sympres/error.hpp"
#include "sympres/io/report.hpp"

namespace sympres::cli {

namespace {

using nlohmann::json;

// A usage problem found after CLI11 has parsed the arguments.
struct UsageError {
  std::string message;
};

enum class Format { Json, Text, Dot };

struct Options {
  Format format = Format::Json;
  int max_m = 4;
  int max_l = 4;
  bool include_large = false;
  std::string params;
  std::vector<int> ns{3, 4};
  std::string target;
  int m = 0, a = 0, i = 0;
};

std::map<std::string, std::string> parse_params(const std::string &text)
{
  std::map<std::string, std::string> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size())
      throw UsageError{"--params expects k=v,... but got '" + item + "'"};
    out[item.substr(0, eq)] = item.substr(eq + 1);
    if (comma == std::string::npos)
      break;
    pos = comma + 1;
  }
  return out;
}

int to_int(const std::string &key, const std::string &value)
{
  try {
    std::size_t used = 0;
    int v = std::stoi(value, &used);
    if (used == value.size())
      return v;
  } catch (const std::exception &) {
  }
  throw UsageError{"parameter " + key + " must be an integer, got '" + value + "'"};
}

// "A(m=2)" or a bare letter combined with --params m=2.
TableRow resolve_row(const std::string &spec, const std::map<std::string, std::string> &params)
{
  std::map<std::string, std::string> rest = params;
  rest.erase("n");
  if (rest.empty())
    return parse_row_spec(spec);
  if (spec.find('(') != std::string::npos)
    throw UsageError{"give row parameters either inline or via --params, not both"};
  std::string text = spec + "(";
  bool first = true;
  for (const auto &[k, v] : rest) {
    text += (first ? "" : ",") + k + "=" + std::to_string(to_int(k, v));
    first = false;
  }
  return parse_row_spec(text + ")");
}

// "G_3(D2,C2)", "G3(D2,C2)", or "D2/C2" with --params n=3.
std::optional<CaseN> resolve_case_n(const std::string &spec, const std::map<std::string, std::string> &params)
{
  static const std::regex gn(R"(G_?(\d+)\(([A-Z]\d*),([A-Z]\d*)\))");
  static const std::regex pair(R"(([A-Z]\d*)/([A-Z]\d*))");
  std::smatch mt;
  if (std::regex_match(spec, mt, gn))
    return CaseN{to_int("n", mt[1]), KleinianSpec::parse(mt[2].str()), KleinianSpec::parse(mt[3].str())};
  if (std::regex_match(spec, mt, pair)) {
    auto n = params.find("n");
    if (n == params.end())
      throw UsageError{"K/H input needs --params n=<n>"};
    return CaseN{to_int("n", n->second), KleinianSpec::parse(mt[1].str()), KleinianSpec::parse(mt[2].str())};
  }
  return std::nullopt;
}

std::pair<KleinianSpec, KleinianSpec> resolve_pair(const std::string &spec)
{
  std::size_t slash = spec.find('/');
  if (slash == std::string::npos)
    throw UsageError{"expected <K>/<H>, e.g. O/T"};
  return {KleinianSpec::parse(spec.substr(0, slash)), KleinianSpec::parse(spec.substr(slash + 1))};
}

int row_bound(const TableRow &row, bool include_large)
{
  int bound = default_order_bound();
  if (include_large)
    bound = std::max<long long>(bound, 2LL * row.k.order() * row.h.order());
  return bound;
}

void require_format(const Options &o, std::initializer_list<Format> allowed)
{
  if (std::find(allowed.begin(), allowed.end(), o.format) == allowed.end())
    throw UsageError{"this subcommand does not support the requested --format"};
}

void emit(std::ostream &out, const json &doc) { out << doc.dump(2) << "\n"; }

int cmd_catalog(const Options &o, std::ostream &out)
{
  require_format(o, {Format::Json, Format::Text});
  if (o.format == Format::Json)
    emit(out, catalog_json());
  else
    out << catalog_text();
  return kExitOk;
}

int cmd_build(const Options &o, std::ostream &out)
{
  require_format(o, {Format::Json, Format::Text});
  TableRow row = resolve_row(o.target, parse_params(o.params));
  RowCheck c = check_row(row, row_bound(row, o.include_large));
  if (o.format == Format::Json)
    emit(out, bundle_json(c));
  else
    out << bundle_text(c);
  return kExitOk;
}

int cmd_verify_tables(const Options &o, std::ostream &out)
{
  require_format(o, {Format::Json, Format::Text});
  std::vector<RowCheck> checks;
  for (const auto &row : default_rows(o.max_m, o.max_l, o.include_large))
    checks.push_back(check_row(row, row_bound(row, o.include_large)));
  json doc = verify_tables_json(checks);
  if (o.format == Format::Json) {
    emit(out, doc);
  } else {
    for (const auto &c : checks)
      out << to_text(c);
    out << "failures: " << doc["failures"].get<int>() << "\n";
  }
  return doc["failures"].get<int>() == 0 ? kExitOk : kExitFailure;
}

int cmd_mckay(const Options &o, std::ostream &out)
{
  auto [k, h] = resolve_pair(o.target);
  McKayReport r = mckay_report(k, h);
  switch (o.format) {
  case Format::Json: emit(out, to_json(r)); break;
  case Format::Text: out << to_text(r); break;
  case Format::Dot: out << to_dot(r); break;
  }
  return kExitOk;
}

int cmd_classify(const Options &o, std::ostream &out)
{
  require_format(o, {Format::Json, Format::Text});
  auto params = parse_params(o.params);
  Verdict v;
  if (auto cn = resolve_case_n(o.target, params))
    v = classify(*cn);
  else
    v = classify(resolve_row(o.target, params));
  if (o.format == Format::Json)
    emit(out, to_json(v));
  else
    out << to_text(v);
  return kExitOk;
}

int cmd_classify_all(const Options &o, std::ostream &out)
{
  require_format(o, {Format::Json, Format::Text});
  ClassifyOptions opt;
  opt.max_m = o.max_m;
  opt.max_l = o.max_l;
  opt.include_large = o.include_large;
  opt.ns = o.ns;
  ClassifyReport r = classify_all(opt);
  if (o.format == Format::Json)
    emit(out, to_json(r));
  else
    out << to_text(r);
  return r.mismatches() == 0 ? kExitOk : kExitFailure;
}

int cmd_three_factor(const Options &o, std::ostream &out)
{
  require_format(o, {Format::Json, Format::Text});
  ThreeFactorWitness w = verify_lemma71();
  if (o.format == Format::Json)
    emit(out, to_json(w));
  else
    out << to_text(w) << "all checks passed\n";
  return kExitOk;
}

int cmd_charpoly_check(const Options &o, std::ostream &out)
{
  require_format(o, {Format::Json, Format::Text});
  json doc = charpoly_check_json(o.m, o.a, o.i);
  bool holds = doc["holds"].get<bool>();
  if (o.format == Format::Json)
    emit(out, doc);
  else
    out << "m=" << o.m << " a=" << o.a << " i=" << o.i << ": charpoly " << (holds ? "matches" : "DIFFERS")
        << "\n";
  return holds ? kExitOk : kExitFailure;
}

void report_error(std::ostream &err, const Error &e) { err << error_json(e).dump() << "\n"; }

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Symplectic reflection groups: tables, McKay graphs and resolvability verdicts", "sympres"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  std::map<std::string, Format> formats{{"json", Format::Json}, {"text", Format::Text}, {"dot", Format::Dot}};
  app.add_option("--format", o.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->default_str("json");

  auto grid = [&](CLI::App *sub) {
    sub->add_option("--max-m", o.max_m, "Largest m in the grid")->check(CLI::Range(1, 64));
    sub->add_option("--max-l", o.max_l, "Largest l in the grid")->check(CLI::Range(1, 64));
    sub->add_flag("--include-large", o.include_large, "Include rows above the default closure bound");
  };

  auto *catalog = app.add_subcommand("catalog", "List Kleinian groups and table rows");
  auto *build = app.add_subcommand("build", "Build G(K,H,alpha) for a table row");
  build->add_option("row", o.target, "Row spec, e.g. A(m=2) or H")->required();
  build->add_option("--params", o.params, "Row parameters k=v,...");
  build->add_flag("--include-large", o.include_large, "Raise the closure bound to 2|K||H|");
  auto *verify = app.add_subcommand("verify-tables", "Recompute |G| and |L_alpha| over the parameter grid");
  grid(verify);
  auto *mckay = app.add_subcommand("mckay", "McKay graph of H with the action of K/H");
  mckay->add_option("pair", o.target, "<K>/<H>, e.g. O/T")->required();
  auto *cls = app.add_subcommand("classify", "Resolvability verdict for one input");
  cls->add_option("input", o.target, "Row spec, G_n(K,H), or K/H with --params n=...")->required();
  cls->add_option("--params", o.params, "Parameters k=v,... (m, l, r, n)");
  auto *all = app.add_subcommand("classify-all", "Full report; exits 1 on any mismatch");
  grid(all);
  all->add_option("--n", o.ns, "Values of n for G_n(K,H)")->check(CLI::Range(3, 8));
  auto *lemma = app.add_subcommand("verify-lemma71", "Fixed-point and tangent checks for G_3(D2,C2)");
  auto *prop = app.add_subcommand("check-prop57", "Characteristic polynomial identity for one (m, a, i)");
  prop->add_option("--m", o.m)->required();
  prop->add_option("--a", o.a)->required();
  prop->add_option("--i", o.i)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n" << "run 'sympres --help' for usage\n";
    return kExitUsage;
  }

  try {
    if (catalog->parsed())
      return cmd_catalog(o, out);
    if (build->parsed())
      return cmd_build(o, out);
    if (verify->parsed())
      return cmd_verify_tables(o, out);
    if (mckay->parsed())
      return cmd_mckay(o, out);
    if (cls->parsed())
      return cmd_classify(o, out);
    if (all->parsed())
      return cmd_classify_all(o, out);
    if (lemma->parsed())
      return cmd_three_factor(o, out);
    if (prop->parsed())
      return cmd_charpoly_check(o, out);
  } catch (const UsageError &e) {
    err << "error: " << e.message << "\n";
    return kExitUsage;
  } catch (const Error &e) {
    report_error(err, e);
    return e.code() == ErrorCode::ParseError ? kExitUsage : kExitFailure;
  }
  return kExitUsage;
}

int run_cli(int argc, char **argv, std::ostream &out, std::ostream &err)
{
  std::vector<std::string> args(argv + (argc > 0 ? 1 : 0), argv + argc);
  return run_cli(args, out, err);
}

} // namespace sympres::cli
