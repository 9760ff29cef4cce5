#ifndef SYMPRES_CLASSIFY_VERDICT_HPP
#define SYMPRES_CLASSIFY_VERDICT_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sympres/classify/criteria.hpp"
#include "sympres/classify/singular.hpp"
#include "sympres/srg/table_rows.hpp"

namespace sympres {

/// Rank-4 input G(K, H, alpha).
struct Case2 {
  KleinianSpec k, h;
  InvolutionSpec alpha;
  std::string label;

  static Case2 from_row(const TableRow &row);
};

/// G_n(K, H), n >= 3.
struct CaseN {
  int n = 3;
  KleinianSpec k, h;

  std::string label() const;
};

/// The stabilizer of (0, 0, p_3, ..., p_n) for distinct generic p_i.
struct ParabolicReduction {
  int n = 0;
  std::string stabilizer;
  long long stabilizer_order = 0;
  std::optional<ThreeFactorWitness> lemma;
};

enum class VerdictKind { Resolvable, NotResolvable, Open };
std::string to_string(VerdictKind k);

using Witness = std::variant<std::monostate, SingularWitness, OrderSixWitness, ParabolicReduction>;

struct Verdict {
  std::string input;
  VerdictKind result = VerdictKind::Open;
  /// Short rule tag: "wreath", "singular-subgroup", "order-ge-6", ...
  std::string rule;
  std::string reason;
  /// Set when no criterion applied; only possible for inputs outside the tables.
  bool inconclusive = false;
  Witness witness;
  std::vector<std::string> citations;
  std::vector<std::string> notes;
};

Verdict classify(const Case2 &c);
Verdict classify(const TableRow &row);
/// Raises InvalidRowParameters for n < 3 or [K,K] not inside H.
Verdict classify(const CaseN &c);

/// Built-in expectation for the table rows and the n >= 3 series.
VerdictKind expected_verdict(const TableRow &row);
VerdictKind expected_verdict(const CaseN &c);

/// Every (n, K, H) with n in `ns`, K among C_m (2 <= m <= max_m), D_m
/// (m <= max_m), T, O, I and H a supported normal subgroup containing [K,K].
std::vector<CaseN> default_case_n(int max_m, const std::vector<int> &ns);

struct PrimitiveEntry {
  std::string type;
  int dimension = 0;
  VerdictKind result = VerdictKind::Open;
  /// Stabilizer subgroup the verdict is reduced to, empty for Open types.
  std::string reduction;
  std::string reason;
};
/// The exceptional primitive types, with Q and S_3 decided by classifying
/// their stabilizers live.
std::vector<PrimitiveEntry> primitive_report();

struct ReportEntry {
  std::string label;
  Verdict verdict;
  VerdictKind expected = VerdictKind::Open;
  bool matches() const { return verdict.result == expected && !verdict.inconclusive; }
};

struct ClassifyReport {
  std::vector<ReportEntry> rows;
  std::vector<ReportEntry> case_n;
  std::vector<PrimitiveEntry> primitive;
  int mismatches() const;
};

struct ClassifyOptions {
  int max_m = 4;
  int max_l = 4;
  bool include_large = false;
  std::vector<int> ns{3, 4};
};

ClassifyReport classify_all(const ClassifyOptions &opt = {});

} // namespace sympres

#endif // SYMPRES_CLASSIFY_VERDICT_HPP
