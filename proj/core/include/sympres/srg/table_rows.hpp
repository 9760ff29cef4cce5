#ifndef SYMPRES_SRG_TABLE_ROWS_HPP
#define SYMPRES_SRG_TABLE_ROWS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "sympres/srg/involution.hpp"

namespace sympres {

struct RowParams {
  int m = -1;
  int l = -1;
  int r = -1;
};

/// One instantiated row (A)-(V) of the imprimitive rank-4 tables.
struct TableRow {
  char letter = 'A';
  RowParams params;
  KleinianSpec k, h;
  InvolutionSpec alpha;
  /// Name of K/H as printed in the table.
  std::string gamma_name;
  /// Tabulated |G| and |L_alpha|.
  long long table_order = 0;
  long long table_l_alpha = 0;

  /// "B(m=1,l=1,r=1)" or "H".
  std::string label() const;
  /// Whether 2|K||H| passes the default closure bound.
  bool large() const;
};

/// "ABCDEFGHIJKLMNOPQRSTUV".
const std::string &row_letters();
/// Parameter names used by a row, e.g. "mlr" for B, "" for H.
std::string row_parameter_names(char letter);
/// Human-readable constraint text for a row.
std::string row_constraints(char letter);
/// Whether the table's side conditions hold.
bool row_params_valid(char letter, const RowParams &p);

/// Raises ParseError for an unknown letter, InvalidRowParameters for
/// missing or extra parameters, ParameterConstraintViolated when the side
/// conditions fail.
TableRow make_row(char letter, const RowParams &p);
/// Parses "A(m=2)", "B(m=1,l=1,r=1)", "H", ...
TableRow parse_row_spec(std::string_view text);

/// Every valid instance with m <= max_m, l <= max_l (all valid r), plus a
/// few instances with r != 1. Rows above the default closure bound are
/// included only when `include_large` is set.
std::vector<TableRow> default_rows(int max_m, int max_l, bool include_large);

} // namespace sympres

#endif // SYMPRES_SRG_TABLE_ROWS_HPP
