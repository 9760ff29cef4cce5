#ifndef SYMPRES_SRG_ROW_CHECK_HPP
#define SYMPRES_SRG_ROW_CHECK_HPP

#include <string>

#include "sympres/srg/bundle.hpp"
#include "sympres/srg/table_rows.hpp"

namespace sympres {

/// Recomputed invariants of one table row next to the tabulated values.
struct RowCheck {
  TableRow row;
  long long order = 0;
  long long l_alpha = 0;
  long long reflections = 0;
  /// 2(|H| - 1) + |L_alpha|.
  long long census_formula = 0;
  bool reflections_generate = false;

  bool order_matches() const { return order == row.table_order; }
  bool l_alpha_matches() const { return l_alpha == row.table_l_alpha; }
  bool census_matches() const { return reflections == census_formula; }
  bool passes() const { return order_matches() && l_alpha_matches(); }
};

/// Builds G(K,H,alpha) for the row and measures it. `bound` caps the
/// closure; large rows need at least 2|K||H|.
RowCheck check_row(const TableRow &row, int bound = default_order_bound());

} // namespace sympres

#endif // SYMPRES_SRG_ROW_CHECK_HPP
