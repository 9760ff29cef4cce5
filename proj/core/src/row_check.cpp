#include "sympres/srg/row_check.hpp"

namespace sympres {

RowCheck check_row(const TableRow &row, int bound)
{
  SRGroupBundle b = build_G2(row.k, row.h, row.alpha, bound);
  RowCheck c;
  c.row = row;
  c.order = b.g.order();
  c.l_alpha = static_cast<long long>(l_alpha(b).size());
  auto refl = symplectic_reflections(b);
  c.reflections = static_cast<long long>(refl.size());
  c.census_formula = 2LL * (static_cast<long long>(b.h.size()) - 1) + c.l_alpha;
  c.reflections_generate = reflections_generate(b.g, refl);
  return c;
}

} // namespace sympres
