#include "sympres/matgrp/table_group.hpp"

#include <algorithm>

#include "sympres/error.hpp"

namespace sympres {

TableGroup::TableGroup(int order, std::vector<int> table, std::vector<int> generators)
    : n_(order), t_(std::move(table)), inv_(order, 0), gens_(std::move(generators))
{
  if (t_.size() != static_cast<std::size_t>(order) * order)
    throw Error(ErrorCode::DimensionMismatch, "Cayley table has the wrong size");
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (mul(a, b) == 0) {
        inv_[a] = b;
        break;
      }
}

TableGroup TableGroup::from_group(const Group &g)
{
  int n = g.order();
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      t[static_cast<std::size_t>(a) * n + b] = g.mul(a, b);
  return TableGroup(n, std::move(t), g.generators());
}

TableGroup TableGroup::restrict_to(const Group &g, const Subset &s)
{
  int n = static_cast<int>(s.size());
  std::vector<int> local(g.order(), -1);
  for (int i = 0; i < n; ++i)
    local[s[i]] = i;
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int c = local[g.mul(s[a], s[b])];
      if (c < 0)
        throw Error(ErrorCode::NotASubgroup, "subset is not closed under multiplication");
      t[static_cast<std::size_t>(a) * n + b] = c;
    }
  TableGroup tg(n, std::move(t), {});
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i)
    all[i] = i;
  tg.gens_ = reduce_generators(tg, all);
  return tg;
}

QuotientGroup::QuotientGroup(const Group &parent, const Subset &normal) : normal_(normal)
{
  // Exact subgroup test: N must equal the subgroup generated by N.
  bool ok = !normal.empty() && normal[0] == 0 && std::is_sorted(normal.begin(), normal.end());
  if (ok)
    ok = generate(parent, reduce_generators(parent, normal)) == normal;
  if (!ok)
    throw Error(ErrorCode::NotASubgroup, "quotient by a subset that is not a subgroup");
  if (!is_normal(parent, normal))
    throw Error(ErrorCode::NotNormal, "quotient by a subgroup that is not normal");
  int n = parent.order();
  coset_of_.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    if (coset_of_[x] >= 0)
      continue;
    int c = static_cast<int>(reps_.size());
    reps_.push_back(x);
    std::vector<int> mem;
    for (int h : normal_) {
      int y = parent.mul(x, h);
      coset_of_[y] = c;
      mem.push_back(y);
    }
    std::sort(mem.begin(), mem.end());
    members_.push_back(std::move(mem));
  }
  int q = static_cast<int>(reps_.size());
  std::vector<int> t(static_cast<std::size_t>(q) * q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      t[static_cast<std::size_t>(a) * q + b] = coset_of_[parent.mul(reps_[a], reps_[b])];
  std::vector<int> gens;
  for (int g : parent.generators()) {
    int c = coset_of_[g];
    if (c != 0 && std::find(gens.begin(), gens.end(), c) == gens.end())
      gens.push_back(c);
  }
  table_ = TableGroup(q, std::move(t), std::move(gens));
}

} // namespace sympres
