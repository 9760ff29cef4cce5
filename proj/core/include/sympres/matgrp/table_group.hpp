#ifndef SYMPRES_MATGRP_TABLE_GROUP_HPP
#define SYMPRES_MATGRP_TABLE_GROUP_HPP

#include <vector>

#include "sympres/matgrp/group.hpp"

namespace sympres {

/// Group given by its full Cayley table.
class TableGroup : public Group {
public:
  TableGroup() = default;
  TableGroup(int order, std::vector<int> table, std::vector<int> generators);
  /// Copies the multiplication of any group into a table.
  static TableGroup from_group(const Group &g);
  /// The subgroup `s` of `g` as a standalone table group; `s` is sorted and
  /// element i of the result corresponds to s[i].
  static TableGroup restrict_to(const Group &g, const Subset &s);

  int order() const override { return n_; }
  int mul(int a, int b) const override { return t_[static_cast<std::size_t>(a) * n_ + b]; }
  int inv(int a) const override { return inv_[a]; }
  const std::vector<int> &generators() const override { return gens_; }

private:
  int n_ = 1;
  std::vector<int> t_{0};
  std::vector<int> inv_{0};
  std::vector<int> gens_;
};

/// Parent group modulo a normal subgroup. Coset representatives are the
/// first parent element (in index order) of each coset, so coset 0 is the
/// subgroup itself. Generators are the images of the parent's generators.
class QuotientGroup : public Group {
public:
  QuotientGroup() = default;
  /// Raises NotNormal unless `normal` is a normal subgroup of `parent`.
  QuotientGroup(const Group &parent, const Subset &normal);

  int order() const override { return table_.order(); }
  int mul(int a, int b) const override { return table_.mul(a, b); }
  int inv(int a) const override { return table_.inv(a); }
  const std::vector<int> &generators() const override { return table_.generators(); }

  int project(int parent_element) const { return coset_of_[parent_element]; }
  int representative(int coset) const { return reps_[coset]; }
  const std::vector<int> &coset_members(int coset) const { return members_[coset]; }
  const Subset &normal() const { return normal_; }
  int parent_order() const { return static_cast<int>(coset_of_.size()); }
  const TableGroup &table() const { return table_; }

private:
  Subset normal_;
  std::vector<int> coset_of_;
  std::vector<int> reps_;
  std::vector<std::vector<int>> members_;
  TableGroup table_;
};

} // namespace sympres

#endif // SYMPRES_MATGRP_TABLE_GROUP_HPP
