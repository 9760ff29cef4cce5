#ifndef SYMPRES_MATGRP_MATRIX_GROUP_HPP
#define SYMPRES_MATGRP_MATRIX_GROUP_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sympres/matgrp/group.hpp"
#include "sympres/matgrp/matrix.hpp"

namespace sympres {

/// Closure bound from SYMPRES_MAX_ORDER, default 20000.
int default_order_bound();

/// Finite group of exact matrices, closed from generators by breadth-first
/// search. Element 0 is the identity and indices follow BFS order, so the
/// indexing is reproducible. Products are answered from a Cayley successor
/// table by walking the BFS word of the right operand; groups of order at
/// most 4096 additionally get a full multiplication table on first use.
///
/// The handle is cheap to copy; all copies share the same immutable data.
class FiniteMatrixGroup : public Group {
public:
  static FiniteMatrixGroup closure(const std::vector<Matrix> &generators, int bound);

  int order() const override;
  int mul(int a, int b) const override;
  int inv(int a) const override;
  /// Indices of the distinct non-identity input generators.
  const std::vector<int> &generators() const override;

  int dim() const;
  /// Common cyclotomic order of all entries; keys are taken at this order.
  int field_order() const;
  const Matrix &element(int i) const;
  const std::vector<Matrix> &elements() const;
  std::optional<int> find(const Matrix &m) const;
  /// Like find() but raises NotAMember.
  int index_of(const Matrix &m) const;
  bool has_mul_table() const;

  /// Subgroup generated by the given elements, as its own matrix group.
  FiniteMatrixGroup subgroup(const std::vector<int> &gens) const;
  /// Indices (in this group) of every element of `other`; raises
  /// NotASubgroup if some element is missing.
  Subset embed(const FiniteMatrixGroup &other) const;
  std::vector<int> class_sizes() const;

private:
  struct Impl;
  std::shared_ptr<Impl> p_;
};

int element_order(const FiniteMatrixGroup &g, const Matrix &m);
/// H must be contained in G; raises NotASubgroup otherwise.
bool is_normal(const FiniteMatrixGroup &h, const FiniteMatrixGroup &g);
FiniteMatrixGroup commutator_subgroup_group(const FiniteMatrixGroup &g);

} // namespace sympres

#endif // SYMPRES_MATGRP_MATRIX_GROUP_HPP
