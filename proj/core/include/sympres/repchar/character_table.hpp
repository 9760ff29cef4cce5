#ifndef SYMPRES_REPCHAR_CHARACTER_TABLE_HPP
#define SYMPRES_REPCHAR_CHARACTER_TABLE_HPP

#include <vector>

#include "sympres/exactnum/cyclotomic.hpp"
#include "sympres/matgrp/group.hpp"

namespace sympres {

/// Exact character table. Classes follow conjugacy_classes(); rows are
/// sorted by degree, the trivial character first, then lexicographically
/// on values (Cyclotomic::compare, class by class).
struct CharacterTable {
  int group_order = 1;
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;
  std::vector<int> class_sizes;
  /// Class of the inverses of class i.
  std::vector<int> inverse_class;
  /// chars[i][c] = value of character i on class c.
  std::vector<std::vector<Cyclotomic>> chars;
  std::vector<int> dims;

  int size() const { return static_cast<int>(chars.size()); }
  /// (1/|G|) sum |C| a(C) conj(b(C)).
  Cyclotomic inner_product(const std::vector<Cyclotomic> &a, const std::vector<Cyclotomic> &b) const;
};

/// Burnside's class-algebra method over a prime p = 1 mod exp(G) with
/// p > 2 sqrt|G|, then an exact lift of each value from the eigenvalue
/// multiplicities of the power maps. The result is checked for exact row
/// orthogonality before it is returned.
CharacterTable character_table(const Group &g);

} // namespace sympres

#endif // SYMPRES_REPCHAR_CHARACTER_TABLE_HPP
