#ifndef SYMPRES_KLEINIAN_KLEINIAN_HPP
#define SYMPRES_KLEINIAN_KLEINIAN_HPP

#include <string>
#include <string_view>
#include <vector>

#include "sympres/kleinian/quaternion.hpp"
#include "sympres/matgrp/matrix_group.hpp"

namespace sympres {

enum class KleinianFamily { Cyclic, BinaryDihedral, Tetrahedral, Octahedral, Icosahedral };

/// One of C<m>, D<m> (binary dihedral, order 4m), T, O, I.
struct KleinianSpec {
  KleinianFamily family = KleinianFamily::Cyclic;
  int m = 1;

  static KleinianSpec cyclic(int m) { return {KleinianFamily::Cyclic, m}; }
  static KleinianSpec binary_dihedral(int m) { return {KleinianFamily::BinaryDihedral, m}; }
  static KleinianSpec T() { return {KleinianFamily::Tetrahedral, 0}; }
  static KleinianSpec O() { return {KleinianFamily::Octahedral, 0}; }
  static KleinianSpec I() { return {KleinianFamily::Icosahedral, 0}; }
  /// Case-sensitive "C<m>", "D<m>", "T", "O", "I"; raises ParseError.
  static KleinianSpec parse(std::string_view text);

  int order() const;
  std::string name() const;
  bool operator==(const KleinianSpec &o) const { return family == o.family && m == o.m; }
};

/// Quaternion generators from the standard presentation of each family.
std::vector<Quaternion> standard_quaternion_generators(const KleinianSpec &spec);
std::vector<Matrix> standard_generators(const KleinianSpec &spec);

/// Complexified group; every element has determinant 1.
FiniteMatrixGroup build_kleinian(const KleinianSpec &spec);

/// Supported containments: C_n < C_m (n | m), C_n < D_m (n | 2m),
/// D_a < D_b (a | b), C_n < T, O, I for n in {1, 2, 4} (and n = 8 in O),
/// D_2 < T, O, I, T < O, H = K. The result is generated inside K by the
/// standard generators of H. Raises UnsupportedContainment otherwise, and
/// NotNormalWhereRequired when `require_normal` is set and H is not normal.
FiniteMatrixGroup canonical_subgroup(const KleinianSpec &k, const KleinianSpec &h, bool require_normal = true);

/// Embedding of canonical_subgroup(k, h) as a subset of build_kleinian(k).
Subset canonical_subset(const FiniteMatrixGroup &k_group, const KleinianSpec &k, const KleinianSpec &h,
                        bool require_normal = true);

} // namespace sympres

#endif // SYMPRES_KLEINIAN_KLEINIAN_HPP
