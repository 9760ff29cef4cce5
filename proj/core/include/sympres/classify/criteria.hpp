#ifndef SYMPRES_CLASSIFY_CRITERIA_HPP
#define SYMPRES_CLASSIFY_CRITERIA_HPP

#include <optional>
#include <string>
#include <vector>

#include "sympres/matgrp/matrix_group.hpp"

namespace sympres {

struct OrderSixWitness {
  int element = -1;
  int order = 0;
  Matrix matrix;
};

/// An element of K of order >= 6: the one of maximal order with the
/// smallest index. Intended for H = C_2.
std::optional<OrderSixWitness> order_ge6_criterion(const FiniteMatrixGroup &k);

/// The 4x4 tangent matrix (s_(1) r_(2))^i t, with s, r acting on the two
/// factors with weights zeta^(+-2) and zeta^(+-2a) (zeta = zeta_2m) and t
/// the factor swap.
Matrix twisted_swap_matrix(int m, int a, int i);
/// Coefficients (constant first) of u^4 - (z + z^-1) u^2 + 1, z = zeta_2m^(2i(a+1)).
std::vector<Cyclotomic> twisted_swap_quartic(int m, int a, int i);
/// Whether the characteristic polynomial of twisted_swap_matrix equals the quartic.
/// Requires m >= 3 and gcd(a, 2m) = 1 (InvalidRowParameters otherwise).
bool charpoly_prop57_check(int m, int a, int i);

/// [a : b] normalized so that the first nonzero coordinate is 1.
class ProjectiveLinePoint {
public:
  ProjectiveLinePoint(const Cyclotomic &a, const Cyclotomic &b);
  const Cyclotomic &a() const { return a_; }
  const Cyclotomic &b() const { return b_; }
  bool operator==(const ProjectiveLinePoint &o) const { return a_ == o.a_ && b_ == o.b_; }
  /// Image under the Moebius action of a 2x2 matrix on column vectors.
  ProjectiveLinePoint apply(const Matrix &g) const;
  std::string to_string() const;
  /// "[1:E(4)]".
  std::string pretty() const;

private:
  Cyclotomic a_, b_;
};

/// The two fixed points of a 2x2 matrix with distinct eigenvalues, found as
/// exact eigenvectors; paired with their eigenvalues, ordered by point text.
std::vector<std::pair<ProjectiveLinePoint, Cyclotomic>> fixed_points(const Matrix &g);

/// Derivative of the Moebius action of g at a fixed point, in the affine
/// chart containing it.
Cyclotomic moebius_derivative(const Matrix &g, const ProjectiveLinePoint &p);

struct ThreeFactorWitness {
  /// g, h, gh in that order.
  std::vector<Matrix> elements;
  std::vector<std::vector<ProjectiveLinePoint>> fixed;
  std::vector<ProjectiveLinePoint> point;
  /// Order of Stab(p) in the full wreath product D_2 wr S_3.
  int wreath_stabilizer_order = 0;
  /// Stab(p) inside the product-one subgroup, as factor-index triples (0 = 1,
  /// 1 = g, 2 = h, 3 = gh).
  std::vector<std::vector<int>> stabilizer;
  /// Tangent weights of the nontrivial stabilizer element, two per factor.
  std::vector<Cyclotomic> tangent_weights;
  int tangent_rank = 0;
};

/// Exact check of the three-factor D_2 / C_2 argument; raises
/// AssertionFailure naming the first sub-check that fails.
ThreeFactorWitness verify_lemma71();

} // namespace sympres

#endif // SYMPRES_CLASSIFY_CRITERIA_HPP
