#ifndef SYMPRES_KLEINIAN_QUATERNION_HPP
#define SYMPRES_KLEINIAN_QUATERNION_HPP

#include <string>

#include "sympres/exactnum/cyclotomic.hpp"
#include "sympres/matgrp/matrix.hpp"

namespace sympres {

/// a + b i + c j + d k with cyclotomic coefficients.
struct Quaternion {
  Cyclotomic a, b, c, d;

  static Quaternion one() { return {1, 0, 0, 0}; }
  static Quaternion i() { return {0, 1, 0, 0}; }
  static Quaternion j() { return {0, 0, 1, 0}; }
  static Quaternion k() { return {0, 0, 0, 1}; }
  /// cos(2 pi / m) + sin(2 pi / m) i.
  static Quaternion zeta(int m);

  Quaternion operator+(const Quaternion &o) const;
  Quaternion operator-(const Quaternion &o) const;
  Quaternion operator-() const;
  Quaternion operator*(const Quaternion &o) const;
  Quaternion scaled(const Cyclotomic &s) const;
  Quaternion conjugate() const;
  Cyclotomic norm() const;
  bool operator==(const Quaternion &o) const;
  std::string to_string() const;
};

/// 1/sqrt(2) as (zeta_8 + zeta_8^-1) / 2.
Cyclotomic inv_sqrt2();
/// 2 cos(pi / 5) and 2 cos(3 pi / 5).
Cyclotomic golden_rho();
Cyclotomic golden_sigma();

/// a I + b Mi + c Mj + d Mk with Mi = diag(i,-i), Mj = [[0,-i],[-i,0]],
/// Mk = [[0,1],[-1,0]]. Multiplicative: complexify(pq) = complexify(p) complexify(q).
Matrix complexify(const Quaternion &q);

} // namespace sympres

#endif // SYMPRES_KLEINIAN_QUATERNION_HPP
