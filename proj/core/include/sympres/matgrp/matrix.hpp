#ifndef SYMPRES_MATGRP_MATRIX_HPP
#define SYMPRES_MATGRP_MATRIX_HPP

#include <string>
#include <vector>

#include "sympres/exactnum/cyclotomic.hpp"

namespace sympres {

/// Dense square matrix over cyclotomic numbers, row-major.
class Matrix {
public:
  Matrix() = default;
  explicit Matrix(int dim) : dim_(dim), a_(static_cast<std::size_t>(dim) * dim) {}
  Matrix(int dim, std::vector<Cyclotomic> entries);

  static Matrix identity(int dim);
  /// Rows given as nested initializer data.
  static Matrix from_rows(const std::vector<std::vector<Cyclotomic>> &rows);

  int dim() const noexcept { return dim_; }
  const Cyclotomic &operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * dim_ + c]; }
  Cyclotomic &operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * dim_ + c]; }
  const std::vector<Cyclotomic> &entries() const noexcept { return a_; }

  bool is_identity() const;
  /// lcm of the entry orders.
  int field_order() const;
  Matrix lifted(int order) const;

  Matrix transpose() const;
  Matrix operator*(const Matrix &b) const;
  Matrix operator+(const Matrix &b) const;
  Matrix operator-(const Matrix &b) const;
  Matrix scaled(const Cyclotomic &s) const;
  bool operator==(const Matrix &b) const;

  Cyclotomic trace() const;
  Cyclotomic determinant() const;
  /// Exact rank by fraction-free elimination.
  int rank() const;
  /// Coefficients of det(u*I - M), constant term first, leading 1 last.
  std::vector<Cyclotomic> characteristic_polynomial() const;

  /// Canonical bytes with every entry represented at `order`.
  std::string key(int order) const;
  /// Row-major list of serialized entries.
  std::vector<std::string> serialize() const;

private:
  int dim_ = 0;
  std::vector<Cyclotomic> a_;
};

/// Block-diagonal sum of n copies of [[0,1],[-1,0]].
Matrix symplectic_form(int n);
bool preserves_form(const Matrix &g, const Matrix &omega);

/// rank(1 - g).
int rank_one_minus(const Matrix &g);

/// The 2n x 2n matrix that applies factors[i] on block i and then moves
/// block i to block perm[i] (perm is zero-based).
Matrix wreath_embed(int n, const std::vector<Matrix> &factors, const std::vector<int> &perm);

} // namespace sympres

#endif // SYMPRES_MATGRP_MATRIX_HPP
