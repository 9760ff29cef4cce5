#include "sympres/matgrp/matrix.hpp"

#include "sympres/error.hpp"

namespace sympres {

Matrix::Matrix(int dim, std::vector<Cyclotomic> entries) : dim_(dim), a_(std::move(entries))
{
  if (a_.size() != static_cast<std::size_t>(dim) * dim)
    throw Error(ErrorCode::DimensionMismatch, "entry count does not match dimension");
}

Matrix Matrix::identity(int dim)
{
  Matrix m(dim);
  for (int i = 0; i < dim; ++i)
    m(i, i) = Cyclotomic(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Cyclotomic>> &rows)
{
  int d = static_cast<int>(rows.size());
  Matrix m(d);
  for (int r = 0; r < d; ++r) {
    if (static_cast<int>(rows[r].size()) != d)
      throw Error(ErrorCode::DimensionMismatch, "matrix rows must be square");
    for (int c = 0; c < d; ++c)
      m(r, c) = rows[r][c];
  }
  return m;
}

bool Matrix::is_identity() const
{
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) {
      const auto &x = (*this)(r, c);
      if (r == c ? !x.is_one() : !x.is_zero())
        return false;
    }
  return true;
}

int Matrix::field_order() const { return common_order(a_); }

Matrix Matrix::lifted(int order) const
{
  Matrix m(dim_);
  for (std::size_t i = 0; i < a_.size(); ++i)
    m.a_[i] = a_[i].is_zero() ? Cyclotomic() : a_[i].lifted(order);
  return m;
}

Matrix Matrix::transpose() const
{
  Matrix m(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c)
      m(c, r) = (*this)(r, c);
  return m;
}

Matrix Matrix::operator*(const Matrix &b) const
{
  if (dim_ != b.dim_)
    throw Error(ErrorCode::DimensionMismatch, "matrix product of different sizes");
  Matrix m(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int k = 0; k < dim_; ++k) {
      const auto &x = (*this)(r, k);
      if (x.is_zero())
        continue;
      for (int c = 0; c < dim_; ++c) {
        const auto &y = b(k, c);
        if (!y.is_zero())
          m(r, c) += x * y;
      }
    }
  return m;
}

Matrix Matrix::operator+(const Matrix &b) const
{
  if (dim_ != b.dim_)
    throw Error(ErrorCode::DimensionMismatch, "matrix sum of different sizes");
  Matrix m(dim_);
  for (std::size_t i = 0; i < a_.size(); ++i)
    m.a_[i] = a_[i] + b.a_[i];
  return m;
}

Matrix Matrix::operator-(const Matrix &b) const
{
  if (dim_ != b.dim_)
    throw Error(ErrorCode::DimensionMismatch, "matrix difference of different sizes");
  Matrix m(dim_);
  for (std::size_t i = 0; i < a_.size(); ++i)
    m.a_[i] = a_[i] - b.a_[i];
  return m;
}

Matrix Matrix::scaled(const Cyclotomic &s) const
{
  Matrix m(dim_);
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (!a_[i].is_zero())
      m.a_[i] = a_[i] * s;
  return m;
}

bool Matrix::operator==(const Matrix &b) const
{
  return dim_ == b.dim_ && a_ == b.a_;
}

Cyclotomic Matrix::trace() const
{
  Cyclotomic t;
  for (int i = 0; i < dim_; ++i)
    t += (*this)(i, i);
  return t;
}

namespace {

// Row echelon form by cross-multiplication (no division). Returns rank and
// the product of pivots together with the sign and scaling bookkeeping
// needed for the determinant.
int eliminate(std::vector<std::vector<Cyclotomic>> &m, Cyclotomic *det)
{
  int rows = static_cast<int>(m.size());
  int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int r = 0;
  Cyclotomic scale(1), sign(1);
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (!m[i][c].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0)
      continue;
    if (piv != r) {
      std::swap(m[piv], m[r]);
      sign = -sign;
    }
    const Cyclotomic p = m[r][c];
    for (int i = r + 1; i < rows; ++i) {
      if (m[i][c].is_zero())
        continue;
      const Cyclotomic f = m[i][c];
      // row_i <- p*row_i - f*row_r scales the determinant by p.
      for (int j = c; j < cols; ++j) {
        Cyclotomic v = m[i][j] * p;
        if (!m[r][j].is_zero())
          v -= f * m[r][j];
        m[i][j] = std::move(v);
      }
      scale *= p;
    }
    ++r;
  }
  if (det) {
    if (r < rows) {
      *det = Cyclotomic();
    } else {
      Cyclotomic prod = sign;
      for (int i = 0; i < rows; ++i)
        prod *= m[i][i];
      *det = prod / scale;
    }
  }
  return r;
}

std::vector<std::vector<Cyclotomic>> rows_of(const Matrix &a)
{
  std::vector<std::vector<Cyclotomic>> m(a.dim(), std::vector<Cyclotomic>(a.dim()));
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c)
      m[r][c] = a(r, c);
  return m;
}

} // namespace

Cyclotomic Matrix::determinant() const
{
  auto m = rows_of(*this);
  Cyclotomic d;
  eliminate(m, &d);
  return d;
}

int Matrix::rank() const
{
  auto m = rows_of(*this);
  return eliminate(m, nullptr);
}

std::vector<Cyclotomic> Matrix::characteristic_polynomial() const
{
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
  int n = dim_;
  std::vector<Cyclotomic> c(n + 1);
  c[n] = Cyclotomic(1);
  Matrix mk(n); // M_0 = 0
  for (int k = 1; k <= n; ++k) {
    Matrix next = (*this) * mk;
    for (int i = 0; i < n; ++i)
      next(i, i) += c[n - k + 1];
    mk = std::move(next);
    Cyclotomic t = ((*this) * mk).trace();
    c[n - k] = -t * Cyclotomic(Rational(1, k));
  }
  return c;
}

std::string Matrix::key(int order) const
{
  std::string out;
  out.reserve(a_.size() * 40);
  out.push_back(static_cast<char>(dim_));
  for (const auto &x : a_) {
    if (x.is_zero() || x.order() == order)
      x.append_key(out);
    else
      x.lifted(order).append_key(out);
  }
  return out;
}

std::vector<std::string> Matrix::serialize() const
{
  std::vector<std::string> out;
  out.reserve(a_.size());
  for (const auto &x : a_)
    out.push_back(x.to_string());
  return out;
}

Matrix symplectic_form(int n)
{
  Matrix m(2 * n);
  for (int b = 0; b < n; ++b) {
    m(2 * b, 2 * b + 1) = Cyclotomic(1);
    m(2 * b + 1, 2 * b) = Cyclotomic(-1);
  }
  return m;
}

bool preserves_form(const Matrix &g, const Matrix &omega)
{
  return g.transpose() * omega * g == omega;
}

int rank_one_minus(const Matrix &g)
{
  return (Matrix::identity(g.dim()) - g).rank();
}

Matrix wreath_embed(int n, const std::vector<Matrix> &factors, const std::vector<int> &perm)
{
  if (static_cast<int>(factors.size()) != n || static_cast<int>(perm.size()) != n)
    throw Error(ErrorCode::DimensionMismatch, "wreath_embed needs n factors and a permutation of n");
  std::vector<bool> seen(n, false);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[p])
      throw Error(ErrorCode::DimensionMismatch, "wreath_embed permutation is invalid");
    seen[p] = true;
  }
  Matrix m(2 * n);
  for (int i = 0; i < n; ++i) {
    if (factors[i].dim() != 2)
      throw Error(ErrorCode::DimensionMismatch, "wreath_embed factors must be 2x2");
    int t = perm[i];
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c)
        m(2 * t + r, 2 * i + c) = factors[i](r, c);
  }
  return m;
}

} // namespace sympres
