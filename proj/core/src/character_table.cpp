#include "sympres/repchar/character_table.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

#include "sympres/error.hpp"

namespace sympres {

namespace {

using i64 = std::int64_t;

struct Zp {
  i64 p;
  i64 norm(i64 a) const { return ((a % p) + p) % p; }
  i64 mul(i64 a, i64 b) const { return static_cast<i64>((static_cast<__int128>(a) * b) % p); }
  i64 pow(i64 a, i64 e) const
  {
    i64 r = 1;
    a = norm(a);
    for (; e > 0; e >>= 1, a = mul(a, a))
      if (e & 1)
        r = mul(r, a);
    return r;
  }
  i64 inv(i64 a) const { return pow(a, p - 2); }
};

bool is_prime(i64 n)
{
  if (n < 2)
    return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

i64 choose_prime(i64 exponent, i64 order)
{
  double lower = 2.0 * std::sqrt(static_cast<double>(order));
  for (i64 p = exponent + 1;; p += exponent)
    if (p > lower && is_prime(p))
      return p;
}

i64 primitive_root(const Zp &f)
{
  i64 n = f.p - 1;
  std::vector<i64> factors;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      factors.push_back(d);
      while (n % d == 0)
        n /= d;
    }
  if (n > 1)
    factors.push_back(n);
  for (i64 g = 2;; ++g) {
    bool ok = true;
    for (i64 q : factors)
      ok = ok && f.pow(g, (f.p - 1) / q) != 1;
    if (ok)
      return g;
  }
}

using Vec = std::vector<i64>;
using Mat = std::vector<Vec>;

// Row-reduces `rows` in place and returns the pivot column of each row.
std::vector<int> rref(const Zp &f, Mat &rows)
{
  std::vector<int> pivots;
  std::size_t rank = 0;
  int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  for (int c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0)
      ++piv;
    if (piv == rows.size())
      continue;
    std::swap(rows[piv], rows[rank]);
    i64 s = f.inv(rows[rank][c]);
    for (auto &x : rows[rank])
      x = f.mul(x, s);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && rows[r][c] != 0) {
        i64 t = rows[r][c];
        for (int k = 0; k < cols; ++k)
          rows[r][k] = f.norm(rows[r][k] - f.mul(t, rows[rank][k]));
      }
    pivots.push_back(c);
    ++rank;
  }
  rows.resize(rank);
  return pivots;
}

// Null space of a square matrix, as row vectors.
Mat null_space(const Zp &f, Mat a)
{
  int n = static_cast<int>(a.size());
  std::vector<int> piv = rref(f, a);
  std::vector<char> is_piv(n, 0);
  for (int c : piv)
    is_piv[c] = 1;
  Mat out;
  for (int free = 0; free < n; ++free) {
    if (is_piv[free])
      continue;
    Vec v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r)
      v[piv[r]] = f.norm(-a[r][free]);
    out.push_back(std::move(v));
  }
  return out;
}

} // namespace

Cyclotomic CharacterTable::inner_product(const std::vector<Cyclotomic> &a, const std::vector<Cyclotomic> &b) const
{
  Cyclotomic s(0);
  for (std::size_t c = 0; c < classes.size(); ++c)
    s = s + Cyclotomic(class_sizes[c]) * a[c] * b[c].conjugate();
  return s * Cyclotomic(Rational(1, group_order));
}

CharacterTable character_table(const Group &g)
{
  CharacterTable t;
  const int n = g.order();
  t.group_order = n;
  t.classes = conjugacy_classes(g);
  const int r = static_cast<int>(t.classes.size());
  t.class_of.assign(n, 0);
  for (int c = 0; c < r; ++c) {
    t.class_sizes.push_back(static_cast<int>(t.classes[c].size()));
    for (int x : t.classes[c])
      t.class_of[x] = c;
  }
  for (int c = 0; c < r; ++c)
    t.inverse_class.push_back(t.class_of[g.inv(t.classes[c][0])]);

  i64 e = 1;
  std::vector<int> ord(r);
  for (int c = 0; c < r; ++c) {
    ord[c] = element_order(g, t.classes[c][0]);
    e = std::lcm(e, static_cast<i64>(ord[c]));
  }
  const Zp f{choose_prime(e, n)};

  // coef[i][j][k] = #{(x, y) : x in C_i, y in C_j, xy = z_k}
  std::vector<Mat> m(r, Mat(r, Vec(r, 0)));
  for (int k = 0; k < r; ++k) {
    int z = t.classes[k][0];
    for (int x = 0; x < n; ++x) {
      int y = g.mul(g.inv(x), z);
      ++m[t.class_of[x]][t.class_of[y]][k];
    }
  }

  // Common eigenvectors of all class matrices M_i (M_i)_{jk} = coef[i][j][k].
  std::vector<Mat> spaces;
  {
    Mat id(r, Vec(r, 0));
    for (int i = 0; i < r; ++i)
      id[i][i] = 1;
    spaces.push_back(id);
  }
  for (int i = 1; i < r; ++i) {
    if (std::all_of(spaces.begin(), spaces.end(), [](const Mat &s) { return s.size() == 1; }))
      break;
    std::vector<Mat> next;
    for (auto &s : spaces) {
      if (s.size() == 1) {
        next.push_back(s);
        continue;
      }
      std::vector<int> piv = rref(f, s);
      int k = static_cast<int>(s.size());
      // a[row][col]: coordinates of M_i b_col in the basis s
      Mat a(k, Vec(k, 0));
      for (int col = 0; col < k; ++col) {
        Vec img(r, 0);
        for (int j = 0; j < r; ++j) {
          i64 acc = 0;
          for (int q = 0; q < r; ++q)
            acc = f.norm(acc + f.mul(m[i][j][q] % f.p, s[col][q]));
          img[j] = acc;
        }
        for (int row = 0; row < k; ++row)
          a[row][col] = img[piv[row]];
      }
      for (i64 lambda = 0; lambda < f.p; ++lambda) {
        Mat shifted = a;
        for (int d = 0; d < k; ++d)
          shifted[d][d] = f.norm(shifted[d][d] - lambda);
        Mat ns = null_space(f, shifted);
        if (ns.empty())
          continue;
        Mat sub;
        for (const auto &c : ns) {
          Vec v(r, 0);
          for (int col = 0; col < k; ++col)
            for (int q = 0; q < r; ++q)
              v[q] = f.norm(v[q] + f.mul(c[col], s[col][q]));
          sub.push_back(std::move(v));
        }
        next.push_back(std::move(sub));
      }
    }
    spaces = std::move(next);
  }
  if (static_cast<int>(spaces.size()) != r)
    throw Error(ErrorCode::AssertionFailure, "class algebra did not split into characters");

  // Power maps: pw[c][j] = class of (rep c)^j.
  std::vector<std::vector<int>> pw(r, std::vector<int>(e));
  for (int c = 0; c < r; ++c) {
    int x = 0;
    for (i64 j = 0; j < e; ++j) {
      pw[c][j] = t.class_of[x];
      x = g.mul(x, t.classes[c][0]);
    }
  }

  const i64 z = f.pow(primitive_root(f), (f.p - 1) / e);
  const i64 e_inv = f.inv(e % f.p);
  for (auto &s : spaces) {
    Vec w = s[0];
    i64 s0 = f.inv(w[0]);
    for (auto &x : w)
      x = f.mul(x, s0);
    // d^2 = |G| / sum_i w_i w_i' / |C_i|
    i64 denom = 0;
    for (int c = 0; c < r; ++c)
      denom = f.norm(denom + f.mul(f.mul(w[c], w[t.inverse_class[c]]), f.inv(t.class_sizes[c] % f.p)));
    i64 d2 = f.mul(n % f.p, f.inv(denom));
    i64 d = 0;
    for (i64 cand = 1; cand * cand <= n; ++cand)
      if (f.mul(cand, cand) == d2) {
        d = cand;
        break;
      }
    if (d == 0)
      throw Error(ErrorCode::AssertionFailure, "no character degree matches modulo p");
    Vec chi(r);
    for (int c = 0; c < r; ++c)
      chi[c] = f.mul(f.mul(d, w[c]), f.inv(t.class_sizes[c] % f.p));
    std::vector<Cyclotomic> row(r);
    for (int c = 0; c < r; ++c) {
      std::vector<std::pair<std::int64_t, Rational>> terms;
      for (i64 a = 0; a < e; ++a) {
        i64 acc = 0;
        for (i64 j = 0; j < e; ++j)
          acc = f.norm(acc + f.mul(chi[pw[c][j]], f.pow(z, (e - (a * j) % e) % e)));
        i64 mult = f.mul(acc, e_inv);
        if (mult > d)
          throw Error(ErrorCode::AssertionFailure, "eigenvalue multiplicity out of range");
        if (mult != 0)
          terms.emplace_back(a, Rational(mult));
      }
      row[c] = Cyclotomic::from_terms(static_cast<int>(e), terms).reduced();
    }
    t.chars.push_back(std::move(row));
  }

  auto is_trivial = [](const std::vector<Cyclotomic> &row) {
    return std::all_of(row.begin(), row.end(), [](const Cyclotomic &x) { return x.is_one(); });
  };
  std::sort(t.chars.begin(), t.chars.end(), [&](const auto &a, const auto &b) {
    auto da = a[0].rational_value(), db = b[0].rational_value();
    if (!(da == db))
      return da < db;
    bool ta = is_trivial(a), tb = is_trivial(b);
    if (ta != tb)
      return ta;
    for (int c = 0; c < r; ++c) {
      int cmp = compare(a[c], b[c]);
      if (cmp != 0)
        return cmp < 0;
    }
    return false;
  });
  for (const auto &row : t.chars)
    t.dims.push_back(static_cast<int>(row[0].rational_value().small_num()));

  for (int a = 0; a < r; ++a)
    for (int b = a; b < r; ++b) {
      Cyclotomic ip = t.inner_product(t.chars[a], t.chars[b]);
      if (!(ip == Cyclotomic(a == b ? 1 : 0)))
        throw Error(ErrorCode::AssertionFailure, "lifted characters are not orthonormal");
    }
  return t;
}

} // namespace sympres
