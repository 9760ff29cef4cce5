#include "sympres/classify/criteria.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "sympres/error.hpp"

namespace sympres {

namespace {

Cyclotomic imag_unit() { return Cyclotomic::zeta(4, 1); }

Matrix mat2(Cyclotomic a, Cyclotomic b, Cyclotomic c, Cyclotomic d)
{
  return Matrix::from_rows({{std::move(a), std::move(b)}, {std::move(c), std::move(d)}});
}

Matrix diag(const std::vector<Cyclotomic> &d)
{
  Matrix out(static_cast<int>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i)
    out(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return out;
}

void check(bool ok, const std::string &what)
{
  if (!ok)
    throw Error(ErrorCode::AssertionFailure, what);
}

int matrix_order(const Matrix &g, int limit = 1000)
{
  Matrix x = g;
  for (int n = 1; n <= limit; ++n) {
    if (x.is_identity())
      return n;
    x = x * g;
  }
  throw Error(ErrorCode::BoundExceeded, "matrix order above " + std::to_string(limit));
}

bool same_set(std::vector<ProjectiveLinePoint> a, std::vector<ProjectiveLinePoint> b)
{
  if (a.size() != b.size())
    return false;
  return std::all_of(a.begin(), a.end(),
                     [&](const ProjectiveLinePoint &p) { return std::find(b.begin(), b.end(), p) != b.end(); });
}

} // namespace

std::optional<OrderSixWitness> order_ge6_criterion(const FiniteMatrixGroup &k)
{
  OrderSixWitness best;
  for (int x = 0; x < k.order(); ++x) {
    int o = element_order(k, x);
    if (o > best.order) {
      best.order = o;
      best.element = x;
    }
  }
  if (best.order < 6)
    return std::nullopt;
  best.matrix = k.element(best.element);
  return best;
}

Matrix twisted_swap_matrix(int m, int a, int i)
{
  int n = 2 * m;
  Matrix s = diag({Cyclotomic::zeta(n, 2), Cyclotomic::zeta(n, -2), 1, 1});
  Matrix r = diag({1, 1, Cyclotomic::zeta(n, 2LL * a), Cyclotomic::zeta(n, -2LL * a)});
  Matrix sr = s * r;
  Matrix x = Matrix::identity(4);
  for (int k = 0; k < std::abs(i); ++k)
    x = x * sr;
  if (i < 0)
    x = diag({x(0, 0).inverse(), x(1, 1).inverse(), x(2, 2).inverse(), x(3, 3).inverse()});
  Matrix t(4);
  t(0, 2) = 1;
  t(1, 3) = 1;
  t(2, 0) = 1;
  t(3, 1) = 1;
  return x * t;
}

std::vector<Cyclotomic> twisted_swap_quartic(int m, int a, int i)
{
  std::int64_t e = 2LL * i * (a + 1);
  Cyclotomic mid = Cyclotomic::zeta(2 * m, e) + Cyclotomic::zeta(2 * m, -e);
  return {1, 0, -mid, 0, 1};
}

bool charpoly_prop57_check(int m, int a, int i)
{
  if (m < 3 || std::gcd(a, 2 * m) != 1)
    throw Error(ErrorCode::InvalidRowParameters, "need m >= 3 and a coprime to 2m");
  return twisted_swap_matrix(m, a, i).characteristic_polynomial() == twisted_swap_quartic(m, a, i);
}

ProjectiveLinePoint::ProjectiveLinePoint(const Cyclotomic &a, const Cyclotomic &b)
{
  if (!a.is_zero()) {
    a_ = 1;
    b_ = (b / a).reduced();
  } else if (!b.is_zero()) {
    a_ = 0;
    b_ = 1;
  } else {
    throw Error(ErrorCode::DivisionByZero, "[0:0] is not a point of the projective line");
  }
}

ProjectiveLinePoint ProjectiveLinePoint::apply(const Matrix &g) const
{
  return {g(0, 0) * a_ + g(0, 1) * b_, g(1, 0) * a_ + g(1, 1) * b_};
}

std::string ProjectiveLinePoint::to_string() const
{
  return "[" + a_.to_string() + " : " + b_.to_string() + "]";
}

std::string ProjectiveLinePoint::pretty() const { return "[" + a_.pretty() + ":" + b_.pretty() + "]"; }

std::vector<std::pair<ProjectiveLinePoint, Cyclotomic>> fixed_points(const Matrix &g)
{
  if (g.dim() != 2)
    throw Error(ErrorCode::DimensionMismatch, "fixed points need a 2x2 matrix");
  auto cp = g.characteristic_polynomial();
  int n = matrix_order(g);
  std::vector<Cyclotomic> eig;
  for (int k = 0; k < n; ++k) {
    Cyclotomic l = Cyclotomic::zeta(n, k);
    if ((cp[0] + cp[1] * l + cp[2] * l * l).is_zero())
      eig.push_back(l.reduced());
  }
  check(eig.size() == 2, "fixed points need two distinct eigenvalues");
  std::vector<std::pair<ProjectiveLinePoint, Cyclotomic>> out;
  for (const auto &l : eig) {
    Cyclotomic p = g(0, 0) - l, q = g(0, 1);
    Cyclotomic r = g(1, 0), s = g(1, 1) - l;
    // (p q; r s) v = 0
    if (!p.is_zero() || !q.is_zero())
      out.emplace_back(ProjectiveLinePoint(q, -p), l);
    else
      out.emplace_back(ProjectiveLinePoint(s, -r), l);
  }
  std::sort(out.begin(), out.end(),
            [](const auto &x, const auto &y) { return x.first.to_string() < y.first.to_string(); });
  return out;
}

Cyclotomic moebius_derivative(const Matrix &g, const ProjectiveLinePoint &p)
{
  Cyclotomic det = g.determinant();
  if (!p.a().is_zero()) {
    // chart z = x2/x1: z -> (c + d z) / (a + b z)
    Cyclotomic den = g(0, 0) + g(0, 1) * p.b();
    return (det / (den * den)).reduced();
  }
  // chart w = x1/x2 at w = 0: w -> (a w + b) / (c w + d)
  return (det / (g(1, 1) * g(1, 1))).reduced();
}

ThreeFactorWitness verify_lemma71()
{
  Cyclotomic i = imag_unit();
  Matrix g = mat2(i, 0, 0, -i);
  Matrix h = mat2(0, 1, -1, 0);
  Matrix gh = g * h;
  check(gh == mat2(0, i, i, 0), "gh differs from the displayed matrix");

  ThreeFactorWitness w;
  w.elements = {g, h, gh};
  const std::vector<std::vector<ProjectiveLinePoint>> displayed{
      {{1, 0}, {0, 1}}, {{1, i}, {1, -i}}, {{1, 1}, {1, -1}}};
  const char *names[] = {"g", "h", "gh"};
  for (int k = 0; k < 3; ++k) {
    std::vector<ProjectiveLinePoint> f;
    for (const auto &[pt, l] : fixed_points(w.elements[k]))
      f.push_back(pt);
    check(same_set(f, displayed[k]), std::string("fixed points of ") + names[k]);
    w.fixed.push_back(f);
  }

  // D_2 in PSL_2 as {1, g, h, gh}; products are taken up to sign.
  std::array<Matrix, 4> e{Matrix::identity(2), g, h, gh};
  auto index_of = [&](const Matrix &x) {
    for (int j = 0; j < 4; ++j)
      if (x == e[j] || x == e[j].scaled(-1))
        return j;
    throw Error(ErrorCode::AssertionFailure, "D_2 is not closed in PSL_2");
  };
  for (int k = 1; k <= 3; ++k)
    for (int j = 1; j <= 3; ++j) {
      if (j == k)
        continue;
      const auto &f = w.fixed[k - 1];
      check(f[0].apply(e[j]) == f[1] && f[1].apply(e[j]) == f[0],
            std::string("the other elements do not swap the fixed points of ") + names[k - 1]);
    }

  w.point = {w.fixed[0][0] == ProjectiveLinePoint(1, 0) ? w.fixed[0][0] : w.fixed[0][1], ProjectiveLinePoint(1, i),
             ProjectiveLinePoint(1, 1)};
  std::array<int, 3> sigma{0, 1, 2};
  std::vector<std::array<int, 3>> stab_all;
  do {
    for (int c = 0; c < 64; ++c) {
      std::array<int, 3> f{c & 3, (c >> 2) & 3, (c >> 4) & 3};
      bool fixed = true;
      // coordinate sigma[k] of the image is f[k] applied to coordinate k
      for (int k = 0; k < 3 && fixed; ++k)
        fixed = w.point[k].apply(e[f[k]]) == w.point[sigma[k]];
      if (fixed) {
        check(sigma == std::array<int, 3>{0, 1, 2}, "a factor permutation fixes the point");
        stab_all.push_back(f);
      }
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  w.wreath_stabilizer_order = static_cast<int>(stab_all.size());
  check(w.wreath_stabilizer_order == 8, "stabilizer in the wreath product is not {1,g} x {1,h} x {1,gh}");

  for (const auto &f : stab_all)
    if (index_of(e[f[0]] * e[f[1]] * e[f[2]]) == 0)
      w.stabilizer.push_back({f[0], f[1], f[2]});
  std::sort(w.stabilizer.begin(), w.stabilizer.end());
  check(w.stabilizer == std::vector<std::vector<int>>{{0, 0, 0}, {1, 2, 3}}, "stabilizer is not {(1,1,1),(g,h,gh)}");

  const auto &t = w.stabilizer[1];
  for (int k = 0; k < 3; ++k) {
    const Matrix &x = e[t[k]];
    Cyclotomic d = moebius_derivative(x, w.point[k]);
    Cyclotomic lambda;
    for (const auto &[pt, l] : fixed_points(x))
      if (pt == w.point[k])
        lambda = l;
    check(d == (lambda * lambda).inverse(), "base weight differs from lambda^-2");
    w.tangent_weights.push_back(d);
    w.tangent_weights.push_back(d.inverse());
  }
  Matrix tangent = diag(w.tangent_weights);
  w.tangent_rank = (Matrix::identity(6) - tangent).rank();
  check(w.tangent_rank == 6, "nontrivial stabilizer element acts as a symplectic reflection");
  return w;
}

} // namespace sympres
