#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "sympres/error.hpp"
#include "sympres/matgrp/group_hom.hpp"
#include "sympres/matgrp/matrix_group.hpp"
#include "sympres/matgrp/table_group.hpp"

using namespace sympres;

namespace {

Cyclotomic I() { return Cyclotomic::zeta(4, 1); }

Matrix qi() { return Matrix::from_rows({{I(), 0}, {0, -I()}}); }
Matrix qj() { return Matrix::from_rows({{0, 1}, {-1, 0}}); }
Matrix qk() { return Matrix::from_rows({{0, I()}, {I(), 0}}); }
// (1 - i + j + k) / 2
Matrix omega()
{
  Cyclotomic h(Rational(1, 2));
  return Matrix::from_rows({{h * (1 - I()), h * (1 + I())}, {h * (I() - 1), h * (1 + I())}});
}
Matrix zeta_diag(int n)
{
  return Matrix::from_rows({{Cyclotomic::zeta(n, 1), 0}, {0, Cyclotomic::zeta(n, -1)}});
}

FiniteMatrixGroup quaternion8() { return FiniteMatrixGroup::closure({qi(), qj()}, 100); }
FiniteMatrixGroup tetrahedral() { return FiniteMatrixGroup::closure({qi(), omega()}, 100); }
FiniteMatrixGroup binary_dihedral(int m) { return FiniteMatrixGroup::closure({zeta_diag(2 * m), qj()}, 1000); }

// Oracle: repeated matrix products.
int brute_order(const Matrix &m)
{
  Matrix p = m;
  int n = 1;
  while (!p.is_identity()) {
    p = p * m;
    ++n;
  }
  return n;
}

// Oracle: class sizes by conjugating matrices directly.
std::multiset<int> brute_class_sizes(const FiniteMatrixGroup &g)
{
  std::multiset<int> sizes;
  std::set<int> seen;
  for (int x = 0; x < g.order(); ++x) {
    if (seen.count(x))
      continue;
    std::set<int> cls;
    for (int y = 0; y < g.order(); ++y) {
      const Matrix &ym = g.element(y);
      Matrix c = ym * g.element(x) * g.element(g.inv(y));
      cls.insert(g.index_of(c));
    }
    seen.insert(cls.begin(), cls.end());
    sizes.insert(static_cast<int>(cls.size()));
  }
  return sizes;
}

std::multiset<int> class_sizes(const Group &g)
{
  std::multiset<int> s;
  for (const auto &c : conjugacy_classes(g))
    s.insert(static_cast<int>(c.size()));
  return s;
}

TableGroup cyclic(int n)
{
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      t[a * n + b] = (a + b) % n;
  return TableGroup(n, t, {n > 1 ? 1 : 0});
}

} // namespace

TEST(Closure, Examples)
{
  EXPECT_EQ(FiniteMatrixGroup::closure({qk()}, 10).order(), 4);
  EXPECT_EQ(FiniteMatrixGroup::closure({Matrix::identity(2)}, 10).order(), 1);
  EXPECT_EQ(tetrahedral().order(), 24);
  EXPECT_THROW(FiniteMatrixGroup::closure({qi(), omega()}, 10), Error);
  try {
    FiniteMatrixGroup::closure({qi(), omega()}, 10);
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::BoundExceeded);
  }
}

TEST(Closure, IsClosedAndIdempotent)
{
  for (const auto &g : {quaternion8(), tetrahedral(), binary_dihedral(5)}) {
    ASSERT_TRUE(g.element(0).is_identity());
    for (int a = 0; a < g.order(); ++a) {
      EXPECT_EQ(g.index_of(g.element(a) * g.element(g.inv(a))), 0);
      for (int b = 0; b < g.order(); b += 3)
        EXPECT_EQ(g.index_of(g.element(a) * g.element(b)), g.mul(a, b));
    }
    auto again = FiniteMatrixGroup::closure(g.elements(), g.order());
    EXPECT_EQ(again.order(), g.order());
    EXPECT_EQ(g.embed(again).size(), static_cast<std::size_t>(g.order()));
  }
}

TEST(Closure, IndexingIsDeterministic)
{
  auto a = tetrahedral(), b = tetrahedral();
  for (int x = 0; x < a.order(); ++x)
    EXPECT_EQ(a.element(x), b.element(x));
}

TEST(Closure, LargeGroupWithoutTable)
{
  // Binary dihedral of order 4 * 1100 exceeds the cached-table limit.
  auto g = FiniteMatrixGroup::closure({zeta_diag(2200), qj()}, 5000);
  EXPECT_EQ(g.order(), 4400);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(0, g.order() - 1);
  for (int t = 0; t < 50; ++t) {
    int a = pick(rng), b = pick(rng);
    EXPECT_EQ(g.index_of(g.element(a) * g.element(b)), g.mul(a, b));
  }
  EXPECT_FALSE(g.has_mul_table());
}

TEST(ElementOrder, Examples)
{
  auto t = tetrahedral();
  EXPECT_EQ(element_order(t, Matrix::identity(2)), 1);
  EXPECT_EQ(element_order(t, omega()), 6);
  EXPECT_EQ(brute_order(omega()), 6);
  auto d = binary_dihedral(4);
  EXPECT_EQ(element_order(d, qj()), 4);
  EXPECT_THROW(element_order(d, omega()), Error);
  for (int x = 0; x < t.order(); ++x)
    EXPECT_EQ(element_order(t, x), brute_order(t.element(x)));
}

TEST(Conjugacy, Examples)
{
  auto c = FiniteMatrixGroup::closure({zeta_diag(7)}, 10);
  EXPECT_EQ(conjugacy_classes(c).size(), 7u);
  auto q = quaternion8();
  EXPECT_EQ(class_sizes(q), (std::multiset<int>{1, 1, 2, 2, 2}));
  auto t = tetrahedral();
  EXPECT_EQ(conjugacy_classes(t).size(), 7u);
  for (const auto &g : {q, t, binary_dihedral(3), binary_dihedral(6)}) {
    EXPECT_EQ(class_sizes(g), brute_class_sizes(g));
    auto cls = conjugacy_classes(g);
    EXPECT_EQ(cls[0], std::vector<int>{0});
    int total = 0;
    for (const auto &k : cls) {
      total += static_cast<int>(k.size());
      EXPECT_EQ(g.order() % static_cast<int>(k.size()), 0);
    }
    EXPECT_EQ(total, g.order());
  }
}

TEST(Normality, Examples)
{
  auto t = tetrahedral();
  EXPECT_TRUE(is_normal(t, t));
  auto d3 = binary_dihedral(3);
  auto c6 = FiniteMatrixGroup::closure({zeta_diag(6)}, 100);
  EXPECT_TRUE(is_normal(c6, d3));
  auto cj = FiniteMatrixGroup::closure({qj()}, 100);
  EXPECT_FALSE(is_normal(cj, d3));
  EXPECT_THROW(is_normal(FiniteMatrixGroup::closure({omega()}, 100), d3), Error);
  EXPECT_TRUE(is_normal(quaternion8(), t));
}

TEST(Quotient, Examples)
{
  auto t = tetrahedral();
  Subset all(t.order());
  for (int x = 0; x < t.order(); ++x)
    all[x] = x;
  EXPECT_EQ(QuotientGroup(t, all).order(), 1);
  auto d3 = binary_dihedral(3);
  auto c6 = FiniteMatrixGroup::closure({zeta_diag(6)}, 100);
  EXPECT_EQ(QuotientGroup(d3, d3.embed(c6)).order(), 2);
  QuotientGroup tq(t, t.embed(quaternion8()));
  EXPECT_EQ(tq.order(), 3);
  try {
    QuotientGroup(d3, d3.embed(FiniteMatrixGroup::closure({qj()}, 100)));
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::NotNormal);
  }
  try {
    QuotientGroup(t, Subset{0, 1});
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::NotASubgroup);
  }
}

TEST(Quotient, ProjectionIsHomomorphism)
{
  auto t = tetrahedral();
  auto d = binary_dihedral(6);
  std::vector<std::pair<FiniteMatrixGroup, Subset>> cases = {
      {t, t.embed(quaternion8())},
      {t, center(t)},
      {d, center(d)},
      {d, d.embed(FiniteMatrixGroup::closure({zeta_diag(12)}, 100))},
  };
  for (const auto &[g, n] : cases) {
    QuotientGroup q(g, n);
    EXPECT_EQ(q.order() * static_cast<int>(n.size()), g.order());
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < g.order(); ++b)
        ASSERT_EQ(q.project(g.mul(a, b)), q.mul(q.project(a), q.project(b)));
  }
}

TEST(Commutator, Examples)
{
  auto c = FiniteMatrixGroup::closure({zeta_diag(5)}, 100);
  EXPECT_EQ(commutator_subgroup_group(c).order(), 1);
  auto q = quaternion8();
  auto cq = commutator_subgroup_group(q);
  EXPECT_EQ(cq.order(), 2);
  EXPECT_TRUE(cq.find(Matrix::identity(2).scaled(-1)).has_value());
  auto t = tetrahedral();
  auto ct = commutator_subgroup_group(t);
  EXPECT_EQ(ct.order(), 8);
  EXPECT_EQ(t.embed(ct), t.embed(q));
}

TEST(Automorphism, Examples)
{
  auto c3 = cyclic(3);
  auto id = automorphism_from_images(c3, {1});
  EXPECT_TRUE(id.is_identity());
  EXPECT_TRUE(id.involution);
  auto inv = automorphism_from_images(c3, {2}, true);
  EXPECT_TRUE(inv.involution);
  EXPECT_FALSE(inv.is_identity());
  EXPECT_FALSE(is_inner(c3, inv));

  // Dihedral of order 2l as binary dihedral modulo its center; r = 1.
  auto d = binary_dihedral(8);
  QuotientGroup dd(d, center(d));
  EXPECT_EQ(dd.order(), 16);
  std::vector<int> imgs;
  for (int s : dd.generators())
    imgs.push_back(s);
  EXPECT_TRUE(automorphism_from_images(dd, imgs, true).is_identity());
}

TEST(Automorphism, Errors)
{
  auto c5 = cyclic(5);
  auto expect_code = [](auto fn, ErrorCode code) {
    try {
      fn();
      FAIL();
    } catch (const Error &e) {
      EXPECT_EQ(e.code(), code);
    }
  };
  expect_code([&] { automorphism_from_images(c5, {0}); }, ErrorCode::NotBijective);
  expect_code([&] { automorphism_from_images(c5, {2}, true); }, ErrorCode::NotInvolution);
  EXPECT_NO_THROW(automorphism_from_images(c5, {2}));
  auto q = quaternion8();
  // i -> i, j -> -1 is not multiplicative.
  int minus1 = q.index_of(Matrix::identity(2).scaled(-1));
  expect_code([&] { automorphism_from_images(q, {q.generators()[0], minus1}); }, ErrorCode::NotAHomomorphism);
}

TEST(Automorphism, Census)
{
  auto count = [](const Group &g) {
    int n = 0;
    for_each_automorphism(g, [&](const Automorphism &) {
      ++n;
      return true;
    });
    return n;
  };
  EXPECT_EQ(count(cyclic(5)), 4);
  EXPECT_EQ(count(cyclic(12)), 4);
  EXPECT_EQ(count(quaternion8()), 24);
  EXPECT_EQ(count(tetrahedral()), 24);
  // Inner automorphisms of Q8 form a Klein four-group.
  auto q = quaternion8();
  int inner = 0;
  for_each_automorphism(q, [&](const Automorphism &a) {
    inner += is_inner(q, a) ? 1 : 0;
    return true;
  });
  EXPECT_EQ(inner, 4);
}

TEST(Automorphism, InducedOnQuotient)
{
  auto t = tetrahedral();
  QuotientGroup tq(t, t.embed(quaternion8()));
  auto conj = inner_automorphism(t, t.index_of(omega()));
  auto ind = induced_automorphism(t, tq, conj);
  EXPECT_TRUE(ind.is_identity());
  auto q = quaternion8();
  QuotientGroup qi_(q, q.embed(FiniteMatrixGroup::closure({qi()}, 10)));
  auto swap = find_automorphism(q, [&](const Automorphism &a) { return a(q.index_of(qi())) == q.index_of(qj()); });
  ASSERT_TRUE(swap.has_value());
  try {
    induced_automorphism(q, qi_, *swap);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAHomomorphism);
  }
}

TEST(Wreath, Examples)
{
  EXPECT_EQ(wreath_embed(1, {omega()}, {0}), omega());
  Matrix s12 = wreath_embed(2, {Matrix::identity(2), Matrix::identity(2)}, {1, 0});
  Matrix expect(4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      expect(r, c) = (r == (c + 2) % 4) ? 1 : 0;
  EXPECT_EQ(s12, expect);
  EXPECT_EQ(rank_one_minus(s12), 2);
  EXPECT_EQ(rank_one_minus(Matrix::identity(4)), 0);
  EXPECT_THROW(wreath_embed(2, {omega()}, {0, 1}), Error);
}

TEST(Wreath, PreservesSymplecticForm)
{
  auto t = tetrahedral();
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> pick(0, t.order() - 1);
  for (int n = 1; n <= 4; ++n) {
    Matrix om = symplectic_form(n);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i)
      perm[i] = i;
    for (int trial = 0; trial < 10; ++trial) {
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<Matrix> f;
      for (int i = 0; i < n; ++i)
        f.push_back(t.element(pick(rng)));
      Matrix g = wreath_embed(n, f, perm);
      EXPECT_TRUE(preserves_form(g, om));
      EXPECT_EQ(g.transpose() * om * g, om);
    }
  }
}

TEST(Rank, Examples)
{
  auto t = tetrahedral();
  for (int x = 1; x < t.order(); ++x) {
    Matrix h1 = wreath_embed(2, {t.element(x), Matrix::identity(2)}, {0, 1});
    EXPECT_EQ(rank_one_minus(h1), 2);
  }
  Matrix m = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, I(), 0}});
  EXPECT_EQ(m.rank(), 2);
  EXPECT_EQ(m.determinant(), Cyclotomic(0));
}

TEST(Rank, EvenInSymplecticGroup)
{
  auto q = quaternion8();
  Matrix s12 = wreath_embed(2, {Matrix::identity(2), Matrix::identity(2)}, {1, 0});
  std::vector<Matrix> gens{s12};
  for (int g : q.generators())
    gens.push_back(wreath_embed(2, {q.element(g), Matrix::identity(2)}, {0, 1}));
  auto w = FiniteMatrixGroup::closure(gens, 1000);
  EXPECT_EQ(w.order(), 128);
  std::map<int, int> census;
  for (const auto &e : w.elements()) {
    int r = rank_one_minus(e);
    EXPECT_EQ(r % 2, 0);
    ++census[r];
  }
  EXPECT_EQ(census[0], 1);
}

TEST(Lagrange, SubgroupsDivideOrder)
{
  auto t = tetrahedral();
  for (int x = 0; x < t.order(); ++x)
    for (int y = x; y < t.order(); y += 5) {
      Subset s = generate(t, {x, y});
      EXPECT_EQ(t.order() % static_cast<int>(s.size()), 0);
      EXPECT_TRUE(is_subgroup(t, s));
    }
}

TEST(CharacteristicPolynomial, MatchesTraceAndDeterminant)
{
  auto t = tetrahedral();
  for (const auto &m : t.elements()) {
    auto p = m.characteristic_polynomial();
    ASSERT_EQ(p.size(), 3u);
    EXPECT_EQ(p[2], Cyclotomic(1));
    EXPECT_EQ(p[1], -m.trace());
    EXPECT_EQ(p[0], m.determinant());
  }
}
