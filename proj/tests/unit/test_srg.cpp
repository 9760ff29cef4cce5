#include <gtest/gtest.h>

#include <map>

#include "sympres/error.hpp"
#include "sympres/srg/bundle.hpp"
#include "sympres/srg/table_rows.hpp"

using namespace sympres;

namespace {

using K = KleinianSpec;

ErrorCode code_of(const std::function<void()> &fn)
{
  try {
    fn();
  } catch (const Error &e) {
    return e.code();
  }
  return ErrorCode::AssertionFailure;
}

const std::vector<std::pair<TableRow, SRGroupBundle>> &grid()
{
  static const auto rows = [] {
    std::vector<std::pair<TableRow, SRGroupBundle>> v;
    for (const auto &t : default_rows(4, 4, false))
      v.emplace_back(t, build_G2(t.k, t.h, t.alpha));
    return v;
  }();
  return rows;
}

// Oracle: x is in L_alpha iff diag(x, x^-1) s12 lies in G.
int brute_l_alpha(const SRGroupBundle &b)
{
  Matrix s = block_swap(2, 0, 1);
  int n = 0;
  for (int x = 0; x < b.k.order(); ++x)
    if (b.g.find(block_diagonal(2, {b.k.element(x), b.k.element(b.k.inv(x))}) * s))
      ++n;
  return n;
}

// Oracle: multiplicity of the root 1 in the characteristic polynomial. For
// finite-order g this is dim ker(1 - g).
int eigenvalue_one_multiplicity(const Matrix &g)
{
  std::vector<Cyclotomic> p = g.characteristic_polynomial();
  int mult = 0;
  while (p.size() > 1) {
    Cyclotomic sum(0);
    for (const auto &c : p)
      sum = sum + c;
    if (!sum.is_zero())
      break;
    // divide by (u - 1), coefficients constant term first
    std::vector<Cyclotomic> q(p.size() - 1);
    Cyclotomic carry(0);
    for (std::size_t i = p.size() - 1; i >= 1; --i) {
      carry = carry + p[i];
      q[i - 1] = carry;
    }
    p = std::move(q);
    ++mult;
  }
  return mult;
}

} // namespace

TEST(BuildG2, Examples)
{
  EXPECT_EQ(build_G2(K::binary_dihedral(2), K::cyclic(2), InvolutionSpec::trivial()).g.order(), 32);
  EXPECT_EQ(build_G2(K::T(), K::T(), InvolutionSpec::trivial()).g.order(), 1152);
  EXPECT_EQ(build_G2(K::T(), K::binary_dihedral(2), InvolutionSpec::inversion()).g.order(), 384);
}

TEST(BuildG2, Errors)
{
  EXPECT_EQ(code_of([] { build_G2(K::I(), K::binary_dihedral(2), InvolutionSpec::trivial()); }),
            ErrorCode::HNotNormal);
  EXPECT_EQ(code_of([] { build_G2(K::binary_dihedral(5), K::cyclic(2), InvolutionSpec::alpha_r(2)); }),
            ErrorCode::AlphaNotInvolution);
  EXPECT_EQ(code_of([] { build_G2(K::T(), K::T(), InvolutionSpec::trivial(), 100); }), ErrorCode::BoundExceeded);
  // Conjugation by omega is inner on T, so it is not an involution of T.
  Cyclotomic h(Rational(1, 2));
  Quaternion omega = (Quaternion::one() - Quaternion::i() + Quaternion::j() + Quaternion::k()).scaled(h);
  EXPECT_EQ(code_of([&] { build_G2(K::T(), K::cyclic(1), InvolutionSpec::conjugation(omega)); }),
            ErrorCode::AlphaNotInvolution);
}

TEST(BuildGn, Examples)
{
  EXPECT_EQ(build_Gn(3, K::cyclic(2), K::cyclic(2)).g.order(), 48);
  auto b = build_Gn(3, K::binary_dihedral(2), K::cyclic(2));
  // Oracle: count triples of K with product in H, times 3!.
  auto mask = mask_of(b.k, b.h);
  long long triples = 0;
  for (int x = 0; x < b.k.order(); ++x)
    for (int y = 0; y < b.k.order(); ++y)
      for (int z = 0; z < b.k.order(); ++z)
        triples += mask[b.k.mul(b.k.mul(x, y), z)];
  EXPECT_EQ(b.g.order(), 6 * triples);
  EXPECT_EQ(b.g.order(), 768);
  Matrix om = symplectic_form(3);
  for (const auto &e : b.g.elements())
    EXPECT_TRUE(preserves_form(e, om));
  EXPECT_EQ(code_of([] { build_Gn(3, K::T(), K::cyclic(2)); }), ErrorCode::CommutatorNotContained);
  EXPECT_EQ(build_Gn(4, K::cyclic(4), K::cyclic(2)).g.order(), 24 * 4 * 4 * 4 * 2);
}

TEST(Reflections, Examples)
{
  EXPECT_EQ(symplectic_reflections(build_G2(K::binary_dihedral(2), K::cyclic(2), InvolutionSpec::trivial())).size(), 10u);
  EXPECT_EQ(symplectic_reflections(build_G2(K::T(), K::T(), InvolutionSpec::trivial())).size(), 70u);
  // Diagonal elements of a trivial H^2 are never reflections.
  auto diag = FiniteMatrixGroup::closure({Matrix::identity(4)}, 10);
  EXPECT_TRUE(symplectic_reflections(diag).empty());
}

TEST(LAlpha, Examples)
{
  auto a2 = build_G2(K::binary_dihedral(2), K::cyclic(4), InvolutionSpec::trivial());
  EXPECT_EQ(l_alpha(a2).size(), 8u);
  auto hk = build_G2(K::O(), K::O(), InvolutionSpec::trivial());
  EXPECT_EQ(static_cast<int>(l_alpha(hk).size()), hk.k.order());
  auto i = build_G2(K::T(), K::binary_dihedral(2), InvolutionSpec::inversion());
  EXPECT_EQ(l_alpha(i).size(), 24u);
}

TEST(ReflectionGeneration, Examples)
{
  EXPECT_TRUE(check_reflection_generation(build_G2(K::binary_dihedral(2), K::cyclic(2), InvolutionSpec::trivial())));
  EXPECT_TRUE(check_reflection_generation(build_G2(K::T(), K::T(), InvolutionSpec::trivial())));
  // Only the reflections inside H^2: they miss the block swap.
  auto b = build_G2(K::binary_dihedral(2), K::cyclic(2), InvolutionSpec::trivial());
  auto mask = mask_of(b.g, h_power(b));
  std::vector<int> diag;
  for (int x : symplectic_reflections(b))
    if (mask[x])
      diag.push_back(x);
  EXPECT_EQ(diag.size(), 2u);
  EXPECT_FALSE(reflections_generate(b.g, diag));
}

TEST(TableGrid, OrdersMatchTwoKH)
{
  for (const auto &[row, b] : grid())
    EXPECT_EQ(b.g.order(), 2LL * b.k.order() * static_cast<long long>(b.h.size())) << row.label();
}

TEST(TableGrid, LAlphaMatchesMembershipOracle)
{
  for (const auto &[row, b] : grid())
    EXPECT_EQ(static_cast<int>(l_alpha(b).size()), brute_l_alpha(b)) << row.label();
}

TEST(TableGrid, ReflectionCensus)
{
  for (const auto &[row, b] : grid()) {
    auto refl = symplectic_reflections(b);
    EXPECT_EQ(refl.size(), 2 * (b.h.size() - 1) + l_alpha(b).size()) << row.label();
    EXPECT_TRUE(check_reflection_generation(b)) << row.label();
  }
}

TEST(TableGrid, RankAgreesWithEigenvalueOracle)
{
  for (const auto &[row, b] : grid()) {
    if (b.g.order() > 400)
      continue;
    for (const auto &e : b.g.elements()) {
      int r = rank_one_minus(e);
      ASSERT_EQ(r, 4 - eigenvalue_one_multiplicity(e)) << row.label();
      ASSERT_EQ(r % 2, 0);
    }
  }
}

TEST(TableGrid, PreservesSymplecticForm)
{
  Matrix om = symplectic_form(2);
  for (const auto &[row, b] : grid())
    for (const auto &e : b.g.elements())
      ASSERT_TRUE(preserves_form(e, om)) << row.label();
}

TEST(TableGrid, HSquaredNormalAndWreathPartNormalIffAlphaTrivial)
{
  for (const auto &[row, b] : grid()) {
    Subset hp = h_power(b);
    EXPECT_EQ(hp.size(), b.h.size() * b.h.size());
    EXPECT_TRUE(is_normal(b.g, hp)) << row.label();
    EXPECT_EQ(is_normal(b.g, wreath_part(b)), b.alpha.is_identity()) << row.label();
  }
}

TEST(TableGrid, WreathRowsEqualWreathProduct)
{
  for (auto k : {K::binary_dihedral(3), K::T()}) {
    auto b = build_G2(k, k, InvolutionSpec::trivial());
    std::vector<Matrix> all;
    for (int x : b.k.generators()) {
      all.push_back(block_diagonal(2, {b.k.element(x)}));
      all.push_back(block_diagonal(2, {Matrix::identity(2), b.k.element(x)}));
    }
    all.push_back(block_swap(2, 0, 1));
    auto w = FiniteMatrixGroup::closure(all, 5000);
    EXPECT_EQ(w.order(), b.g.order());
    EXPECT_EQ(b.g.embed(w).size(), static_cast<std::size_t>(w.order()));
  }
}

TEST(Involutions, AreInvolutionsOfGamma)
{
  for (const auto &[row, b] : grid()) {
    EXPECT_TRUE(b.alpha.involution) << row.label();
    bool trivial = row.alpha.kind == InvolutionKind::Trivial;
    if (trivial)
      EXPECT_TRUE(b.alpha.is_identity());
  }
}

TEST(Involutions, SearchRules)
{
  // (Q): alpha(x) = sign(x) x, trivial modulo the center.
  auto q = build_G2(K::O(), K::cyclic(1), InvolutionSpec::aut_search(AutSearchRule::CentralKernel));
  auto t = q.k.index_of(complexify((Quaternion::one() + Quaternion::i()).scaled(inv_sqrt2())));
  EXPECT_EQ(q.alpha(t), q.k.mul(t, q.k.index_of(Matrix::identity(2).scaled(-1))));
  // (T) and (V): outer on Alt(5).
  for (auto h : {K::cyclic(2), K::cyclic(1)}) {
    auto b = build_G2(K::I(), h, InvolutionSpec::aut_search(AutSearchRule::OuterOnCentralQuotient));
    EXPECT_FALSE(is_inner(*b.gamma, b.alpha));
  }
}

TEST(RowSpec, ParseAndConstraints)
{
  EXPECT_EQ(parse_row_spec("A(m=2)").label(), "A(m=2)");
  EXPECT_EQ(parse_row_spec("B(m=1,l=1,r=1)").table_order, 32);
  EXPECT_EQ(parse_row_spec("H").table_l_alpha, 24);
  EXPECT_EQ(parse_row_spec("F(m=7,r=4)").table_l_alpha, 16);
  EXPECT_EQ(code_of([] { parse_row_spec("Z(m=1)"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_row_spec("A(m=2"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_row_spec("A"); }), ErrorCode::InvalidRowParameters);
  EXPECT_EQ(code_of([] { parse_row_spec("H(m=1)"); }), ErrorCode::InvalidRowParameters);
  EXPECT_EQ(code_of([] { parse_row_spec("A(q=1)"); }), ErrorCode::InvalidRowParameters);
  EXPECT_EQ(code_of([] { parse_row_spec("B(m=1,l=1,r=0)"); }), ErrorCode::ParameterConstraintViolated);
  EXPECT_EQ(code_of([] { parse_row_spec("B(m=1,l=3,r=3)"); }), ErrorCode::ParameterConstraintViolated);
  EXPECT_EQ(code_of([] { parse_row_spec("A(m=0)"); }), ErrorCode::ParameterConstraintViolated);
  EXPECT_TRUE(row_params_valid('B', {1, 6, 5}));
  EXPECT_FALSE(row_params_valid('F', {3, -1, 0}));
}

TEST(RowSpec, DefaultGridIsComplete)
{
  std::map<char, int> count;
  for (const auto &t : default_rows(4, 4, false))
    ++count[t.letter];
  for (char c : row_letters())
    EXPECT_EQ(count.count(c), c == 'R' ? 0u : 1u) << c;
  EXPECT_EQ(count['A'], 4);
  EXPECT_EQ(count['B'], 17);
  bool has_r = false;
  for (const auto &t : default_rows(4, 4, true))
    has_r = has_r || t.letter == 'R';
  EXPECT_TRUE(has_r);
}
