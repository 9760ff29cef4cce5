#include "sympres/srg/bundle.hpp"

#include <algorithm>

#include "sympres/error.hpp"

namespace sympres {

int SRGroupBundle::alpha_rep(int x) const
{
  return gamma->representative(alpha(gamma->project(x)));
}

Matrix block_swap(int n, int i, int j)
{
  std::vector<Matrix> id(n, Matrix::identity(2));
  std::vector<int> perm(n);
  for (int t = 0; t < n; ++t)
    perm[t] = t;
  std::swap(perm[i], perm[j]);
  return wreath_embed(n, id, perm);
}

Matrix block_diagonal(int n, const std::vector<Matrix> &blocks)
{
  std::vector<Matrix> f(blocks);
  f.resize(n, Matrix::identity(2));
  std::vector<int> perm(n);
  for (int t = 0; t < n; ++t)
    perm[t] = t;
  return wreath_embed(n, f, perm);
}

long long expected_order(int n, int k_order, int h_order)
{
  long long v = h_order;
  for (int t = 2; t <= n; ++t)
    v *= t;
  for (int t = 1; t < n; ++t)
    v *= k_order;
  return v;
}

namespace {

SRGroupBundle base_bundle(int n, const KleinianSpec &k, const KleinianSpec &h)
{
  SRGroupBundle b;
  b.n = n;
  b.k_spec = k;
  b.h_spec = h;
  b.k = build_kleinian(k);
  try {
    b.h = canonical_subset(b.k, k, h, true);
  } catch (const Error &e) {
    if (e.code() == ErrorCode::NotNormalWhereRequired)
      throw Error(ErrorCode::HNotNormal, e.detail());
    throw;
  }
  b.gamma = std::make_shared<QuotientGroup>(b.k, b.h);
  return b;
}

void check_order(const SRGroupBundle &b, long long want)
{
  if (b.g.order() != want)
    throw Error(ErrorCode::AssertionFailure, "group order " + std::to_string(b.g.order()) + " differs from " +
                                                 std::to_string(want));
}

} // namespace

SRGroupBundle build_G2(const KleinianSpec &k, const KleinianSpec &h, const InvolutionSpec &alpha, int bound)
{
  SRGroupBundle b = base_bundle(2, k, h);
  b.alpha_spec = alpha;
  b.alpha = realize_involution(b.k, k, *b.gamma, alpha);
  std::vector<Matrix> gens{block_swap(2, 0, 1)};
  for (int x : reduce_generators(b.k, b.h))
    gens.push_back(block_diagonal(2, {b.k.element(x)}));
  for (int x : b.k.generators())
    gens.push_back(block_diagonal(2, {b.k.element(x), b.k.element(b.alpha_rep(x))}));
  b.g = FiniteMatrixGroup::closure(gens, bound);
  check_order(b, expected_order(2, b.k.order(), static_cast<int>(b.h.size())));
  return b;
}

SRGroupBundle build_Gn(int n, const KleinianSpec &k, const KleinianSpec &h, int bound)
{
  if (n < 2)
    throw Error(ErrorCode::InvalidRowParameters, "G_n needs n >= 2");
  SRGroupBundle b = base_bundle(n, k, h);
  auto mask = mask_of(b.k, b.h);
  for (int c : commutator_subgroup(b.k))
    if (!mask[c])
      throw Error(ErrorCode::CommutatorNotContained, "[K,K] is not contained in H");
  b.alpha = identity_automorphism(*b.gamma);
  std::vector<Matrix> gens;
  for (int i = 0; i + 1 < n; ++i)
    gens.push_back(block_swap(n, i, i + 1));
  for (int x : reduce_generators(b.k, b.h))
    gens.push_back(block_diagonal(n, {b.k.element(x)}));
  for (int x : b.k.generators())
    gens.push_back(block_diagonal(n, {b.k.element(x), b.k.element(b.k.inv(x))}));
  b.g = FiniteMatrixGroup::closure(gens, bound);
  check_order(b, expected_order(n, b.k.order(), static_cast<int>(b.h.size())));
  return b;
}

std::vector<int> symplectic_reflections(const FiniteMatrixGroup &g)
{
  std::vector<int> out;
  for (int x = 1; x < g.order(); ++x)
    if (rank_one_minus(g.element(x)) == 2)
      out.push_back(x);
  return out;
}

std::vector<int> symplectic_reflections(const SRGroupBundle &b) { return symplectic_reflections(b.g); }

Subset l_alpha(const SRGroupBundle &b)
{
  const QuotientGroup &q = *b.gamma;
  Subset out;
  for (int x = 0; x < b.k.order(); ++x) {
    int c = q.project(x);
    if (q.mul(c, b.alpha(c)) == 0)
      out.push_back(x);
  }
  return out;
}

bool reflections_generate(const FiniteMatrixGroup &g, const std::vector<int> &reflections)
{
  return static_cast<int>(generate(g, reflections).size()) == g.order();
}

bool check_reflection_generation(const FiniteMatrixGroup &g)
{
  return reflections_generate(g, symplectic_reflections(g));
}

bool check_reflection_generation(const SRGroupBundle &b) { return check_reflection_generation(b.g); }

Subset h_power(const SRGroupBundle &b)
{
  std::vector<int> gens;
  for (int x : reduce_generators(b.k, b.h))
    for (int i = 0; i < b.n; ++i) {
      std::vector<Matrix> blocks(b.n, Matrix::identity(2));
      blocks[i] = b.k.element(x);
      gens.push_back(b.g.index_of(block_diagonal(b.n, blocks)));
    }
  return generate(b.g, gens);
}

Subset wreath_part(const SRGroupBundle &b)
{
  Subset hp = h_power(b);
  std::vector<int> gens = reduce_generators(b.g, hp);
  for (int i = 0; i + 1 < b.n; ++i)
    gens.push_back(b.g.index_of(block_swap(b.n, i, i + 1)));
  return generate(b.g, gens);
}

} // namespace sympres
