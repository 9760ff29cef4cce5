#ifndef SYMPRES_SRG_BUNDLE_HPP
#define SYMPRES_SRG_BUNDLE_HPP

#include <memory>
#include <vector>

#include "sympres/srg/involution.hpp"

namespace sympres {

/// G(K,H,alpha) (n = 2) or G_n(K,H) together with its ingredients.
struct SRGroupBundle {
  int n = 2;
  KleinianSpec k_spec, h_spec;
  FiniteMatrixGroup k;
  /// H as a subset of k.
  Subset h;
  std::shared_ptr<const QuotientGroup> gamma;
  InvolutionSpec alpha_spec;
  /// alpha on gamma; the identity for n >= 3.
  Automorphism alpha;
  FiniteMatrixGroup g;

  /// First element of k (in BFS order) in the coset alpha(xH).
  int alpha_rep(int x) const;
};

/// Generated by the block swap, (h, 1) for generators h of H, and (k, a_k)
/// for generators k of K. Raises HNotNormal, AlphaNotInvolution, or
/// BoundExceeded; the order is checked against 2|K||H|.
SRGroupBundle build_G2(const KleinianSpec &k, const KleinianSpec &h, const InvolutionSpec &alpha,
                       int bound = default_order_bound());

/// Generated by adjacent block transpositions, (h, 1, ..., 1) and
/// (k, k^-1, 1, ..., 1). Requires n >= 2 and [K,K] <= H (raises
/// CommutatorNotContained); the order is checked against n! |K|^(n-1) |H|.
SRGroupBundle build_Gn(int n, const KleinianSpec &k, const KleinianSpec &h, int bound = default_order_bound());

/// 2n x 2n block swap of factors i and j.
Matrix block_swap(int n, int i, int j);
/// diag(blocks...) embedded at the given positions, identity elsewhere.
Matrix block_diagonal(int n, const std::vector<Matrix> &blocks);

/// Indices of all g with rank(1 - g) = 2.
std::vector<int> symplectic_reflections(const FiniteMatrixGroup &g);
std::vector<int> symplectic_reflections(const SRGroupBundle &b);
/// {x in K : x alpha(x) in H}, as a sorted subset of b.k.
Subset l_alpha(const SRGroupBundle &b);
/// True iff the given elements generate all of g.
bool reflections_generate(const FiniteMatrixGroup &g, const std::vector<int> &reflections);
/// True iff the reflections of g generate g.
bool check_reflection_generation(const FiniteMatrixGroup &g);
bool check_reflection_generation(const SRGroupBundle &b);
/// H^n inside b.g.
Subset h_power(const SRGroupBundle &b);
/// The subgroup generated by H^n and the block permutations, inside b.g.
Subset wreath_part(const SRGroupBundle &b);

/// n! |K|^(n-1) |H|.
long long expected_order(int n, int k_order, int h_order);

} // namespace sympres

#endif // SYMPRES_SRG_BUNDLE_HPP
