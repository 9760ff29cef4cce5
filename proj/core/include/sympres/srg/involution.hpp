#ifndef SYMPRES_SRG_INVOLUTION_HPP
#define SYMPRES_SRG_INVOLUTION_HPP

#include <string>

#include "sympres/kleinian/kleinian.hpp"
#include "sympres/matgrp/group_hom.hpp"
#include "sympres/matgrp/table_group.hpp"

namespace sympres {

enum class InvolutionKind { Trivial, AlphaR, BetaR, Inversion, ConjugationBy, AutSearch };

/// Predicates for the automorphisms that are only described by a property.
enum class AutSearchRule {
  /// Nontrivial, and trivial on Gamma / Z(Gamma).
  CentralKernel,
  /// Induces an outer automorphism on Gamma / Z(Gamma).
  OuterOnCentralQuotient,
};

/// Description of an involution alpha of Gamma = K/H.
struct InvolutionSpec {
  InvolutionKind kind = InvolutionKind::Trivial;
  int r = 1;
  Quaternion conjugator = Quaternion::one();
  AutSearchRule rule = AutSearchRule::CentralKernel;

  static InvolutionSpec trivial() { return {}; }
  /// u -> u^r, v -> v on the dihedral quotient, u the image of zeta and v of k.
  static InvolutionSpec alpha_r(int r) { return {InvolutionKind::AlphaR, r, Quaternion::one(), {}}; }
  /// zeta -> zeta^r, k -> -k.
  static InvolutionSpec beta_r(int r) { return {InvolutionKind::BetaR, r, Quaternion::one(), {}}; }
  static InvolutionSpec inversion() { return {InvolutionKind::Inversion, 1, Quaternion::one(), {}}; }
  /// x -> q x q^-1; q need not have norm 1.
  static InvolutionSpec conjugation(const Quaternion &q) { return {InvolutionKind::ConjugationBy, 1, q, {}}; }
  static InvolutionSpec aut_search(AutSearchRule rule) { return {InvolutionKind::AutSearch, 1, Quaternion::one(), rule}; }

  std::string describe() const;
};

/// Realizes `spec` as a validated automorphism of gamma = K / H. K must be
/// build_kleinian(kspec). Raises AlphaNotInvolution if the result is not an
/// involution (or no automorphism matches an AutSearch rule); conjugators
/// that do not normalize K raise NotAMember.
Automorphism realize_involution(const FiniteMatrixGroup &k, const KleinianSpec &kspec, const QuotientGroup &gamma,
                                const InvolutionSpec &spec);

} // namespace sympres

#endif // SYMPRES_SRG_INVOLUTION_HPP
