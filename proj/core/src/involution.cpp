#include "sympres/srg/involution.hpp"

#include "sympres/error.hpp"

namespace sympres {

std::string InvolutionSpec::describe() const
{
  switch (kind) {
  case InvolutionKind::Trivial: return "1";
  case InvolutionKind::AlphaR: return "alpha_" + std::to_string(r);
  case InvolutionKind::BetaR: return "beta_" + std::to_string(r);
  case InvolutionKind::Inversion: return "inversion";
  case InvolutionKind::ConjugationBy: return "conjugation by " + conjugator.to_string();
  case InvolutionKind::AutSearch:
    return rule == AutSearchRule::CentralKernel ? "search: nontrivial, trivial modulo the center"
                                                : "search: involution, outer modulo the center";
  }
  return "?";
}

namespace {

bool matches_rule(const QuotientGroup &gamma, const QuotientGroup &zq, const Automorphism &a, AutSearchRule rule)
{
  if (!a.involution || a.is_identity())
    return false;
  Automorphism ind = induced_automorphism(gamma, zq, a);
  if (rule == AutSearchRule::CentralKernel)
    return ind.is_identity();
  return !is_inner(zq, ind);
}

} // namespace

Automorphism realize_involution(const FiniteMatrixGroup &k, const KleinianSpec &kspec, const QuotientGroup &gamma,
                                const InvolutionSpec &spec)
{
  auto proj = [&](const Matrix &m) { return gamma.project(k.index_of(m)); };
  Automorphism a;
  switch (spec.kind) {
  case InvolutionKind::Trivial:
    a = identity_automorphism(gamma);
    break;
  case InvolutionKind::AlphaR:
  case InvolutionKind::BetaR: {
    if (kspec.family != KleinianFamily::BinaryDihedral)
      throw Error(ErrorCode::ParameterConstraintViolated, spec.describe() + " needs a binary dihedral K");
    auto gens = standard_generators(kspec);
    int u = proj(gens[0]), v = proj(gens[1]);
    int v_img = v;
    if (spec.kind == InvolutionKind::BetaR)
      v_img = gamma.mul(proj(Matrix::identity(2).scaled(-1)), v);
    a = automorphism_from_map(gamma, {u, v}, {power(gamma, u, spec.r), v_img});
    break;
  }
  case InvolutionKind::Inversion: {
    std::vector<int> imgs;
    for (int s : gamma.generators())
      imgs.push_back(gamma.inv(s));
    a = automorphism_from_images(gamma, imgs);
    break;
  }
  case InvolutionKind::ConjugationBy: {
    const Quaternion &q = spec.conjugator;
    Matrix c = complexify(q);
    Matrix ci = complexify(q.conjugate()).scaled(q.norm().inverse());
    std::vector<int> imgs;
    for (int s : gamma.generators())
      imgs.push_back(proj(c * k.element(gamma.representative(s)) * ci));
    a = automorphism_from_images(gamma, imgs);
    break;
  }
  case InvolutionKind::AutSearch: {
    QuotientGroup zq(gamma, center(gamma));
    auto found = find_automorphism(gamma, [&](const Automorphism &x) { return matches_rule(gamma, zq, x, spec.rule); });
    if (!found)
      throw Error(ErrorCode::AlphaNotInvolution, "no automorphism matches " + spec.describe());
    a = std::move(*found);
    break;
  }
  }
  if (!a.involution)
    throw Error(ErrorCode::AlphaNotInvolution, spec.describe() + " is not an involution of K/H");
  return a;
}

} // namespace sympres
