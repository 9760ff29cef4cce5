#include "sympres/kleinian/kleinian.hpp"

#include <charconv>

#include "sympres/error.hpp"

namespace sympres {

namespace {

using F = KleinianFamily;

bool contained(const KleinianSpec &k, const KleinianSpec &h)
{
  if (h == k)
    return true;
  if (h.family == F::Cyclic) {
    int n = h.m;
    switch (k.family) {
    case F::Cyclic: return k.m % n == 0;
    case F::BinaryDihedral: return (2 * k.m) % n == 0;
    case F::Tetrahedral:
    case F::Icosahedral: return n == 1 || n == 2 || n == 4;
    case F::Octahedral: return n == 1 || n == 2 || n == 4 || n == 8;
    }
  }
  if (h.family == F::BinaryDihedral) {
    if (k.family == F::BinaryDihedral)
      return k.m % h.m == 0;
    return h.m == 2 && k.family != F::Cyclic;
  }
  if (h.family == F::Tetrahedral)
    return k.family == F::Octahedral;
  return false;
}

} // namespace

KleinianSpec KleinianSpec::parse(std::string_view text)
{
  if (text == "T")
    return T();
  if (text == "O")
    return O();
  if (text == "I")
    return I();
  if (text.size() >= 2 && (text[0] == 'C' || text[0] == 'D')) {
    int m = 0;
    auto body = text.substr(1);
    auto [p, ec] = std::from_chars(body.data(), body.data() + body.size(), m);
    if (ec == std::errc() && p == body.data() + body.size() && m >= 1 && body[0] != '0')
      return text[0] == 'C' ? cyclic(m) : binary_dihedral(m);
  }
  throw Error(ErrorCode::ParseError, "unknown Kleinian group '" + std::string(text) + "'");
}

int KleinianSpec::order() const
{
  switch (family) {
  case F::Cyclic: return m;
  case F::BinaryDihedral: return 4 * m;
  case F::Tetrahedral: return 24;
  case F::Octahedral: return 48;
  case F::Icosahedral: return 120;
  }
  return 0;
}

std::string KleinianSpec::name() const
{
  switch (family) {
  case F::Cyclic: return "C" + std::to_string(m);
  case F::BinaryDihedral: return "D" + std::to_string(m);
  case F::Tetrahedral: return "T";
  case F::Octahedral: return "O";
  case F::Icosahedral: return "I";
  }
  return "?";
}

std::vector<Quaternion> standard_quaternion_generators(const KleinianSpec &spec)
{
  const Cyclotomic half(Rational(1, 2));
  const Quaternion omega = (Quaternion::one() - Quaternion::i() + Quaternion::j() + Quaternion::k()).scaled(half);
  switch (spec.family) {
  case F::Cyclic:
    if (spec.m < 1)
      throw Error(ErrorCode::ParameterConstraintViolated, "C_m needs m >= 1");
    return {Quaternion::zeta(spec.m)};
  case F::BinaryDihedral:
    if (spec.m < 1)
      throw Error(ErrorCode::ParameterConstraintViolated, "D_m needs m >= 1");
    return {Quaternion::zeta(2 * spec.m), Quaternion::k()};
  case F::Tetrahedral:
    return {Quaternion::zeta(4), Quaternion::k(), omega};
  case F::Octahedral:
    return {Quaternion::zeta(4), Quaternion::k(), omega, (Quaternion::one() + Quaternion::i()).scaled(inv_sqrt2())};
  case F::Icosahedral: {
    Quaternion g{golden_rho(), golden_sigma(), -1, 0};
    return {Quaternion::zeta(4), Quaternion::k(), g.scaled(half)};
  }
  }
  return {};
}

std::vector<Matrix> standard_generators(const KleinianSpec &spec)
{
  std::vector<Matrix> out;
  for (const auto &q : standard_quaternion_generators(spec))
    out.push_back(complexify(q));
  return out;
}

FiniteMatrixGroup build_kleinian(const KleinianSpec &spec)
{
  return FiniteMatrixGroup::closure(standard_generators(spec), std::max(spec.order(), 1));
}

Subset canonical_subset(const FiniteMatrixGroup &k_group, const KleinianSpec &k, const KleinianSpec &h,
                        bool require_normal)
{
  if (!contained(k, h))
    throw Error(ErrorCode::UnsupportedContainment, h.name() + " < " + k.name() + " is not supported");
  std::vector<int> gens;
  for (const auto &m : standard_generators(h)) {
    auto idx = k_group.find(m);
    if (!idx)
      throw Error(ErrorCode::UnsupportedContainment, h.name() + " is not generated inside " + k.name());
    gens.push_back(*idx);
  }
  Subset s = generate(k_group, gens);
  if (static_cast<int>(s.size()) != h.order())
    throw Error(ErrorCode::UnsupportedContainment, h.name() + " has the wrong order inside " + k.name());
  if (require_normal && !is_normal(k_group, s))
    throw Error(ErrorCode::NotNormalWhereRequired, h.name() + " is not normal in " + k.name());
  return s;
}

FiniteMatrixGroup canonical_subgroup(const KleinianSpec &k, const KleinianSpec &h, bool require_normal)
{
  FiniteMatrixGroup kg = build_kleinian(k);
  Subset s = canonical_subset(kg, k, h, require_normal);
  return kg.subgroup(reduce_generators(kg, s));
}

} // namespace sympres
