#ifndef SYMPRES_CLASSIFY_SINGULAR_HPP
#define SYMPRES_CLASSIFY_SINGULAR_HPP

#include <optional>
#include <string>
#include <vector>

#include "sympres/matgrp/group_hom.hpp"
#include "sympres/repchar/gamma_action.hpp"

namespace sympres {

enum class MarkedKind { Intersection, FreeFixed };

/// Combinatorial stand-in for a point of the exceptional fiber with
/// nontrivial stabilizer: either the intersection of the components of an
/// edge {v, u}, or one of the two fixed points on component v of a cyclic
/// vertex stabilizer that is not an intersection point.
struct MarkedPoint {
  MarkedKind kind = MarkedKind::FreeFixed;
  int v = -1;
  /// Second vertex of an intersection, -1 for free points.
  int u = -1;
  /// 1 or 2 for free points, 0 for intersections.
  int member = 0;
  /// Exact stabilizer in Gamma (sorted element indices).
  Subset stabilizer;

  bool same_point(const MarkedPoint &o) const { return kind == o.kind && v == o.v && u == o.u && member == o.member; }
  std::string describe() const;
};

/// Marked points with nontrivial stabilizer. Vertices are visited by
/// (degree, index); for each one its free points come first, then the edges
/// to later vertices. Vertices with a non-cyclic stabilizer contribute only
/// intersections; one note per such vertex is appended to `notes`.
std::vector<MarkedPoint> marked_fixed_points(const GammaAction &a, std::vector<std::string> *notes = nullptr);

enum class SingularRule { FreeFreeSameVertex, TypeMismatch, DistinctEdgeOrbits, DistinctVertexOrbits };
std::string to_string(SingularRule r);

/// (P, x; alpha(P), y) with y taken as `translation` . y_found, so that
/// Stab(x) = P and translation . Stab(y_found) . translation^-1 = alpha(P).
struct SingularWitness {
  Subset p;
  /// Irredundant generators of P.
  std::vector<int> p_generators;
  MarkedPoint x;
  Subset alpha_p;
  MarkedPoint y;
  int translation = 0;
  SingularRule rule = SingularRule::FreeFreeSameVertex;
  std::string citation;
};

/// Deterministic search: rules in declaration order, then x, then y in
/// marked-point order. An empty result is inconclusive, not a proof of
/// resolvability.
std::optional<SingularWitness> find_singular_pair(const GammaAction &a, const Automorphism &alpha);

/// Recomputes both stabilizers, the translation and the rule's orbit
/// certificate. Returns an empty string when everything holds, otherwise the
/// first failing check.
std::string revalidate(const GammaAction &a, const Automorphism &alpha, const SingularWitness &w);

/// Orbit of the unordered pair {v, u} under Gamma, each pair stored (min, max).
std::vector<std::pair<int, int>> edge_orbit(const GammaAction &a, int v, int u);

} // namespace sympres

#endif // SYMPRES_CLASSIFY_SINGULAR_HPP
