#ifndef SYMPRES_REPCHAR_GAMMA_ACTION_HPP
#define SYMPRES_REPCHAR_GAMMA_ACTION_HPP

#include <memory>
#include <vector>

#include "sympres/matgrp/table_group.hpp"
#include "sympres/repchar/mckay.hpp"

namespace sympres {

/// Action of Gamma = K/H on Irr(H) by twisting: (g . chi)(t) = chi(g^-1 t g).
struct GammaAction {
  std::shared_ptr<const QuotientGroup> gamma;
  /// H as its own matrix group; character rows index the vertices.
  FiniteMatrixGroup h;
  CharacterTable table;
  McKayGraph graph;
  /// perm[c][v]: image of vertex v under the coset c.
  std::vector<std::vector<int>> perm;

  int vertex_count() const { return graph.size(); }
};

/// H must be a normal subgroup of k (given as a sorted subset) and gamma
/// the quotient k/H. Raises NotWellDefined if two representatives of a
/// coset twist differently.
GammaAction gamma_action(const FiniteMatrixGroup &k, const Subset &h, std::shared_ptr<const QuotientGroup> gamma);

struct Stabilizer {
  Subset subgroup;
  bool cyclic = false;
};

/// Stabilizer in Gamma of every vertex (the extending vertex included).
std::vector<Stabilizer> vertex_stabilizers(const GammaAction &a);
/// Setwise stabilizer of the pair {v, u}.
Subset edge_stabilizer(const GammaAction &a, int v, int u);
/// Orbit of a vertex.
std::vector<int> vertex_orbit(const GammaAction &a, int v);

} // namespace sympres

#endif // SYMPRES_REPCHAR_GAMMA_ACTION_HPP
