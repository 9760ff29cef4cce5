#ifndef SYMPRES_REPCHAR_MCKAY_HPP
#define SYMPRES_REPCHAR_MCKAY_HPP

#include <string>
#include <vector>

#include "sympres/matgrp/matrix_group.hpp"
#include "sympres/repchar/character_table.hpp"

namespace sympres {

/// Vertices are the rows of the character table; m[i][j] is the
/// multiplicity of chi_j in C^2 (x) chi_i.
struct McKayGraph {
  std::vector<std::vector<int>> m;
  std::vector<int> dims;
  int extending_vertex = 0;
  /// Type of the graph with the extending vertex removed: "A3", "D4",
  /// "E6", ..., "A0" for a single vertex, "unknown" otherwise.
  std::string ade_type;

  int size() const { return static_cast<int>(m.size()); }
};

/// Traces of the class representatives of a 2-dim matrix group.
std::vector<Cyclotomic> natural_character(const FiniteMatrixGroup &h, const CharacterTable &t);

/// Raises NotSelfDualStd if the multiplicities are not symmetric.
McKayGraph mckay_graph(const CharacterTable &t, const std::vector<Cyclotomic> &std_char);

/// Finite Dynkin type of a simply-laced tree given by multiplicities.
std::string dynkin_type(const std::vector<std::vector<int>> &m);

/// Multiplicity matrix of the affine diagram of type A, D or E with the
/// given rank (A~n has n+1 vertices; A~1 is a double edge, A~0 a double
/// loop; D~3 is A~3). Vertex 0 is the extending vertex.
std::vector<std::vector<int>> affine_diagram(char type, int rank);

/// Graph isomorphism of multiplicity matrices (small graphs, backtracking).
bool isomorphic(const std::vector<std::vector<int>> &a, const std::vector<std::vector<int>> &b);

} // namespace sympres

#endif // SYMPRES_REPCHAR_MCKAY_HPP
