#include "sympres/repchar/gamma_action.hpp"

#include <algorithm>

#include "sympres/error.hpp"

namespace sympres {

GammaAction gamma_action(const FiniteMatrixGroup &k, const Subset &h, std::shared_ptr<const QuotientGroup> gamma)
{
  GammaAction a;
  a.gamma = std::move(gamma);
  a.h = k.subgroup(reduce_generators(k, h));
  a.table = character_table(a.h);
  a.graph = mckay_graph(a.table, natural_character(a.h, a.table));

  const int nh = a.h.order();
  std::vector<int> k_of(nh), h_of(k.order(), -1);
  for (int t = 0; t < nh; ++t) {
    k_of[t] = k.index_of(a.h.element(t));
    h_of[k_of[t]] = t;
  }
  const CharacterTable &tab = a.table;
  const int r = tab.size();
  const int nc = static_cast<int>(tab.classes.size());

  // Permutation induced by a single element g of K.
  auto twist = [&](int g) {
    int gi = k.inv(g);
    std::vector<int> moved(nc);
    for (int c = 0; c < nc; ++c) {
      int t = k_of[tab.classes[c][0]];
      int x = h_of[k.mul(k.mul(gi, t), g)];
      if (x < 0)
        throw Error(ErrorCode::NotWellDefined, "H is not normal in K");
      moved[c] = tab.class_of[x];
    }
    std::vector<int> p(r, -1);
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r && p[i] < 0; ++j) {
        bool eq = true;
        for (int c = 0; c < nc && eq; ++c)
          eq = tab.chars[j][c] == tab.chars[i][moved[c]];
        if (eq)
          p[i] = j;
      }
      if (p[i] < 0)
        throw Error(ErrorCode::NotWellDefined, "twisted character is not irreducible");
    }
    return p;
  };

  const QuotientGroup &q = *a.gamma;
  for (int c = 0; c < q.order(); ++c) {
    const auto &members = q.coset_members(c);
    std::vector<int> p = twist(members[0]);
    for (std::size_t i = 1; i < members.size(); ++i)
      if (twist(members[i]) != p)
        throw Error(ErrorCode::NotWellDefined, "coset representatives twist differently");
    a.perm.push_back(std::move(p));
  }
  return a;
}

std::vector<Stabilizer> vertex_stabilizers(const GammaAction &a)
{
  std::vector<Stabilizer> out;
  for (int v = 0; v < a.vertex_count(); ++v) {
    Stabilizer s;
    for (int c = 0; c < a.gamma->order(); ++c)
      if (a.perm[c][v] == v)
        s.subgroup.push_back(c);
    s.cyclic = is_cyclic(*a.gamma, s.subgroup);
    out.push_back(std::move(s));
  }
  return out;
}

Subset edge_stabilizer(const GammaAction &a, int v, int u)
{
  Subset s;
  for (int c = 0; c < a.gamma->order(); ++c) {
    int pv = a.perm[c][v], pu = a.perm[c][u];
    if ((pv == v && pu == u) || (pv == u && pu == v))
      s.push_back(c);
  }
  return s;
}

std::vector<int> vertex_orbit(const GammaAction &a, int v)
{
  std::vector<int> orbit;
  for (int c = 0; c < a.gamma->order(); ++c)
    orbit.push_back(a.perm[c][v]);
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  return orbit;
}

} // namespace sympres
