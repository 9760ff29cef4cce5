#include "sympres/classify/singular.hpp"

#include <algorithm>

#include "sympres/error.hpp"

namespace sympres {

namespace {

std::vector<int> vertex_order(const GammaAction &a)
{
  std::vector<int> order;
  for (int v = 0; v < a.vertex_count(); ++v)
    if (v != a.graph.extending_vertex)
      order.push_back(v);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return a.graph.dims[x] < a.graph.dims[y]; });
  return order;
}

Subset image(const Automorphism &alpha, const Subset &s)
{
  Subset out;
  out.reserve(s.size());
  for (int x : s)
    out.push_back(alpha(x));
  std::sort(out.begin(), out.end());
  return out;
}

Subset conjugate(const Group &g, int c, const Subset &s)
{
  int ci = g.inv(c);
  Subset out;
  out.reserve(s.size());
  for (int x : s)
    out.push_back(g.mul(g.mul(c, x), ci));
  std::sort(out.begin(), out.end());
  return out;
}

// Smallest c with c s c^-1 == target, or -1.
int find_translation(const Group &g, const Subset &s, const Subset &target)
{
  if (s.size() != target.size())
    return -1;
  for (int c = 0; c < g.order(); ++c)
    if (conjugate(g, c, s) == target)
      return c;
  return -1;
}

bool in_vertex_orbit(const GammaAction &a, int v, int w)
{
  auto orbit = vertex_orbit(a, v);
  return std::find(orbit.begin(), orbit.end(), w) != orbit.end();
}

bool certificate(const GammaAction &a, SingularRule rule, const MarkedPoint &x, const MarkedPoint &y)
{
  using K = MarkedKind;
  switch (rule) {
  case SingularRule::FreeFreeSameVertex:
    return x.kind == K::FreeFixed && y.kind == K::FreeFixed && x.v == y.v && x.member != y.member;
  case SingularRule::TypeMismatch:
    return x.kind != y.kind;
  case SingularRule::DistinctEdgeOrbits: {
    if (x.kind != K::Intersection || y.kind != K::Intersection)
      return false;
    auto orbit = edge_orbit(a, x.v, x.u);
    std::pair<int, int> e{std::min(y.v, y.u), std::max(y.v, y.u)};
    return std::find(orbit.begin(), orbit.end(), e) == orbit.end();
  }
  case SingularRule::DistinctVertexOrbits:
    return x.kind == K::FreeFixed && y.kind == K::FreeFixed && !in_vertex_orbit(a, x.v, y.v);
  }
  return false;
}

Subset stabilizer_of(const GammaAction &a, const MarkedPoint &pt)
{
  if (pt.kind == MarkedKind::Intersection)
    return edge_stabilizer(a, pt.v, pt.u);
  return vertex_stabilizers(a)[pt.v].subgroup;
}

constexpr SingularRule kRules[] = {SingularRule::FreeFreeSameVertex, SingularRule::TypeMismatch,
                                   SingularRule::DistinctEdgeOrbits, SingularRule::DistinctVertexOrbits};

} // namespace

std::string MarkedPoint::describe() const
{
  if (kind == MarkedKind::Intersection)
    return "intersection(" + std::to_string(v) + "," + std::to_string(u) + ")";
  return "free(" + std::to_string(v) + "#" + std::to_string(member) + ")";
}

std::string to_string(SingularRule r)
{
  switch (r) {
  case SingularRule::FreeFreeSameVertex: return "FreeFreeSameVertex";
  case SingularRule::TypeMismatch: return "TypeMismatch";
  case SingularRule::DistinctEdgeOrbits: return "DistinctEdgeOrbits";
  case SingularRule::DistinctVertexOrbits: return "DistinctVertexOrbits";
  }
  return "?";
}

std::vector<std::pair<int, int>> edge_orbit(const GammaAction &a, int v, int u)
{
  std::vector<std::pair<int, int>> out;
  for (const auto &p : a.perm) {
    int x = p[v], y = p[u];
    std::pair<int, int> e{std::min(x, y), std::max(x, y)};
    if (std::find(out.begin(), out.end(), e) == out.end())
      out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MarkedPoint> marked_fixed_points(const GammaAction &a, std::vector<std::string> *notes)
{
  auto stabs = vertex_stabilizers(a);
  auto order = vertex_order(a);
  std::vector<int> pos(a.vertex_count(), -1);
  for (std::size_t i = 0; i < order.size(); ++i)
    pos[order[i]] = static_cast<int>(i);
  const auto &m = a.graph.m;

  std::vector<MarkedPoint> out;
  for (int v : order) {
    const Stabilizer &s = stabs[v];
    if (s.subgroup.size() > 1) {
      if (!s.cyclic) {
        if (notes)
          notes->push_back("vertex " + std::to_string(v) + ": non-cyclic stabilizer of order " +
                           std::to_string(s.subgroup.size()) + ", free fixed points skipped");
      } else {
        int stable = 0;
        for (int u : order)
          if (u != v && m[v][u] >= 1 &&
              std::all_of(s.subgroup.begin(), s.subgroup.end(), [&](int c) { return a.perm[c][u] == u; }))
            ++stable;
        if (stable > 2)
          throw Error(ErrorCode::AssertionFailure,
                      "cyclic stabilizer of vertex " + std::to_string(v) + " fixes more than two incident edges");
        for (int k = 1; k <= 2 - stable; ++k)
          out.push_back({MarkedKind::FreeFixed, v, -1, k, s.subgroup});
      }
    }
    for (int u : order) {
      if (pos[u] <= pos[v] || m[v][u] < 1)
        continue;
      Subset st = edge_stabilizer(a, v, u);
      if (st.size() > 1)
        out.push_back({MarkedKind::Intersection, v, u, 0, std::move(st)});
    }
  }
  return out;
}

std::optional<SingularWitness> find_singular_pair(const GammaAction &a, const Automorphism &alpha)
{
  const Group &g = *a.gamma;
  auto pts = marked_fixed_points(a);
  for (SingularRule rule : kRules)
    for (const auto &x : pts) {
      Subset ap = image(alpha, x.stabilizer);
      for (const auto &y : pts) {
        if (x.same_point(y) || !certificate(a, rule, x, y))
          continue;
        int t = find_translation(g, y.stabilizer, ap);
        if (t < 0)
          continue;
        return SingularWitness{x.stabilizer, reduce_generators(g, x.stabilizer), x, std::move(ap), y, t, rule, {}};
      }
    }
  return std::nullopt;
}

std::string revalidate(const GammaAction &a, const Automorphism &alpha, const SingularWitness &w)
{
  const Group &g = *a.gamma;
  auto pts = marked_fixed_points(a);
  auto listed = [&](const MarkedPoint &p) {
    return std::any_of(pts.begin(), pts.end(), [&](const MarkedPoint &q) { return q.same_point(p); });
  };
  if (!listed(w.x))
    return "x is not a marked point";
  if (!listed(w.y))
    return "y is not a marked point";
  Subset sx = stabilizer_of(a, w.x);
  if (sx != w.p)
    return "Stab(x) differs from P";
  if (sx.size() < 2)
    return "P is trivial";
  if (image(alpha, w.p) != w.alpha_p)
    return "alpha(P) differs from the recorded subgroup";
  if (w.translation < 0 || w.translation >= g.order() ||
      conjugate(g, w.translation, stabilizer_of(a, w.y)) != w.alpha_p)
    return "translated Stab(y) differs from alpha(P)";
  if (!certificate(a, w.rule, w.x, w.y))
    return "rule certificate fails";
  return {};
}

} // namespace sympres
