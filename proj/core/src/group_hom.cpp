#include "sympres/matgrp/group_hom.hpp"

#include "sympres/error.hpp"

namespace sympres {

namespace {

constexpr int kFullCheckLimit = 512;

enum class ExtendStatus { Ok, NotHom, NotBijective };

// BFS extension of gens[k] -> imgs[k]; validates every x*gens[k].
ExtendStatus extend(const Group &g, const std::vector<int> &gens, const std::vector<int> &imgs,
                    std::vector<int> &map)
{
  int n = g.order();
  map.assign(n, -1);
  map[0] = 0;
  std::vector<int> queue{0};
  queue.reserve(n);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    int x = queue[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      int y = g.mul(x, gens[k]);
      int img = g.mul(map[x], imgs[k]);
      if (map[y] < 0) {
        map[y] = img;
        queue.push_back(y);
      } else if (map[y] != img) {
        return ExtendStatus::NotHom;
      }
    }
  }
  if (static_cast<int>(queue.size()) != n)
    return ExtendStatus::NotHom; // generators do not generate
  std::vector<char> hit(n, 0);
  for (int v : map) {
    if (hit[v])
      return ExtendStatus::NotBijective;
    hit[v] = 1;
  }
  return ExtendStatus::Ok;
}

bool is_involution_map(const std::vector<int> &map)
{
  for (std::size_t x = 0; x < map.size(); ++x)
    if (map[map[x]] != static_cast<int>(x))
      return false;
  return true;
}

Automorphism finish(const Group &g, std::vector<int> map)
{
  Automorphism a;
  a.map = std::move(map);
  for (int s : g.generators())
    a.gen_images.push_back(a.map[s]);
  a.involution = is_involution_map(a.map);
  return a;
}

} // namespace

bool Automorphism::is_identity() const
{
  for (std::size_t x = 0; x < map.size(); ++x)
    if (map[x] != static_cast<int>(x))
      return false;
  return true;
}

Automorphism automorphism_from_map(const Group &g, const std::vector<int> &gens, const std::vector<int> &images,
                                   bool require_involution)
{
  if (images.size() != gens.size())
    throw Error(ErrorCode::NotAHomomorphism, "one image per generator is required");
  for (std::size_t k = 0; k < gens.size(); ++k)
    if (gens[k] < 0 || gens[k] >= g.order() || images[k] < 0 || images[k] >= g.order())
      throw Error(ErrorCode::NotAHomomorphism, "generator or image out of range");
  std::vector<int> map;
  switch (extend(g, gens, images, map)) {
  case ExtendStatus::NotHom:
    throw Error(ErrorCode::NotAHomomorphism, "generator images do not extend to a homomorphism");
  case ExtendStatus::NotBijective:
    throw Error(ErrorCode::NotBijective, "homomorphism is not bijective");
  case ExtendStatus::Ok:
    break;
  }
  int n = g.order();
  if (n <= kFullCheckLimit)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (map[g.mul(x, y)] != g.mul(map[x], map[y]))
          throw Error(ErrorCode::NotAHomomorphism, "map is not multiplicative");
  Automorphism a = finish(g, std::move(map));
  if (require_involution && !a.involution)
    throw Error(ErrorCode::NotInvolution, "automorphism is not an involution");
  return a;
}

Automorphism automorphism_from_images(const Group &g, const std::vector<int> &images,
                                      bool require_involution)
{
  return automorphism_from_map(g, g.generators(), images, require_involution);
}

Automorphism identity_automorphism(const Group &g)
{
  std::vector<int> map(g.order());
  for (int x = 0; x < g.order(); ++x)
    map[x] = x;
  return finish(g, std::move(map));
}

Automorphism compose(const Group &g, const Automorphism &a, const Automorphism &b)
{
  std::vector<int> map(g.order());
  for (int x = 0; x < g.order(); ++x)
    map[x] = a.map[b.map[x]];
  return finish(g, std::move(map));
}

Automorphism inner_automorphism(const Group &g, int c)
{
  int ci = g.inv(c);
  std::vector<int> map(g.order());
  for (int x = 0; x < g.order(); ++x)
    map[x] = g.mul(g.mul(c, x), ci);
  return finish(g, std::move(map));
}

bool is_inner(const Group &g, const Automorphism &a)
{
  for (int c = 0; c < g.order(); ++c) {
    int ci = g.inv(c);
    bool ok = true;
    for (int s : g.generators())
      if (g.mul(g.mul(c, s), ci) != a.map[s]) {
        ok = false;
        break;
      }
    if (ok)
      return true;
  }
  return false;
}

Automorphism induced_automorphism(const Group &parent, const QuotientGroup &q, const Automorphism &a)
{
  (void)parent;
  for (int h : q.normal())
    if (q.project(a.map[h]) != 0)
      throw Error(ErrorCode::NotAHomomorphism, "automorphism does not preserve the normal subgroup");
  std::vector<int> map(q.order());
  for (int c = 0; c < q.order(); ++c)
    map[c] = q.project(a.map[q.representative(c)]);
  return automorphism_from_images(q, [&] {
    std::vector<int> imgs;
    for (int s : q.generators())
      imgs.push_back(map[s]);
    return imgs;
  }());
}

void for_each_automorphism(const Group &g, const std::function<bool(const Automorphism &)> &visit)
{
  std::vector<int> gens = reduce_generators(g, g.generators());
  int n = g.order();
  std::vector<int> orders(n);
  for (int x = 0; x < n; ++x)
    orders[x] = element_order(g, x);
  std::vector<std::vector<int>> cands(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (int x = 0; x < n; ++x)
      if (orders[x] == orders[gens[k]])
        cands[k].push_back(x);
  if (gens.empty()) {
    visit(identity_automorphism(g));
    return;
  }
  std::vector<std::size_t> pos(gens.size(), 0);
  std::vector<int> imgs(gens.size()), map;
  while (true) {
    for (std::size_t k = 0; k < gens.size(); ++k)
      imgs[k] = cands[k][pos[k]];
    if (extend(g, gens, imgs, map) == ExtendStatus::Ok) {
      if (!visit(finish(g, map)))
        return;
    }
    std::size_t k = gens.size();
    while (k > 0) {
      --k;
      if (++pos[k] < cands[k].size())
        break;
      pos[k] = 0;
      if (k == 0)
        return;
    }
  }
}

std::optional<Automorphism> find_automorphism(const Group &g,
                                              const std::function<bool(const Automorphism &)> &pred)
{
  std::optional<Automorphism> found;
  for_each_automorphism(g, [&](const Automorphism &a) {
    if (pred(a)) {
      found = a;
      return false;
    }
    return true;
  });
  return found;
}

} // namespace sympres
