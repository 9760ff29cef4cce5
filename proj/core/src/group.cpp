#include "sympres/matgrp/group.hpp"

#include <algorithm>
#include <deque>

namespace sympres {

int element_order(const Group &g, int x)
{
  int n = 1;
  int y = x;
  while (y != 0) {
    y = g.mul(y, x);
    ++n;
  }
  return n;
}

int power(const Group &g, int x, long long e)
{
  if (e < 0) {
    x = g.inv(x);
    e = -e;
  }
  int result = 0, base = x;
  while (e > 0) {
    if (e & 1)
      result = g.mul(result, base);
    e >>= 1;
    if (e)
      base = g.mul(base, base);
  }
  return result;
}

std::vector<char> mask_of(const Group &g, const Subset &s)
{
  std::vector<char> m(g.order(), 0);
  for (int x : s)
    m[x] = 1;
  return m;
}

Subset generate(const Group &g, const std::vector<int> &gens)
{
  std::vector<char> seen(g.order(), 0);
  Subset out{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (int s : gens) {
      int y = g.mul(out[i], s);
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_subgroup(const Group &g, const Subset &s)
{
  if (s.empty() || s[0] != 0)
    return false;
  auto m = mask_of(g, s);
  for (int a : s)
    for (int b : s)
      if (!m[g.mul(a, b)])
        return false;
  return true;
}

bool is_normal(const Group &g, const Subset &sub)
{
  auto m = mask_of(g, sub);
  for (int x : g.generators()) {
    int xi = g.inv(x);
    for (int h : sub)
      if (!m[g.mul(g.mul(x, h), xi)])
        return false;
  }
  return true;
}

Subset normal_closure(const Group &g, const std::vector<int> &gens)
{
  std::vector<char> seen(g.order(), 0);
  std::vector<int> conj_gens;
  // Close the generator set under conjugation, then generate.
  std::deque<int> todo(gens.begin(), gens.end());
  while (!todo.empty()) {
    int x = todo.front();
    todo.pop_front();
    if (seen[x])
      continue;
    seen[x] = 1;
    conj_gens.push_back(x);
    for (int s : g.generators()) {
      int y = g.mul(g.mul(g.inv(s), x), s);
      if (!seen[y])
        todo.push_back(y);
    }
  }
  return generate(g, conj_gens);
}

Subset commutator_subgroup(const Group &g)
{
  std::vector<int> comms;
  const auto &gens = g.generators();
  for (int a : gens)
    for (int b : gens) {
      int c = g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)));
      if (c != 0)
        comms.push_back(c);
    }
  return normal_closure(g, comms);
}

Subset center(const Group &g)
{
  Subset z;
  for (int x = 0; x < g.order(); ++x) {
    bool central = true;
    for (int s : g.generators())
      if (g.mul(x, s) != g.mul(s, x)) {
        central = false;
        break;
      }
    if (central)
      z.push_back(x);
  }
  return z;
}

std::vector<std::vector<int>> conjugacy_classes(const Group &g)
{
  int n = g.order();
  std::vector<int> cls(n, -1);
  std::vector<std::vector<int>> out;
  std::vector<int> ginv;
  for (int s : g.generators())
    ginv.push_back(g.inv(s));
  for (int x = 0; x < n; ++x) {
    if (cls[x] >= 0)
      continue;
    int id = static_cast<int>(out.size());
    std::vector<int> orbit{x};
    cls[x] = id;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (std::size_t k = 0; k < ginv.size(); ++k) {
        int y = g.mul(g.mul(ginv[k], orbit[i]), g.generators()[k]);
        if (cls[y] < 0) {
          cls[y] = id;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

bool is_cyclic(const Group &g, const Subset &sub)
{
  int n = static_cast<int>(sub.size());
  for (int x : sub)
    if (element_order(g, x) == n)
      return true;
  return false;
}

bool is_abelian(const Group &g)
{
  const auto &gens = g.generators();
  for (int a : gens)
    for (int b : gens)
      if (g.mul(a, b) != g.mul(b, a))
        return false;
  return true;
}

std::vector<int> reduce_generators(const Group &g, const std::vector<int> &candidates)
{
  std::vector<int> chosen;
  Subset current{0};
  for (int c : candidates) {
    if (std::binary_search(current.begin(), current.end(), c))
      continue;
    chosen.push_back(c);
    current = generate(g, chosen);
    if (static_cast<int>(current.size()) == g.order())
      break;
  }
  return chosen;
}

int max_element_order(const Group &g)
{
  int best = 1;
  for (int x = 0; x < g.order(); ++x)
    best = std::max(best, element_order(g, x));
  return best;
}

} // namespace sympres
