#include "sympres/repchar/mckay.hpp"

#include <algorithm>
#include <functional>

#include "sympres/error.hpp"

namespace sympres {

std::vector<Cyclotomic> natural_character(const FiniteMatrixGroup &h, const CharacterTable &t)
{
  std::vector<Cyclotomic> out;
  for (const auto &cls : t.classes)
    out.push_back(h.element(cls[0]).trace());
  return out;
}

McKayGraph mckay_graph(const CharacterTable &t, const std::vector<Cyclotomic> &std_char)
{
  McKayGraph g;
  int r = t.size();
  g.m.assign(r, std::vector<int>(r, 0));
  g.dims = t.dims;
  for (int i = 0; i < r; ++i) {
    std::vector<Cyclotomic> prod(t.classes.size());
    for (std::size_t c = 0; c < prod.size(); ++c)
      prod[c] = std_char[c] * t.chars[i][c];
    for (int j = 0; j < r; ++j) {
      Cyclotomic ip = t.inner_product(prod, t.chars[j]);
      if (!ip.is_rational() || !ip.rational_value().is_integer())
        throw Error(ErrorCode::NotSelfDualStd, "multiplicity is not an integer");
      g.m[i][j] = static_cast<int>(ip.rational_value().small_num());
    }
  }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (g.m[i][j] != g.m[j][i])
        throw Error(ErrorCode::NotSelfDualStd, "McKay multiplicities are not symmetric");
  std::vector<std::vector<int>> finite;
  for (int i = 1; i < r; ++i) {
    std::vector<int> row;
    for (int j = 1; j < r; ++j)
      row.push_back(g.m[i][j]);
    finite.push_back(std::move(row));
  }
  g.ade_type = dynkin_type(finite);
  return g;
}

std::string dynkin_type(const std::vector<std::vector<int>> &m)
{
  int n = static_cast<int>(m.size());
  if (n == 0)
    return "A0";
  int edges = 0;
  std::vector<int> deg(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (m[i][j] > 1 || (i == j && m[i][j] != 0))
        return "unknown";
      if (m[i][j] && i < j) {
        ++edges;
        ++deg[i];
        ++deg[j];
      }
    }
  // connected tree
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u = 0; u < n; ++u)
      if (m[v][u] && !seen[u]) {
        seen[u] = 1;
        ++count;
        stack.push_back(u);
      }
  }
  if (count != n || edges != n - 1)
    return "unknown";
  int branch = -1;
  for (int v = 0; v < n; ++v) {
    if (deg[v] > 3)
      return "unknown";
    if (deg[v] == 3) {
      if (branch >= 0)
        return "unknown";
      branch = v;
    }
  }
  if (branch < 0)
    return "A" + std::to_string(n);
  std::vector<int> arms;
  for (int u = 0; u < n; ++u) {
    if (!m[branch][u])
      continue;
    int len = 1, prev = branch, cur = u;
    while (deg[cur] == 2) {
      int nxt = -1;
      for (int w = 0; w < n; ++w)
        if (m[cur][w] && w != prev)
          nxt = w;
      prev = cur;
      cur = nxt;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1)
    return "D" + std::to_string(n);
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
    return "E" + std::to_string(n);
  return "unknown";
}

std::vector<std::vector<int>> affine_diagram(char type, int rank)
{
  auto make = [](int n) { return std::vector<std::vector<int>>(n, std::vector<int>(n, 0)); };
  auto edge = [](auto &m, int a, int b) {
    m[a][b] += 1;
    m[b][a] += 1;
  };
  if (type == 'D' && rank == 3)
    type = 'A';
  switch (type) {
  case 'A': {
    auto m = make(rank + 1);
    if (rank == 0) {
      m[0][0] = 2;
      return m;
    }
    if (rank == 1) {
      m[0][1] = m[1][0] = 2;
      return m;
    }
    for (int i = 0; i <= rank; ++i)
      edge(m, i, (i + 1) % (rank + 1));
    return m;
  }
  case 'D': {
    if (rank < 4)
      throw Error(ErrorCode::DimensionMismatch, "D~n needs n >= 3");
    auto m = make(rank + 1);
    edge(m, 0, 2);
    edge(m, 1, 2);
    for (int i = 2; i < rank - 1; ++i)
      edge(m, i, i + 1);
    edge(m, rank - 2, rank);
    return m;
  }
  case 'E': {
    // arms from a center, lengths for E~6, E~7, E~8
    std::vector<int> arms = rank == 6 ? std::vector<int>{2, 2, 2}
                            : rank == 7 ? std::vector<int>{1, 3, 3}
                            : rank == 8 ? std::vector<int>{1, 2, 5}
                                        : std::vector<int>{};
    if (arms.empty())
      throw Error(ErrorCode::DimensionMismatch, "E~n needs n in {6,7,8}");
    auto m = make(rank + 1);
    int next = 1;
    for (int len : arms) {
      int prev = 0;
      for (int k = 0; k < len; ++k) {
        edge(m, prev, next);
        prev = next++;
      }
    }
    // move the extending vertex (end of the longest arm) to index 0
    int ext = rank;
    std::vector<int> perm(rank + 1);
    for (int i = 0; i <= rank; ++i)
      perm[i] = i;
    std::swap(perm[0], perm[ext]);
    auto out = make(rank + 1);
    for (int i = 0; i <= rank; ++i)
      for (int j = 0; j <= rank; ++j)
        out[perm[i]][perm[j]] = m[i][j];
    return out;
  }
  default:
    throw Error(ErrorCode::DimensionMismatch, std::string("unknown diagram type ") + type);
  }
}

bool isomorphic(const std::vector<std::vector<int>> &a, const std::vector<std::vector<int>> &b)
{
  int n = static_cast<int>(a.size());
  if (static_cast<int>(b.size()) != n)
    return false;
  auto signature = [&](const std::vector<std::vector<int>> &m, int v) {
    std::vector<int> s(m[v]);
    std::sort(s.begin(), s.end());
    s.push_back(m[v][v]);
    return s;
  };
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(int)> go = [&](int v) {
    if (v == n)
      return true;
    auto sv = signature(a, v);
    for (int w = 0; w < n; ++w) {
      if (used[w] || signature(b, w) != sv)
        continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        ok = a[v][u] == b[w][map[u]];
      if (!ok || a[v][v] != b[w][w])
        continue;
      map[v] = w;
      used[w] = 1;
      if (go(v + 1))
        return true;
      used[w] = 0;
    }
    map[v] = -1;
    return false;
  };
  return go(0);
}

} // namespace sympres
