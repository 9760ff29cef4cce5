#include "sympres/matgrp/matrix_group.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <mutex>
#include <unordered_map>

#include "sympres/error.hpp"

namespace sympres {

namespace {
constexpr int kMulTableLimit = 4096;
}

struct FiniteMatrixGroup::Impl {
  int dim = 0;
  int field_order = 1;
  std::vector<Matrix> elements;
  std::unordered_map<std::string, int> index;
  std::vector<int> gens;
  std::vector<int> genset;     // element index of each BFS generator
  std::vector<int> genset_inv; // position in genset of the inverse
  std::vector<int> succ;       // succ[x * S + s] = x * genset[s]
  std::vector<int> parent;
  std::vector<int> pgen;
  std::vector<int> invs;

  mutable std::once_flag table_once;
  mutable std::vector<std::uint16_t> table;

  int S() const { return static_cast<int>(genset.size()); }

  int walk(int a, int b) const
  {
    int stack[512];
    int depth = 0;
    std::vector<int> spill;
    for (int x = b; x != 0; x = parent[x]) {
      if (depth < 512)
        stack[depth++] = pgen[x];
      else
        spill.push_back(pgen[x]);
    }
    for (auto it = spill.rbegin(); it != spill.rend(); ++it)
      a = succ[static_cast<std::size_t>(a) * S() + *it];
    while (depth > 0)
      a = succ[static_cast<std::size_t>(a) * S() + stack[--depth]];
    return a;
  }

  void build_table() const
  {
    int n = static_cast<int>(elements.size());
    table.assign(static_cast<std::size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a) {
      std::uint16_t *row = &table[static_cast<std::size_t>(a) * n];
      row[0] = static_cast<std::uint16_t>(a);
      // parent[b] < b in BFS order, so the row fills left to right.
      for (int b = 1; b < n; ++b)
        row[b] = static_cast<std::uint16_t>(succ[static_cast<std::size_t>(row[parent[b]]) * S() + pgen[b]]);
    }
  }
};

int default_order_bound()
{
  if (const char *env = std::getenv("SYMPRES_MAX_ORDER")) {
    char *end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < (1L << 30))
      return static_cast<int>(v);
  }
  return 20000;
}

FiniteMatrixGroup FiniteMatrixGroup::closure(const std::vector<Matrix> &generators, int bound)
{
  if (generators.empty())
    throw Error(ErrorCode::DimensionMismatch, "closure needs at least one generator");
  int dim = generators[0].dim();
  std::int64_t order = 1;
  for (const auto &g : generators) {
    if (g.dim() != dim)
      throw Error(ErrorCode::DimensionMismatch, "generators have different dimensions");
    order = lcm64(order, g.field_order());
  }
  FiniteMatrixGroup G;
  G.p_ = std::make_shared<Impl>();
  Impl &p = *G.p_;
  p.dim = dim;
  p.field_order = static_cast<int>(order);
  const int M = p.field_order;

  Matrix id = Matrix::identity(dim).lifted(M);
  p.elements.push_back(id);
  p.index.emplace(id.key(M), 0);
  p.parent.push_back(0);
  p.pgen.push_back(-1);

  // Generator matrices, their inverses (as powers), deduplicated by key.
  std::vector<Matrix> gmats;
  std::unordered_map<std::string, int> gkeys;
  std::vector<int> input_pos;
  auto add_gen = [&](const Matrix &m) {
    std::string k = m.key(M);
    auto it = gkeys.find(k);
    if (it != gkeys.end())
      return it->second;
    int pos = static_cast<int>(gmats.size());
    gkeys.emplace(std::move(k), pos);
    gmats.push_back(m);
    return pos;
  };
  for (const auto &g0 : generators) {
    Matrix g = g0.lifted(M);
    if (g.is_identity())
      continue;
    int pos = add_gen(g);
    input_pos.push_back(pos);
  }
  std::size_t base = gmats.size();
  std::vector<int> inv_pos(base, -1);
  for (std::size_t i = 0; i < base; ++i) {
    Matrix prev = gmats[i];
    Matrix cur = prev;
    int steps = 1;
    while (!cur.is_identity()) {
      prev = cur;
      cur = cur * gmats[i];
      if (++steps > bound)
        throw Error(ErrorCode::BoundExceeded,
                    "generator order exceeds bound " + std::to_string(bound));
    }
    // prev = g^(ord-1) = g^-1 (for ord = 1 the generator was skipped).
    inv_pos[i] = add_gen(prev);
  }
  // Inverses of the inverse generators close the set.
  inv_pos.resize(gmats.size(), -1);
  for (std::size_t i = 0; i < base; ++i)
    inv_pos[inv_pos[i]] = static_cast<int>(i);

  int S = static_cast<int>(gmats.size());
  for (std::size_t x = 0; x < p.elements.size(); ++x) {
    for (int s = 0; s < S; ++s) {
      Matrix y = p.elements[x] * gmats[s];
      std::string k = y.key(M);
      auto it = p.index.find(k);
      int yi;
      if (it == p.index.end()) {
        yi = static_cast<int>(p.elements.size());
        if (yi >= bound)
          throw Error(ErrorCode::BoundExceeded,
                      "closure exceeds bound " + std::to_string(bound));
        p.index.emplace(std::move(k), yi);
        p.elements.push_back(std::move(y));
        p.parent.push_back(static_cast<int>(x));
        p.pgen.push_back(s);
      } else {
        yi = it->second;
      }
      p.succ.push_back(yi);
    }
  }
  for (int s = 0; s < S; ++s)
    p.genset.push_back(p.succ[static_cast<std::size_t>(0) * S + s]);
  p.genset_inv = inv_pos;
  for (int pos : input_pos) {
    int e = p.genset[pos];
    bool dup = false;
    for (int g : p.gens)
      dup = dup || g == e;
    if (!dup)
      p.gens.push_back(e);
  }

  int n = static_cast<int>(p.elements.size());
  p.invs.assign(n, 0);
  for (int x = 1; x < n; ++x) {
    // x = s_1 ... s_k  =>  x^-1 = s_k^-1 ... s_1^-1
    int y = 0;
    for (int z = x; z != 0; z = p.parent[z])
      y = p.succ[static_cast<std::size_t>(y) * S + p.genset_inv[p.pgen[z]]];
    p.invs[x] = y;
  }
  return G;
}

int FiniteMatrixGroup::order() const { return static_cast<int>(p_->elements.size()); }

int FiniteMatrixGroup::mul(int a, int b) const
{
  int n = order();
  if (n <= kMulTableLimit) {
    std::call_once(p_->table_once, [this] { p_->build_table(); });
    return p_->table[static_cast<std::size_t>(a) * n + b];
  }
  return p_->walk(a, b);
}

int FiniteMatrixGroup::inv(int a) const { return p_->invs[a]; }
const std::vector<int> &FiniteMatrixGroup::generators() const { return p_->gens; }
int FiniteMatrixGroup::dim() const { return p_->dim; }
int FiniteMatrixGroup::field_order() const { return p_->field_order; }
const Matrix &FiniteMatrixGroup::element(int i) const { return p_->elements[i]; }
const std::vector<Matrix> &FiniteMatrixGroup::elements() const { return p_->elements; }

bool FiniteMatrixGroup::has_mul_table() const
{
  return !p_->table.empty();
}

std::optional<int> FiniteMatrixGroup::find(const Matrix &m) const
{
  if (m.dim() != p_->dim)
    return std::nullopt;
  const int M = p_->field_order;
  std::string key;
  key.push_back(static_cast<char>(m.dim()));
  for (const auto &x : m.entries()) {
    if (x.is_zero() || x.order() == M) {
      x.append_key(key);
    } else if (M % x.order() == 0) {
      x.lifted(M).append_key(key);
    } else {
      try {
        x.descended(M).append_key(key);
      } catch (const Error &) {
        return std::nullopt;
      }
    }
  }
  auto it = p_->index.find(key);
  if (it == p_->index.end())
    return std::nullopt;
  return it->second;
}

int FiniteMatrixGroup::index_of(const Matrix &m) const
{
  auto i = find(m);
  if (!i)
    throw Error(ErrorCode::NotAMember, "matrix is not an element of the group");
  return *i;
}

FiniteMatrixGroup FiniteMatrixGroup::subgroup(const std::vector<int> &gens) const
{
  std::vector<Matrix> mats;
  for (int g : gens)
    mats.push_back(element(g));
  if (mats.empty())
    mats.push_back(element(0));
  return closure(mats, order());
}

Subset FiniteMatrixGroup::embed(const FiniteMatrixGroup &other) const
{
  Subset s;
  s.reserve(other.order());
  for (const auto &m : other.elements()) {
    auto i = find(m);
    if (!i)
      throw Error(ErrorCode::NotASubgroup, "group is not contained in the ambient group");
    s.push_back(*i);
  }
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<int> FiniteMatrixGroup::class_sizes() const
{
  std::vector<int> out;
  for (const auto &c : conjugacy_classes(*this))
    out.push_back(static_cast<int>(c.size()));
  return out;
}

int element_order(const FiniteMatrixGroup &g, const Matrix &m)
{
  return element_order(static_cast<const Group &>(g), g.index_of(m));
}

bool is_normal(const FiniteMatrixGroup &h, const FiniteMatrixGroup &g)
{
  Subset s = g.embed(h);
  return is_normal(static_cast<const Group &>(g), s);
}

FiniteMatrixGroup commutator_subgroup_group(const FiniteMatrixGroup &g)
{
  Subset c = commutator_subgroup(static_cast<const Group &>(g));
  return g.subgroup(reduce_generators(g, c));
}

} // namespace sympres
