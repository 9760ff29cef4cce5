#ifndef SYMPRES_MATGRP_GROUP_HPP
#define SYMPRES_MATGRP_GROUP_HPP

#include <vector>

namespace sympres {

/// A finite group whose elements are the integers 0..order()-1, with 0 the
/// identity. Subgroups are represented as sorted index sets.
class Group {
public:
  virtual ~Group() = default;
  virtual int order() const = 0;
  virtual int mul(int a, int b) const = 0;
  virtual int inv(int a) const = 0;
  virtual const std::vector<int> &generators() const = 0;
};

using Subset = std::vector<int>;

int element_order(const Group &g, int x);
int power(const Group &g, int x, long long e);
/// Subgroup generated by `gens`, sorted.
Subset generate(const Group &g, const std::vector<int> &gens);
bool is_subgroup(const Group &g, const Subset &s);
/// true iff x s x^-1 lies in `sub` for every generator x of g.
bool is_normal(const Group &g, const Subset &sub);
Subset normal_closure(const Group &g, const std::vector<int> &gens);
Subset commutator_subgroup(const Group &g);
Subset center(const Group &g);
/// Orbits under conjugation; the first class is {identity}, the rest are
/// ordered by their smallest element.
std::vector<std::vector<int>> conjugacy_classes(const Group &g);
bool is_cyclic(const Group &g, const Subset &sub);
bool is_abelian(const Group &g);
/// Membership mask of a subset.
std::vector<char> mask_of(const Group &g, const Subset &s);
/// Greedy irredundant generating set drawn from `candidates`.
std::vector<int> reduce_generators(const Group &g, const std::vector<int> &candidates);
int max_element_order(const Group &g);

} // namespace sympres

#endif // SYMPRES_MATGRP_GROUP_HPP
