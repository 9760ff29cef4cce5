#ifndef SYMPRES_MATGRP_GROUP_HOM_HPP
#define SYMPRES_MATGRP_GROUP_HOM_HPP

#include <functional>
#include <optional>
#include <vector>

#include "sympres/matgrp/group.hpp"
#include "sympres/matgrp/table_group.hpp"

namespace sympres {

/// Validated automorphism of a Group, stored as the full element map.
struct Automorphism {
  std::vector<int> map;
  /// Images of the group's generators() in order.
  std::vector<int> gen_images;
  bool involution = false;

  int operator()(int x) const { return map[x]; }
  bool is_identity() const;
};

/// Extends generator images to the whole group and validates it: the map
/// must respect every product x*s (x any element, s a generator), every
/// product x*y when the group has at most 512 elements, and be bijective.
/// Raises NotAHomomorphism, NotBijective, or NotInvolution when
/// `require_involution` is set and the square is not the identity.
Automorphism automorphism_from_images(const Group &g, const std::vector<int> &images,
                                      bool require_involution = false);

/// Same validation, with images prescribed on an arbitrary generating list.
Automorphism automorphism_from_map(const Group &g, const std::vector<int> &gens, const std::vector<int> &images,
                                   bool require_involution = false);

Automorphism identity_automorphism(const Group &g);
Automorphism compose(const Group &g, const Automorphism &a, const Automorphism &b);
/// x -> c x c^-1.
Automorphism inner_automorphism(const Group &g, int c);
bool is_inner(const Group &g, const Automorphism &a);
/// a(N) must equal N; raises NotAHomomorphism otherwise.
Automorphism induced_automorphism(const Group &parent, const QuotientGroup &q, const Automorphism &a);

/// Every automorphism, enumerated by generator-image tuples in
/// lexicographic order over an irredundant generating set.
void for_each_automorphism(const Group &g, const std::function<bool(const Automorphism &)> &visit);
/// First automorphism (in the enumeration order) satisfying `pred`.
std::optional<Automorphism> find_automorphism(const Group &g,
                                              const std::function<bool(const Automorphism &)> &pred);

} // namespace sympres

#endif // SYMPRES_MATGRP_GROUP_HOM_HPP
