#pragma once

// Subgroup enumeration and related predicates. Enumeration closes pairs of
// cyclic subgroups, which is complete for groups all of whose subgroups are
// 2-generated (every square-free-order group, and the small test groups).

#include <vector>

#include "hopfpqr/group.hpp"

namespace hopfpqr {

struct Subgroup {
  GroupRef parent;
  std::vector<Elem> members;  // sorted ascending; members[0] == 0

  long long order() const { return static_cast<long long>(members.size()); }
  bool contains(Elem g) const;
  int local_index(Elem g) const;  // position in members, -1 if absent
};

Subgroup whole_subgroup(const GroupRef& g);
Subgroup trivial_subgroup(const GroupRef& g);
Subgroup closure_subgroup(const GroupRef& g, const std::vector<Elem>& gens);

/// The subgroup as a group of its own; local element i is members[i].
GroupRef subgroup_group(const Subgroup& s);

bool is_subgroup(const Subgroup& s);
bool is_normal(const GroupRef& g, const Subgroup& s);
bool is_abelian_subgroup(const Subgroup& s);
bool is_cyclic_subgroup(const Subgroup& s);

/// All subgroups, each once, sorted by (order, member list).
std::vector<Subgroup> subgroups(const GroupRef& g);

std::vector<Subgroup> normal_abelian_subgroups(const GroupRef& g);

/// A complement of a normal subgroup of coprime index (Schur-Zassenhaus);
/// deterministic: the first match in canonical subgroup order.
Subgroup complement(const GroupRef& g, const Subgroup& n);

Subgroup conjugate_subgroup(const GroupRef& g, const Subgroup& s, Elem x);  // x^-1 S x
Subgroup intersect(const Subgroup& a, const Subgroup& b);
bool product_covers(const GroupRef& g, const Subgroup& l, const Subgroup& f);  // L F = G
Subgroup derived_subgroup(const GroupRef& g);

/// Groups the given subgroups into conjugacy classes; returns index lists.
std::vector<std::vector<int>> subgroup_conjugacy_classes(const GroupRef& g,
                                                         const std::vector<Subgroup>& subs);

}  // namespace hopfpqr
