#pragma once

// Fiber functors on C(G, 1, F, 1) by the subgroup-plus-cocycle criterion,
// conjugacy classes of non-degenerate pairs, and Galois-object counts for
// the dimension-pqr Hopf catalog.

#include <string>
#include <vector>

#include "hopfpqr/cohomology.hpp"
#include "hopfpqr/group.hpp"
#include "hopfpqr/products.hpp"
#include "hopfpqr/subgroup.hpp"

namespace hopfpqr {

/// C(G, omega, F, alpha) with omega = 1 and alpha = 1 (the whole scope).
struct GTCategoryData {
  GroupRef G;
  Subgroup F;
};
GTCategoryData make_category(const GroupRef& g, const Subgroup& f);

struct FiberFunctorWitness {
  Subgroup L;
  Cocycle beta;  // class representative on subgroup_group(L)
};

/// Equivalence classes of fiber functors: subgroups L with L F = G carrying
/// a class whose restriction to F meet L is non-degenerate, modulo
/// simultaneous conjugation and cocycle transport.
std::vector<FiberFunctorWitness> fiber_functors(const GTCategoryData& cat);

/// Conjugacy classes of pairs (S, alpha) with alpha non-degenerate on S.
std::vector<FiberFunctorWitness> nondeg_pairs(const GroupRef& g);

struct HopfDescriptor {
  enum class Kind { GroupAlgebra, DualGroupAlgebra, AbelianExt };
  Kind kind = Kind::GroupAlgebra;
  GroupRef group;  // for the group-algebra kinds
  long long p = 0, first = 0, second = 0;  // A_p(first; second)

  std::string name() const;
  static HopfDescriptor group_algebra(const GroupRef& g);
  static HopfDescriptor dual_group_algebra(const GroupRef& g);
  static HopfDescriptor abelian_ext(long long p, long long first, long long second);
};

/// The group F >< Gamma underlying Rep(A_p(first; second)), with F embedded
/// as the second tensor factor; returns the pair (group, F-subgroup).
std::pair<GroupRef, Subgroup> a_family_category_group(long long p, long long first,
                                                      long long second);

/// Number of Galois objects: group-algebra kinds count non-degenerate pairs
/// of the group; abelian extensions count fiber functors on the
/// representation category of the dual.
long long galois_object_count(const HopfDescriptor& h);

}  // namespace hopfpqr
