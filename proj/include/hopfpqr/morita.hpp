#pragma once

// Categorical Morita classification of the dimension-pqr Hopf catalog:
// the normal-abelian-subgroup neighbor construction (dual group semidirect
// quotient), the resulting partition into equivalence classes, and the
// structured-arithmetic variant for orders above the table threshold.

#include <string>
#include <vector>

#include "hopfpqr/fiber.hpp"
#include "hopfpqr/group.hpp"
#include "hopfpqr/subgroup.hpp"

namespace hopfpqr {

struct MoritaWitness {
  GroupRef source;
  Subgroup H;  // normal abelian
  Subgroup K;  // complement model of the quotient
  GroupRef target;
  bool mu_trivial = true;
  bool kappa_trivial = true;
  bool varpi_trivial = true;
};

/// For each normal abelian subgroup H of G: the group dual(H) x| (G/H)
/// built through the character dual action, together with a witness.
/// The class is trivial on H (square-free), the extension splits, so the
/// obstruction cocycle is trivial throughout.
std::vector<MoritaWitness> morita_neighbors(const GroupRef& g);

/// The neighbor target for the order-q normal subgroup of a G4-family
/// member; at odd r it lands on the family member with negated exponent.
GroupRef gtilde(const GroupRef& g4, long long q);

/// Structured-arithmetic neighbors of a G4-family triple form (H running
/// over the order-p, order-q and order-pq normal subgroups). Exponent
/// derivations are cross-checked against the table construction in tests.
struct TripleNeighbor {
  TripleForm target;
  std::string h_desc;
};
std::vector<TripleNeighbor> morita_neighbors_structured(const TripleForm& g4);

struct MoritaPartition {
  long long p = 0, q = 0, r = 0;
  std::vector<HopfDescriptor> nodes;
  std::vector<std::vector<int>> classes;  // node index lists, each sorted
  struct Edge {
    int a, b;
    std::string witness;
  };
  std::vector<Edge> edges;
  std::vector<GroupRef> catalog;
};

MoritaPartition morita_partition(long long p, long long q, long long r);

/// True iff the class of k[Z_pqr] contains exactly it and its dual.
bool abelian_isolation_check(const MoritaPartition& partition);

}  // namespace hopfpqr
