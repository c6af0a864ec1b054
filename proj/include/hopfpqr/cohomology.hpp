#pragma once

// Second cohomology with coefficients in the roots of unity, computed two
// ways: a brute-force solver over Z_N (N = |L|) for small groups, and the
// metacyclic closed form. Scalar-valued classes are obtained from the Z_N
// cochain complex by additionally dividing out the coboundaries of N-th
// roots of characters (the kernel of H^2(L, mu_N) -> H^2(L, k^*)).

#include <optional>
#include <utility>
#include <vector>

#include "hopfpqr/group.hpp"
#include "hopfpqr/linalg.hpp"
#include "hopfpqr/numbers.hpp"
#include "hopfpqr/subgroup.hpp"

namespace hopfpqr {

/// Normalized 2-cocycle with values in Z_N (additive exponents of the
/// N-th roots of unity).
struct Cocycle {
  GroupRef group;
  long long modulus = 1;
  std::vector<long long> values;  // n*n row-major, entries in [0, N)

  long long at(Elem g, Elem h) const { return values[static_cast<size_t>(g) * group->order() + h]; }
};

struct CohomologyGroup {
  GroupRef group;
  std::vector<long long> invariant_factors;  // ascending divisor chain, all > 1
  std::vector<Cocycle> representatives;      // one generator per factor
};

inline constexpr long long kH2BruteLimit = 42;

Cocycle zero_cocycle(const GroupRef& l);
bool is_cocycle(const Cocycle& c);
bool is_normalized(const Cocycle& c);
Cocycle add_cocycles(const Cocycle& a, const Cocycle& b, long long scale_b = 1);

/// delta of a 1-cochain (chain[g], chain[0] must be 0), values mod N.
Cocycle coboundary(const GroupRef& l, long long n, const std::vector<long long>& chain);

/// Brute-force H^2(L, k^*) via the normalized cocycle linear system over
/// Z_{|L|} and Smith normal form. Requires |L| <= kH2BruteLimit.
CohomologyGroup h2(const GroupRef& l);

/// Closed form: cyclic of order gcd(lambda, h(m,n,r)); structure only.
CohomologyGroup schur_multiplier_metacyclic(const MetacyclicParams& params);

/// Split metacyclic parameters of a group with cyclic derived subgroup and
/// cyclic complement (every square-free group). nullopt when no such
/// decomposition is found.
std::optional<MetacyclicParams> derive_metacyclic_params(const GroupRef& g);

/// Dispatch: brute force below the limit, closed form for square-free
/// orders above it; throws otherwise.
CohomologyGroup h2_any(const GroupRef& l);

/// All class representatives (including the zero class): one cocycle per
/// element of H^2.
std::vector<Cocycle> all_class_reps(const CohomologyGroup& coh);

/// Restriction to a subgroup of the cocycle's group; result lives on
/// subgroup_group(s), modulus unchanged.
Cocycle restrict_cocycle(const Cocycle& beta, const Subgroup& s);

/// beta^g(h, l) = beta(g h g^-1, g l g^-1) on the same group.
Cocycle conj_transport(const Cocycle& beta, Elem g);

/// Transport of a cocycle living on a subgroup L: result lives on g^-1 L g.
std::pair<Subgroup, Cocycle> conj_transport_subgroup(const Subgroup& l, const Cocycle& beta,
                                                     Elem g);

/// Whether b1 - b2 bounds as a scalar-valued class (coboundary solvability
/// over Z_N together with the fractional character coboundaries).
bool is_cohomologous(const Cocycle& b1, const Cocycle& b2);

/// Twisted group algebra simplicity test: exactly one beta-regular
/// conjugacy class.
bool is_nondegenerate(const Cocycle& beta);

/// Generators of Hom(L, Z_N) as value tables (entry per element).
Mat character_table_generators(const GroupRef& l, long long n);

/// The fractional coboundary of a character: delta(chi~ / N) with values
/// in Z_N; these span the kernel of H^2(L, mu_N) -> H^2(L, k^*).
Cocycle fractional_coboundary(const GroupRef& l, long long n, const Vec& chi);

}  // namespace hopfpqr
