#pragma once

// Finite-dimensional Hopf algebras as exact structure constants over
// root-of-unity scalars: the smash products k^Gamma # k[F] of split abelian
// extensions, duals, the axiom verifier, and representation-dimension
// invariants.

#include <optional>
#include <string>
#include <vector>

#include "hopfpqr/group.hpp"
#include "hopfpqr/numbers.hpp"
#include "hopfpqr/products.hpp"

namespace hopfpqr {

/// Exact scalar: zero, or the root of unity exp(2 pi i * angle).
struct Scalar {
  bool is_zero = true;
  Rational angle;

  static Scalar zero() { return Scalar{}; }
  static Scalar one() { return Scalar{false, Rational{0, 1}}; }
  static Scalar root(const Rational& r) { return Scalar{false, r}; }
  Scalar times(const Scalar& o) const;
  bool operator==(const Scalar& o) const;
  std::string str() const;
};

struct Term {
  int basis;
  Scalar coeff;
};
struct PairTerm {
  int left, right;
  Scalar coeff;
};

struct AxiomReport {
  bool ok = true;
  std::vector<std::string> failures;
};

/// Multiplication, comultiplication, (co)unit and antipode tables on a
/// fixed basis. For k^Gamma # k[F] the basis is e_g # x with
/// index g * |F| + x.
struct HopfStructureConstants {
  int dim = 0;
  std::string name;
  std::vector<std::vector<Term>> mult;      // dim*dim rows, row (a,b) = a*b
  std::vector<std::vector<PairTerm>> comult;  // per basis element
  std::vector<Term> unit;
  std::vector<Scalar> counit;               // per basis element
  std::vector<std::vector<Term>> antipode;  // per basis element

  // extension provenance, set by smash_product and transposed by dual_hopf
  GroupRef gamma, f;
  std::vector<std::vector<Elem>> lhd, rhd;
  bool has_extension_data = false;
  bool dualized = false;

  const std::vector<Term>& prod(int a, int b) const {
    return mult[static_cast<size_t>(a) * dim + b];
  }
};

/// Smash product k^Gamma # k[F] of a matched pair with trivial extension
/// cocycles; verifies every axiom before returning.
HopfStructureConstants smash_product(const MatchedPair& mp);

/// A_p(first; second) = k^(Z_p x| Z_first) # k[Z_second]; requires
/// first * second to divide p - 1.
HopfStructureConstants build_A(long long p, long long first, long long second);

/// Exhaustive checks: associativity, unit, coassociativity, counit,
/// multiplicativity of the coproduct and counit, antipode convolution
/// identities. Failures carry witness indices.
AxiomReport verify_hopf_axioms(const HopfStructureConstants& h);

/// Transpose of all tables; an involution.
HopfStructureConstants dual_hopf(const HopfStructureConstants& h);

/// Multiset of irreducible representation dimensions of a smash product
/// (orbits of F on Gamma; an orbit with stabilizer S contributes
/// |orbit| * d over the irreducible dimensions d of S).
std::vector<long long> irrep_dimension_vector(const HopfStructureConstants& h);

/// Irreducible dimensions of a group algebra (abelian, or cyclic-by-cyclic
/// via its split metacyclic decomposition).
std::vector<long long> group_irrep_dims(const GroupRef& g);

bool is_commutative(const HopfStructureConstants& h);
bool is_cocommutative(const HopfStructureConstants& h);

/// One line per nonzero structure constant: "m a b c num/den" for
/// multiplication and "d a b c num/den" for comultiplication.
std::string tensor_listing_text(const HopfStructureConstants& h);

}  // namespace hopfpqr
