#pragma once

// Matched pairs of groups, bicrossed and semidirect products, and character
// groups of cyclic groups with their exact pairing.

#include <string>
#include <vector>

#include "hopfpqr/group.hpp"
#include "hopfpqr/subgroup.hpp"

namespace hopfpqr {

/// Mutual actions of a pair (F, Gamma):
///   rhd[s][x] = s |> x in F,   lhd[s][x] = s <| x in Gamma,
/// for s in Gamma, x in F. <| is a right action of F on the set Gamma,
/// |> a left action of Gamma on the set F, tied by the two compatibility laws
///   s |> (xy) = (s |> x)((s <| x) |> y),  (st) <| x = (s <| (t |> x))(t <| x).
struct MatchedPair {
  GroupRef F;
  GroupRef Gamma;
  std::vector<std::vector<Elem>> rhd;  // |Gamma| x |F| -> F
  std::vector<std::vector<Elem>> lhd;  // |Gamma| x |F| -> Gamma
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> issues;
};

ValidationReport validate_matched_pair(const MatchedPair& mp);

MatchedPair trivial_matched_pair(const GroupRef& f, const GroupRef& gamma);

/// Group on F x Gamma with (x,s)(y,t) = (x (s |> y), (s <| y) t);
/// element (x, s) has index x * |Gamma| + s.
GroupRef bicrossed_product(const MatchedPair& mp);

/// Group on K x A with (x,s)(y,t) = (x y, (s <| y) t) for a right action
/// act[s][y] of K on the abelian group A by automorphisms (checked).
/// Element (x, s) has index x * |A| + s.
GroupRef semidirect_product(const GroupRef& a, const GroupRef& k,
                            const std::vector<std::vector<Elem>>& act);

/// Dual of a cyclic group with the exact pairing <rho_j, h0^v> = j v / n mod 1.
struct CharacterGroup {
  GroupRef source;
  GroupRef dual;                // Z_n model; character j is rho_j
  Elem generator;               // h0, a fixed generator of the source
  std::vector<long long> dlog;  // source element -> exponent w.r.t. h0

  Rational pairing(Elem rho, Elem h) const;

  /// Dual action table from a conjugation table: conj[x][h] = x h x^-1
  /// (local indices; x ranges over some acting group). Returns act[rho][x]
  /// with <rho^x, h> = <rho, x h x^-1>, a right action on the dual.
  std::vector<std::vector<Elem>> dual_action(
      const std::vector<std::vector<Elem>>& conj) const;
};

CharacterGroup character_group(const GroupRef& h);  // abelian (cyclic) only

/// The matched pair of A_p(first; second): Gamma = Z_p x| Z_first
/// (nonabelian, smallest order-first exponent), F = Z_second acting on the
/// order-p generator by the smallest exponent of order `second` mod p.
MatchedPair a_family_matched_pair(long long p, long long first, long long second);

}  // namespace hopfpqr
