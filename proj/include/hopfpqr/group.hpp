#pragma once

// Finite groups of square-free order (plus the small auxiliary groups the
// test surface needs). A group is held either as an explicit Cayley table
// (order <= table_threshold()) or as structured (i,j,k) triple arithmetic
// derived from a three-generator presentation; both forms can coexist.

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hopfpqr/numbers.hpp"

namespace hopfpqr {

using Elem = int;  // element index, 0 is always the identity

/// Presentation data for  < a, b, c | a^p = b^q = c^r = 1,
///   b a b^-1 = a^alpha, c a c^-1 = a^beta, c b c^-1 = b^gamma >,
/// with elements a^i b^j c^k indexed lexicographically by (i, j, k).
/// Requires alpha == 1 or gamma == 1 so the normal form is consistent.
struct TripleForm {
  long long p = 1, q = 1, r = 1;
  long long alpha = 1, beta = 1, gamma = 1;
};

long long table_threshold();
void set_table_threshold(long long t);

class FiniteGroup;
using GroupRef = std::shared_ptr<const FiniteGroup>;

class FiniteGroup {
 public:
  long long order() const { return order_; }
  bool has_table() const { return !table_.empty(); }
  const std::string& name() const { return name_; }
  const std::string& tag() const { return tag_; }
  const std::optional<TripleForm>& triple_form() const { return triple_; }

  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem pow(Elem a, long long e) const;
  Elem conj(Elem g, Elem x) const { return mul(mul(x, g), inv(x)); }  // x g x^-1
  long long element_order(Elem a) const;

  bool is_abelian() const;
  std::vector<Elem> generators() const;  // a small generating set
  std::map<long long, long long> order_histogram() const;
  std::vector<Elem> center() const;
  std::vector<std::vector<Elem>> conjugacy_classes() const;  // table form only
  std::vector<long long> conjugacy_size_multiset() const;
  std::vector<Elem> centralizer(Elem g) const;

  /// Plain-text Cayley table: one row per element, space-separated indices.
  std::string cayley_text() const;

  // factories
  static GroupRef trivial();
  static GroupRef cyclic(long long n);
  static GroupRef from_mult(long long n, const std::function<Elem(Elem, Elem)>& f,
                            std::string name, std::string tag);
  static GroupRef direct_product(const GroupRef& a, const GroupRef& b);
  static GroupRef metacyclic(const MetacyclicParams& params);
  static GroupRef triple(const TripleForm& form, std::string name, std::string tag);

  /// Memoized subgroup member lists (filled by subgroups()).
  std::shared_ptr<const std::vector<std::vector<Elem>>> subgroup_cache() const;
  void set_subgroup_cache(std::shared_ptr<const std::vector<std::vector<Elem>>> c) const;

 private:
  FiniteGroup() = default;
  void finish_table_init(bool check_axioms);
  Elem triple_mul(Elem a, Elem b) const;

  long long order_ = 1;
  std::vector<int> table_;  // order x order, row-major; empty when structured-only
  std::vector<int> inverse_;
  std::optional<TripleForm> triple_;
  std::string name_ = "1";
  std::string tag_ = "trivial";
  // cached power tables for triple arithmetic
  std::vector<long long> alpha_pow_, beta_pow_, gamma_pow_;
  mutable std::mutex cache_mu_;
  mutable std::shared_ptr<const std::vector<std::vector<Elem>>> subgroups_;
};

/// Canonical label of the conjugation action for triple groups with
/// alpha == 1 and beta, gamma of exact order r: the discrete log of gamma
/// relative to beta, normalised over the choice of the order-r generator.
/// Equal labels <=> isomorphic within that family.
std::optional<long long> triple_action_class(const FiniteGroup& g);

}  // namespace hopfpqr
