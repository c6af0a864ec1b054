#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hopfpqr/catalog.hpp"
#include "hopfpqr/isomorphism.hpp"
#include "hopfpqr/products.hpp"
#include "hopfpqr/subgroup.hpp"

using namespace hopfpqr;

namespace {

// independent oracle: count subgroups of a tiny group by subset enumeration
long long subgroup_count_brute(const GroupRef& g) {
  long long n = g->order();
  REQUIRE(n <= 16);
  long long count = 0;
  for (unsigned long long mask = 1; mask < (1ULL << n); ++mask) {
    if (!(mask & 1)) continue;  // must contain the identity
    bool closed = true;
    for (Elem a = 0; a < n && closed; ++a) {
      if (!(mask >> a & 1)) continue;
      for (Elem b = 0; b < n && closed; ++b) {
        if (!(mask >> b & 1)) continue;
        closed &= (mask >> g->mul(a, b) & 1) != 0;
      }
    }
    if (closed) ++count;
  }
  return count;
}

GroupRef s3() { return FiniteGroup::metacyclic(MetacyclicParams(3, 2, 2, 2)); }

}  // namespace

TEST_CASE("construction and basic arithmetic") {
  auto z6 = FiniteGroup::cyclic(6);
  CHECK(z6->order() == 6);
  CHECK(z6->mul(4, 5) == 3);
  CHECK(z6->inv(2) == 4);
  CHECK(z6->element_order(1) == 6);
  CHECK(z6->is_abelian());

  auto g = s3();
  CHECK(g->order() == 6);
  CHECK_FALSE(g->is_abelian());
  CHECK(g->center().size() == 1);
  CHECK(g->conjugacy_size_multiset() == std::vector<long long>{1, 2, 3});

  // presentations with inconsistent exponents are rejected
  CHECK_THROWS(FiniteGroup::metacyclic(MetacyclicParams(7, 3, 3, 1)));
  CHECK_THROWS(FiniteGroup::triple(TripleForm{7, 3, 2, 2, 2, 2}, "x", "x"));
}

TEST_CASE("cayley table export") {
  auto z3 = FiniteGroup::cyclic(3);
  CHECK(z3->cayley_text() == "0 1 2\n1 2 0\n2 0 1\n");
}

TEST_CASE("subgroup enumeration") {
  auto z6 = FiniteGroup::cyclic(6);
  CHECK(subgroups(z6).size() == 4);
  CHECK(subgroups(z6).size() == static_cast<size_t>(subgroup_count_brute(z6)));

  auto g = s3();
  CHECK(subgroups(g).size() == 6);
  CHECK(subgroups(g).size() == static_cast<size_t>(subgroup_count_brute(g)));

  auto k4 = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
  CHECK(subgroups(k4).size() == static_cast<size_t>(subgroup_count_brute(k4)));

  // every enumerated subgroup really is one, and Lagrange holds
  for (const auto& s : subgroups(g)) {
    CHECK(is_subgroup(s));
    CHECK(g->order() % s.order() == 0);
  }

  // the order-pq subgroup of Z_31 x| Z_15 is unique
  long long t = element_of_order(15, 31).value;
  auto big = FiniteGroup::metacyclic(MetacyclicParams(31, 15, t, 1));
  long long count155 = 0;
  for (const auto& s : subgroups(big)) count155 += s.order() == 155;
  CHECK(count155 == 1);
}

TEST_CASE("normality and normal abelian subgroups") {
  auto g21 = FiniteGroup::metacyclic(MetacyclicParams(7, 3, 2, 1));
  for (const auto& s : subgroups(g21)) {
    if (s.order() == 7) CHECK(is_normal(g21, s));
    if (s.order() == 3) CHECK_FALSE(is_normal(g21, s));
    if (s.order() == 21) CHECK(is_normal(g21, s));
  }

  auto z105 = FiniteGroup::cyclic(105);
  CHECK(normal_abelian_subgroups(z105).size() == 8);

  // (Z_7 x| Z_3) x Z_2: exactly 1, Z_2, Z_7, Z_14
  auto cat = from_catalog(7, 3, 2);
  GroupRef g5;
  for (const auto& g : cat)
    if (g->tag() == "G5") g5 = g;
  REQUIRE(g5);
  std::multiset<long long> orders;
  for (const auto& s : normal_abelian_subgroups(g5)) orders.insert(s.order());
  CHECK(orders == std::multiset<long long>{1, 2, 7, 14});

  // G4 at (13,7,3): 1, Z_7, Z_13, Z_91
  auto g4 = catalog_g4(13, 7, 3, 1);
  orders.clear();
  for (const auto& s : normal_abelian_subgroups(g4)) orders.insert(s.order());
  CHECK(orders == std::multiset<long long>{1, 7, 13, 91});
}

TEST_CASE("complements") {
  auto g21 = FiniteGroup::metacyclic(MetacyclicParams(7, 3, 2, 1));
  for (const auto& s : subgroups(g21)) {
    if (s.order() != 7) continue;
    Subgroup k = complement(g21, s);
    CHECK(k.order() == 3);
    CHECK(intersect(k, s).order() == 1);
  }
  Subgroup whole = whole_subgroup(g21);
  CHECK(complement(g21, whole).order() == 1);
  CHECK(complement(g21, trivial_subgroup(g21)).order() == 21);

  // N = Z_7 x Z_2 inside (Z_7 x| Z_3) x Z_2
  for (const auto& g : from_catalog(7, 3, 2)) {
    if (g->tag() != "G5") continue;
    for (const auto& s : normal_abelian_subgroups(g))
      if (s.order() == 14) CHECK(complement(g, s).order() == 3);
  }
}

TEST_CASE("isomorphism testing") {
  auto z30 = FiniteGroup::cyclic(30);
  auto prod = FiniteGroup::direct_product(
      FiniteGroup::cyclic(5),
      FiniteGroup::direct_product(FiniteGroup::cyclic(3), FiniteGroup::cyclic(2)));
  IsoResult res = is_isomorphic(z30, prod);
  CHECK(res.isomorphic);
  // the witness is a homomorphism
  for (Elem a = 0; a < 30; ++a)
    for (Elem b = 0; b < 30; ++b)
      CHECK(res.map[z30->mul(a, b)] == prod->mul(res.map[a], res.map[b]));

  CHECK_FALSE(is_isomorphic(z30, FiniteGroup::cyclic(31)).isomorphic);
  CHECK_FALSE(is_isomorphic(FiniteGroup::cyclic(6), s3()).isomorphic);

  // the G4 family members at (13,7,3) are pairwise non-isomorphic
  auto a = catalog_g4(13, 7, 3, 1);
  auto b = catalog_g4(13, 7, 3, 2);
  CHECK_FALSE(is_isomorphic(a, b).isomorphic);
  CHECK(is_isomorphic(a, a).isomorphic);

  // lambda only matters through gcd(lambda, h): both are the semidihedral group
  auto m1 = FiniteGroup::metacyclic(MetacyclicParams(8, 2, 3, 1));
  auto m2 = FiniteGroup::metacyclic(MetacyclicParams(8, 2, 3, 2));
  CHECK(is_isomorphic(m1, m2).isomorphic);

  // dihedral vs quaternion: same order, different histograms
  auto d8 = FiniteGroup::metacyclic(MetacyclicParams(4, 2, 3, 2));
  auto q8 = FiniteGroup::metacyclic(MetacyclicParams(4, 2, 3, 1));
  CHECK_FALSE(is_isomorphic(d8, q8).isomorphic);
}

TEST_CASE("catalog counts match the closed formula") {
  struct T {
    long long p, q, r;
  };
  for (auto [p, q, r] :
       {T{7, 5, 3}, T{5, 3, 2}, T{13, 3, 2}, T{13, 7, 3}, T{31, 5, 3}, T{7, 3, 2}}) {
    auto cat = from_catalog(p, q, r);
    CHECK(static_cast<long long>(cat.size()) == holder_count(p * q * r));
    CHECK(static_cast<long long>(cat.size()) == table1_case(p, q, r).count);
    for (size_t i = 0; i < cat.size(); ++i)
      for (size_t j = i + 1; j < cat.size(); ++j)
        CHECK_FALSE(is_isomorphic(cat[i], cat[j]).isomorphic);
  }
  // (7,5,3): the two groups are Z_105 and (Z_7 x| Z_3) x Z_5
  auto cat = from_catalog(7, 5, 3);
  REQUIRE(cat.size() == 2);
  CHECK(cat[0]->is_abelian());
  CHECK_FALSE(cat[1]->is_abelian());
  auto model = FiniteGroup::direct_product(FiniteGroup::metacyclic(MetacyclicParams(7, 3, 2, 1)),
                                           FiniteGroup::cyclic(5));
  CHECK(is_isomorphic(cat[1], model).isomorphic);
}

TEST_CASE("bicrossed and semidirect products") {
  auto z3 = FiniteGroup::cyclic(3);
  auto z4 = FiniteGroup::cyclic(4);
  MatchedPair triv = trivial_matched_pair(z3, z4);
  CHECK(validate_matched_pair(triv).ok);
  auto bi = bicrossed_product(triv);
  CHECK(bi->order() == 12);
  // with both actions trivial the bicrossed product is the direct product
  auto direct = FiniteGroup::direct_product(z3, z4);
  for (Elem a = 0; a < 12; ++a)
    for (Elem b = 0; b < 12; ++b) CHECK(bi->mul(a, b) == direct->mul(a, b));

  // the abelian-extension matched pair gives Z_p x| Z_qr
  MatchedPair mp = a_family_matched_pair(31, 5, 3);
  CHECK(validate_matched_pair(mp).ok);
  auto g = bicrossed_product(mp);
  CHECK(g->order() == 465);
  long long t = element_of_order(15, 31).value;
  auto model = FiniteGroup::metacyclic(MetacyclicParams(31, 15, t, 1));
  CHECK(is_isomorphic(g, model).isomorphic);

  // semidirect Z_7 with Z_3 acting by a -> a^2
  auto z7 = FiniteGroup::cyclic(7);
  std::vector<std::vector<Elem>> act(7, std::vector<Elem>(3));
  for (Elem s = 0; s < 7; ++s)
    for (Elem y = 0; y < 3; ++y) act[s][y] = static_cast<Elem>(s * mod_pow(2, y, 7) % 7);
  auto sd = semidirect_product(z7, z3, act);
  CHECK(sd->order() == 21);
  CHECK(is_isomorphic(sd, FiniteGroup::metacyclic(MetacyclicParams(7, 3, 2, 1))).isomorphic);

  // trivial action reduces to the direct product
  std::vector<std::vector<Elem>> triv_act(7, std::vector<Elem>(3));
  for (Elem s = 0; s < 7; ++s)
    for (Elem y = 0; y < 3; ++y) triv_act[s][y] = s;
  auto sd2 = semidirect_product(z7, z3, triv_act);
  CHECK(is_isomorphic(sd2, FiniteGroup::cyclic(21)).isomorphic);

  // an action that is not by automorphisms is rejected
  std::vector<std::vector<Elem>> bad = triv_act;
  bad[1][1] = 2;
  bad[2][1] = 1;
  CHECK_THROWS(semidirect_product(z7, z3, bad));
}

TEST_CASE("character groups") {
  auto z6 = FiniteGroup::cyclic(6);
  CharacterGroup cg = character_group(z6);
  CHECK(cg.dual->order() == 6);
  CHECK(cg.pairing(1, cg.generator) == Rational::mod1(1, 6));
  CHECK(cg.pairing(3, cg.generator) == Rational::mod1(1, 2));

  // trivial conjugation dualizes to the trivial action
  std::vector<std::vector<Elem>> conj(1, std::vector<Elem>(6));
  for (Elem h = 0; h < 6; ++h) conj[0][h] = h;
  auto act = cg.dual_action(conj);
  for (Elem rho = 0; rho < 6; ++rho) CHECK(act[rho][0] == rho);

  CHECK_THROWS_WITH(character_group(s3()), "H nonabelian");
}

TEST_CASE("structured triple arithmetic matches the table") {
  long long saved = table_threshold();
  set_table_threshold(50);
  auto structured = catalog_g4(13, 7, 3, 1);  // order 273 > 50: no table
  CHECK_FALSE(structured->has_table());
  CHECK_THROWS_WITH(subgroups(structured), "requires table form");
  set_table_threshold(saved);
  auto tabled = catalog_g4(13, 7, 3, 1);
  CHECK(tabled->has_table());
  for (Elem a = 0; a < 273; a += 7)
    for (Elem b = 1; b < 273; b += 11) CHECK(structured->mul(a, b) == tabled->mul(a, b));
  CHECK(structured->order_histogram() == tabled->order_histogram());
  CHECK(structured->center().size() == tabled->center().size());
}

TEST_CASE("triple action class labels match isomorphism") {
  // the canonical exponent label is a complete invariant within the family
  for (long long n1 = 1; n1 < 3; ++n1)
    for (long long n2 = 1; n2 < 3; ++n2) {
      auto a = catalog_g4(13, 7, 3, n1);
      auto b = catalog_g4(13, 7, 3, n2);
      bool label_eq = triple_action_class(*a) == triple_action_class(*b);
      CHECK(label_eq == is_isomorphic(a, b).isomorphic);
    }
  for (long long n1 = 1; n1 < 5; ++n1)
    for (long long n2 = 1; n2 < 5; ++n2) {
      auto a = catalog_g4(31, 11, 5, n1);  // order 1705, still table mode
      auto b = catalog_g4(31, 11, 5, n2);
      bool label_eq = triple_action_class(*a) == triple_action_class(*b);
      CHECK(label_eq == is_isomorphic(a, b).isomorphic);
    }
}
