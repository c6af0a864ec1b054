#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "hopfpqr/catalog.hpp"
#include "hopfpqr/cohomology.hpp"

using namespace hopfpqr;

namespace {

GroupRef klein() {
  return FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
}

std::vector<long long> random_chain(const GroupRef& g, long long n, std::mt19937& rng) {
  std::vector<long long> c(g->order(), 0);
  for (size_t i = 1; i < c.size(); ++i) c[i] = rng() % n;
  return c;
}

// independent route: |H^2| as (#cocycles) / (#full coboundaries), both
// counted from the raw linear systems over Z_N
long long h2_size_by_counting(const GroupRef& l) {
  long long n = l->order(), N = n;
  int dim = static_cast<int>((n - 1) * (n - 1));
  auto slot = [&](Elem g, Elem h) { return static_cast<int>((g - 1) * (n - 1) + (h - 1)); };

  // cocycle space: kernel of the full (unparameterized) condition system
  Mat eqs;
  for (Elem g = 1; g < n; ++g)
    for (Elem h = 1; h < n; ++h)
      for (Elem k = 1; k < n; ++k) {
        Vec row(dim, 0);
        row[slot(g, h)] += 1;
        Elem gh = l->mul(g, h);
        if (gh != 0) row[slot(gh, k)] += 1;
        row[slot(h, k)] -= 1;
        Elem hk = l->mul(h, k);
        if (hk != 0) row[slot(g, hk)] -= 1;
        for (auto& v : row) v = mod_reduce(v, N);
        eqs.push_back(std::move(row));
      }
  Mat cocycles = zn_kernel(eqs, dim, N);
  Vec zf = zn_span_factors(cocycles, dim, N);

  // coboundary space + fractional character coboundaries
  Mat bounds;
  for (Elem u = 1; u < n; ++u) {
    std::vector<long long> chain(n, 0);
    chain[u] = 1;
    Cocycle c = coboundary(l, N, chain);
    Vec row(dim, 0);
    for (Elem g = 1; g < n; ++g)
      for (Elem h = 1; h < n; ++h) row[slot(g, h)] = c.at(g, h);
    bounds.push_back(std::move(row));
  }
  for (const auto& chi : character_table_generators(l, N)) {
    Cocycle c = fractional_coboundary(l, N, chi);
    Vec row(dim, 0);
    for (Elem g = 1; g < n; ++g)
      for (Elem h = 1; h < n; ++h) row[slot(g, h)] = c.at(g, h);
    bounds.push_back(std::move(row));
  }
  Vec bf = zn_span_factors(bounds, dim, N);

  // divide the two factored counts exactly
  long long num = 1;
  for (long long f : zf) num *= f;
  long long den = 1;
  for (long long f : bf) den *= f;
  REQUIRE(num % den == 0);
  return num / den;
}

}  // namespace

TEST_CASE("brute force h2 on the reference groups") {
  CHECK(h2(FiniteGroup::cyclic(6)).invariant_factors.empty());
  CHECK(h2(FiniteGroup::cyclic(4)).invariant_factors.empty());
  CHECK(h2(FiniteGroup::cyclic(2)).invariant_factors.empty());
  CHECK(h2(FiniteGroup::metacyclic(MetacyclicParams(7, 3, 2, 1))).invariant_factors.empty());

  CohomologyGroup k = h2(klein());
  CHECK(k.invariant_factors == std::vector<long long>{2});
  REQUIRE(k.representatives.size() == 1);
  CHECK(is_cocycle(k.representatives[0]));

  // dihedral of order 8 has multiplier Z_2, quaternion has none
  CHECK(h2(FiniteGroup::metacyclic(MetacyclicParams(4, 2, 3, 2))).invariant_factors ==
        std::vector<long long>{2});
  CHECK(h2(FiniteGroup::metacyclic(MetacyclicParams(4, 2, 3, 1))).invariant_factors.empty());

  CHECK_THROWS_WITH(h2(FiniteGroup::cyclic(43)), "use metacyclic formula");
}

TEST_CASE("closed formula agrees with brute force") {
  struct P {
    long long m, n, r, lambda;
  };
  for (auto [m, n, r, lambda] :
       {P{7, 3, 2, 1}, P{2, 2, 1, 2}, P{2, 2, 1, 1}, P{4, 2, 3, 2}, P{4, 2, 3, 1}, P{8, 2, 3, 1},
        P{8, 2, 3, 2}, P{3, 2, 2, 2}, P{13, 3, 3, 1}, P{5, 4, 2, 1}, P{9, 3, 4, 3}}) {
    MetacyclicParams params(m, n, r, lambda);
    CohomologyGroup brute = h2(FiniteGroup::metacyclic(params));
    CohomologyGroup formula = schur_multiplier_metacyclic(params);
    CHECK(brute.invariant_factors == formula.invariant_factors);
  }
  // structure-only results carry no representatives
  CHECK(schur_multiplier_metacyclic(MetacyclicParams(2, 2, 1, 2)).representatives.empty());
  CHECK(schur_multiplier_metacyclic(MetacyclicParams(2, 2, 1, 2)).invariant_factors ==
        std::vector<long long>{2});
}

TEST_CASE("h2 size cross-check by independent counting") {
  for (const auto& g :
       {FiniteGroup::cyclic(4), FiniteGroup::cyclic(6), klein(),
        FiniteGroup::metacyclic(MetacyclicParams(3, 2, 2, 2)),
        FiniteGroup::metacyclic(MetacyclicParams(4, 2, 3, 2)),
        FiniteGroup::metacyclic(MetacyclicParams(4, 2, 3, 1)),
        FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(4)),
        FiniteGroup::direct_product(FiniteGroup::cyclic(3), FiniteGroup::cyclic(3)),
        FiniteGroup::cyclic(12)}) {
    long long size = 1;
    for (long long f : h2(g).invariant_factors) size *= f;
    CHECK(size == h2_size_by_counting(g));
  }
}

TEST_CASE("representative orders") {
  CohomologyGroup k = h2(klein());
  const Cocycle& rep = k.representatives[0];
  Cocycle doubled = add_cocycles(rep, rep);
  CHECK(is_cohomologous(doubled, zero_cocycle(rep.group)));
  CHECK_FALSE(is_cohomologous(rep, zero_cocycle(rep.group)));
  auto z33 = FiniteGroup::direct_product(FiniteGroup::cyclic(3), FiniteGroup::cyclic(3));
  CohomologyGroup h33 = h2(z33);
  CHECK(h33.invariant_factors == std::vector<long long>{3});
  CHECK(all_class_reps(h33).size() == 3);
}

TEST_CASE("metacyclic parameter derivation") {
  auto s3 = FiniteGroup::metacyclic(MetacyclicParams(3, 2, 2, 2));
  auto params = derive_metacyclic_params(s3);
  REQUIRE(params);
  CHECK(params->m == 3);
  CHECK(params->n == 2);
  CHECK(std::gcd(std::abs(params->lambda), schur_h(params->m, params->n, params->r)) == 1);

  auto z15 = FiniteGroup::cyclic(15);
  auto p15 = derive_metacyclic_params(z15);
  REQUIRE(p15);
  CHECK(schur_multiplier_metacyclic(*p15).invariant_factors.empty());

  // square-free orders above the brute-force limit go through the formula
  long long t = element_of_order(15, 31).value;
  auto big = FiniteGroup::metacyclic(MetacyclicParams(31, 15, t, 1));
  CHECK(h2_any(big).invariant_factors.empty());
}

TEST_CASE("restriction") {
  CohomologyGroup k = h2(klein());
  const Cocycle& rep = k.representatives[0];
  auto subs = subgroups(rep.group);
  for (const auto& s : subs) {
    Cocycle restr = restrict_cocycle(rep, s);
    CHECK(restr.modulus == rep.modulus);
    CHECK(is_cocycle(restr));
    if (s.order() == 1) {
      CHECK(restr.values == std::vector<long long>{0});
    }
    if (s.order() == 2) {
      // forced: the restriction bounds, since H^2 of a cyclic group is trivial
      Cocycle zero = restr;
      std::fill(zero.values.begin(), zero.values.end(), 0);
      CHECK(is_cohomologous(restr, zero));
    }
  }
  // restricting the zero cocycle gives the zero cocycle
  Cocycle z = zero_cocycle(rep.group);
  for (const auto& s : subs) {
    Cocycle restr = restrict_cocycle(z, s);
    for (long long v : restr.values) CHECK(v == 0);
  }
}

TEST_CASE("conjugation transport") {
  auto g21 = FiniteGroup::metacyclic(MetacyclicParams(7, 3, 2, 1));
  std::mt19937 rng(11);
  // delta of a random chain, transported by a random element, stays a cocycle
  for (int trial = 0; trial < 25; ++trial) {
    Cocycle c = coboundary(g21, 21, random_chain(g21, 21, rng));
    CHECK(is_cocycle(c));
    Elem x = static_cast<Elem>(rng() % 21);
    Cocycle moved = conj_transport(c, x);
    CHECK(is_cocycle(moved));
  }
  // transport by the identity and by central elements changes nothing
  CohomologyGroup k = h2(klein());
  const Cocycle& rep = k.representatives[0];
  CHECK(conj_transport(rep, 0).values == rep.values);
  for (Elem x = 0; x < 4; ++x) CHECK(conj_transport(rep, x).values == rep.values);
}

TEST_CASE("cohomologous decision") {
  auto g = FiniteGroup::metacyclic(MetacyclicParams(3, 2, 2, 2));
  std::mt19937 rng(5);
  Cocycle base = coboundary(g, 6, random_chain(g, 6, rng));
  CHECK(is_cohomologous(base, base));
  for (int trial = 0; trial < 50; ++trial) {
    Cocycle shifted = add_cocycles(base, coboundary(g, 6, random_chain(g, 6, rng)));
    CHECK(is_cohomologous(base, shifted));
  }
  CohomologyGroup k = h2(klein());
  CHECK_FALSE(is_cohomologous(zero_cocycle(k.group), k.representatives[0]));
}

TEST_CASE("non-degeneracy") {
  CHECK(is_nondegenerate(zero_cocycle(FiniteGroup::trivial())));
  CHECK_FALSE(is_nondegenerate(zero_cocycle(FiniteGroup::cyclic(2))));
  CohomologyGroup k = h2(klein());
  CHECK(is_nondegenerate(k.representatives[0]));
  CHECK_FALSE(is_nondegenerate(zero_cocycle(klein())));

  // groups of non-square order never carry a non-degenerate class
  for (const auto& g : from_catalog(7, 3, 2))
    for (const auto& s : subgroups(g)) {
      if (s.order() == 1 || s.order() > kH2BruteLimit) continue;
      GroupRef sg = subgroup_group(s);
      for (const auto& beta : all_class_reps(h2(sg))) CHECK_FALSE(is_nondegenerate(beta));
    }
}

TEST_CASE("smith normal form sanity") {
  // determinantal-divisor oracle on a fixed matrix
  Mat a{{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}};
  SmithResult s = smith_normal_form(a);
  CHECK(s.diag == Vec{2, 2, 156});
  // modular variant agrees with gcd(d_i, N) on the same input
  SmithResult sm = smith_normal_form(a, 12);
  REQUIRE(sm.diag.size() == 3);
  for (int i = 0; i < 3; ++i)
    CHECK(std::gcd(sm.diag[i], 12LL) == std::gcd(s.diag[i], 12LL));

  // random kernels: every generator annihilates, and membership is complete
  std::mt19937 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    int rows = 1 + rng() % 5, cols = 1 + rng() % 4;
    long long N = 2 + rng() % 12;
    Mat m(rows, Vec(cols));
    for (auto& r : m)
      for (auto& v : r) v = rng() % N;
    Mat ker = zn_kernel(m, cols, N);
    for (const auto& k : ker)
      for (int i = 0; i < rows; ++i) {
        long long acc = 0;
        for (int j = 0; j < cols; ++j) acc += m[i][j] * k[j];
        CHECK(mod_reduce(acc, N) == 0);
      }
    // brute-force kernel size equals the span size of the generators
    long long total = 1;
    for (int j = 0; j < cols; ++j) total *= N;
    long long brute = 0;
    Vec x(cols, 0);
    for (long long code = 0; code < total; ++code) {
      long long c = code;
      for (int j = 0; j < cols; ++j) {
        x[j] = c % N;
        c /= N;
      }
      bool in = true;
      for (int i = 0; i < rows && in; ++i) {
        long long acc = 0;
        for (int j = 0; j < cols; ++j) acc += m[i][j] * x[j];
        in &= mod_reduce(acc, N) == 0;
      }
      brute += in;
    }
    long long span = 1;
    for (long long f : zn_span_factors(ker, cols, N)) span *= f;
    CHECK(span == brute);
  }
}

TEST_CASE("mod-N solver") {
  std::mt19937 rng(123);
  for (int trial = 0; trial < 120; ++trial) {
    int rows = 1 + rng() % 5, cols = 1 + rng() % 4;
    long long N = 2 + rng() % 12;
    Mat m(rows, Vec(cols));
    for (auto& r : m)
      for (auto& v : r) v = rng() % N;
    Vec x0(cols);
    for (auto& v : x0) v = rng() % N;
    Vec rhs(rows, 0);
    for (int i = 0; i < rows; ++i) {
      long long acc = 0;
      for (int j = 0; j < cols; ++j) acc += m[i][j] * x0[j];
      rhs[i] = mod_reduce(acc, N);
    }
    auto sol = zn_solve(m, rhs, N);
    REQUIRE(sol.has_value());
    for (int i = 0; i < rows; ++i) {
      long long acc = 0;
      for (int j = 0; j < cols; ++j) acc += m[i][j] * (*sol)[j];
      CHECK(mod_reduce(acc, N) == rhs[i]);
    }
    // random right-hand sides: a reported no-solution must really have none
    Vec v(rows);
    for (auto& e : v) e = rng() % N;
    auto maybe = zn_solve(m, v, N);
    if (!maybe) {
      long long total = 1;
      for (int j = 0; j < cols; ++j) total *= N;
      bool found = false;
      Vec x(cols, 0);
      for (long long code = 0; code < total && !found; ++code) {
        long long c = code;
        for (int j = 0; j < cols; ++j) {
          x[j] = c % N;
          c /= N;
        }
        bool ok = true;
        for (int i = 0; i < rows && ok; ++i) {
          long long acc = 0;
          for (int j = 0; j < cols; ++j) acc += m[i][j] * x[j];
          ok &= mod_reduce(acc, N) == v[i];
        }
        found = ok;
      }
      CHECK_FALSE(found);
    }
  }
}
