#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "hopfpqr/numbers.hpp"

using namespace hopfpqr;

namespace {

// independent oracle: order by direct exponentiation
long long order_by_iteration(long long a, long long m) {
  long long v = a % m, k = 1;
  while (v != 1) {
    v = (v * a) % m;
    ++k;
  }
  return k;
}

}  // namespace

TEST_CASE("multiplicative order") {
  CHECK(mult_order(Residue(12, 1)) == 1);
  CHECK(mult_order(Residue(7, 2)) == 3);   // 2, 4, 1
  CHECK(mult_order(Residue(7, 6)) == 2);   // 36 = 1 mod 7
  CHECK_THROWS_WITH(mult_order(Residue(12, 4)), "not a unit");

  for (long long m : {5, 7, 9, 12, 31}) {
    for (long long a = 1; a < m; ++a) {
      if (std::gcd(a, m) != 1) continue;
      CHECK(mult_order(Residue(m, a)) == order_by_iteration(a, m));
    }
  }
}

TEST_CASE("element of exact order") {
  CHECK(element_of_order(2, 7).value == 6);
  CHECK(element_of_order(3, 7).value == 2);
  CHECK(element_of_order(5, 31).value == 2);
  CHECK_THROWS_WITH(element_of_order(5, 7), "no element of that order");

  for (long long p : {7, 13, 31}) {
    for (long long r = 1; r < p; ++r) {
      if ((p - 1) % r != 0) continue;
      Residue t = element_of_order(r, p);
      CHECK(mult_order(t) == r);
    }
  }
}

TEST_CASE("holder count") {
  CHECK(holder_count(30) == 4);
  CHECK(holder_count(42) == 6);
  CHECK(holder_count(105) == 2);
  CHECK_THROWS(holder_count(12));
  for (long long p : {2, 3, 5, 7, 11, 13}) CHECK(holder_count(p) == 1);
  // consistency with the case table
  struct T {
    long long p, q, r;
  };
  for (auto [p, q, r] : {T{7, 5, 3}, T{31, 5, 3}, T{13, 7, 3}, T{7, 3, 2}, T{13, 3, 2}, T{5, 3, 2}})
    CHECK(holder_count(p * q * r) == table1_case(p, q, r).count);
}

TEST_CASE("schur h") {
  CHECK(schur_h(7, 3, 2) == 1);
  CHECK(schur_h(2, 2, 1) == 2);
  CHECK(schur_h(5, 3, 1) == 1);
  CHECK_THROWS(schur_h(7, 3, 3));  // 3^3 = 27 != 1 mod 7
  // abelian case: h(m, n, 1) = gcd(m, n)
  for (long long m = 1; m <= 12; ++m)
    for (long long n = 1; n <= 12; ++n) CHECK(schur_h(m, n, 1) == std::gcd(m, n));
}

TEST_CASE("table 1 rows") {
  CHECK(table1_case(7, 5, 3).case_id == 3);
  CHECK(table1_case(7, 5, 3).count == 2);
  CHECK(table1_case(31, 5, 3).case_id == 7);
  CHECK(table1_case(31, 5, 3).count == 4);
  CHECK(table1_case(13, 7, 3).case_id == 4);
  CHECK(table1_case(13, 7, 3).count == 5);
  CHECK(table1_case(7, 3, 2).case_id == 8);
  CHECK(table1_case(7, 3, 2).count == 6);
  CHECK_THROWS(table1_case(3, 5, 7));
  CHECK_THROWS(table1_case(9, 5, 3));
}

TEST_CASE("rational angles") {
  Rational a = Rational::mod1(3, 6);
  CHECK(a.num == 1);
  CHECK(a.den == 2);
  CHECK(a.plus(a) == Rational::mod1(0, 1));
  CHECK(Rational::mod1(-1, 4) == Rational::mod1(3, 4));
  CHECK(a.negated() == a);
}
