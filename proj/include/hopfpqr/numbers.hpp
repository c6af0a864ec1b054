#pragma once

// Modular arithmetic, multiplicative orders, and the two closed-form counts
// used throughout: Hoelder's f(n) for square-free n and the metacyclic
// h(m,n,r). All arithmetic is exact; residues are always stored reduced.

#include <cstdint>
#include <string>
#include <vector>

namespace hopfpqr {

long long mod_reduce(long long a, long long m);
long long mod_mul(long long a, long long b, long long m);
long long mod_pow(long long a, long long e, long long m);
long long mod_inv(long long a, long long m);  // throws if gcd(a,m) != 1

bool is_prime(long long n);
bool is_squarefree(long long n);
std::vector<long long> prime_factors(long long n);  // distinct, ascending
std::vector<long long> divisors(long long n);       // ascending

/// A residue a mod m with 0 <= a < m.
struct Residue {
  long long modulus;
  long long value;
  Residue(long long modulus, long long value);
};

/// Least k >= 1 with a^k = 1 mod m. Throws "not a unit" otherwise.
long long mult_order(const Residue& a);

/// Smallest t in [2, p-1] of multiplicative order exactly r mod p.
/// The canonical choice for the action exponents K(p,r).
Residue element_of_order(long long r, long long p);

/// Hoelder's count of groups of square-free order n.
long long holder_count(long long n);

/// h(m,n,r) = gcd(m, 1+r+...+r^{n-1}) * gcd(m, r-1) / m, for r^n = 1 mod m.
long long schur_h(long long m, long long n, long long r);

/// Parameters of the metacyclic presentation
///   < a, b | a^m = 1, b a b^-1 = a^r, b^n = a^{m*lambda/gcd(m,r-1)} >.
struct MetacyclicParams {
  long long m, n, r, lambda;
  MetacyclicParams(long long m, long long n, long long r, long long lambda);
};

struct Table1Row {
  int case_id;      // 1..8, by the three divisibility predicates
  long long count;  // number of groups of order pqr
};
Table1Row table1_case(long long p, long long q, long long r);

/// Exact root-of-unity angle: exp(2*pi*i*num/den), reduced, 0 <= num < den.
struct Rational {
  long long num = 0;
  long long den = 1;
  static Rational mod1(long long num, long long den);
  Rational plus(const Rational& o) const;
  Rational negated() const;
  // values are kept reduced, so fieldwise comparison is value comparison
  auto operator<=>(const Rational& o) const = default;
  std::string str() const;  // "num/den"
};

}  // namespace hopfpqr
