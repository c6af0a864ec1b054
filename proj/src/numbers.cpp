#include "hopfpqr/numbers.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hopfpqr {

long long mod_reduce(long long a, long long m) {
  if (m < 1) throw std::invalid_argument("modulus must be positive");
  long long v = a % m;
  return v < 0 ? v + m : v;
}

long long mod_mul(long long a, long long b, long long m) {
  return static_cast<long long>(static_cast<__int128>(a) * b % m);
}

long long mod_pow(long long a, long long e, long long m) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  long long base = mod_reduce(a, m), acc = mod_reduce(1, m);
  while (e > 0) {
    if (e & 1) acc = mod_mul(acc, base, m);
    base = mod_mul(base, base, m);
    e >>= 1;
  }
  return acc;
}

namespace {
long long ext_gcd(long long a, long long b, long long& x, long long& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  long long x1, y1;
  long long g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}
}  // namespace

long long mod_inv(long long a, long long m) {
  long long x, y;
  long long g = ext_gcd(mod_reduce(a, m), m, x, y);
  if (g != 1) throw std::invalid_argument("not a unit");
  return mod_reduce(x, m);
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_squarefree(long long n) {
  if (n < 1) return false;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return false;
    }
  }
  return true;
}

std::vector<long long> prime_factors(long long n) {
  std::vector<long long> out;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<long long> divisors(long long n) {
  std::vector<long long> out;
  for (long long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Residue::Residue(long long modulus_, long long value_)
    : modulus(modulus_), value(mod_reduce(value_, modulus_)) {}

long long mult_order(const Residue& a) {
  if (std::gcd(a.value, a.modulus) != 1) throw std::invalid_argument("not a unit");
  long long k = 1, v = a.value % a.modulus;
  while (v != 1 % a.modulus) {
    v = mod_mul(v, a.value, a.modulus);
    ++k;
  }
  return k;
}

Residue element_of_order(long long r, long long p) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (r < 1 || (p - 1) % r != 0) throw std::invalid_argument("no element of that order");
  if (r == 1) return Residue(p, 1);
  for (long long t = 2; t < p; ++t) {
    if (mod_pow(t, r, p) == 1 && mult_order(Residue(p, t)) == r) return Residue(p, t);
  }
  throw std::invalid_argument("no element of that order");
}

long long holder_count(long long n) {
  if (!is_squarefree(n)) throw std::invalid_argument("n must be square-free");
  long long total = 0;
  for (long long m : divisors(n)) {
    long long prod = 1;
    for (long long p1 : prime_factors(n / m)) {
      long long c = 0;
      for (long long q1 : prime_factors(m))
        if (q1 % p1 == 1) ++c;
      long long num = 1;  // (p1^c - 1)/(p1 - 1) = 1 + p1 + ... + p1^{c-1}
      long long term = 0;
      for (long long i = 0; i < c; ++i) {
        term += num;
        num *= p1;
      }
      prod *= term;
      if (prod == 0) break;
    }
    total += prod;
  }
  return total;
}

long long schur_h(long long m, long long n, long long r) {
  if (m < 1 || n < 1) throw std::invalid_argument("m, n must be positive");
  long long rr = mod_reduce(r, m);
  if (mod_pow(rr, n, m) != 1 % m) throw std::invalid_argument("r^n must be 1 mod m");
  long long geom = 0;  // 1 + r + ... + r^{n-1} mod m; gcd with m only needs the residue
  long long pw = 1 % m;
  for (long long i = 0; i < n; ++i) {
    geom = (geom + pw) % m;
    pw = mod_mul(pw, rr, m);
  }
  long long g1 = std::gcd(m, geom);  // gcd(m, 0) = m
  long long g2 = std::gcd(m, mod_reduce(r - 1, m));
  return g1 * g2 / m;
}

MetacyclicParams::MetacyclicParams(long long m_, long long n_, long long r_, long long lambda_)
    : m(m_), n(n_), r(r_), lambda(lambda_) {
  if (m < 1 || n < 1) throw std::invalid_argument("m, n must be positive");
  if (mod_pow(mod_reduce(r, m), n, m) != 1 % m)
    throw std::invalid_argument("r^n must be 1 mod m");
}

Table1Row table1_case(long long p, long long q, long long r) {
  if (!(r < q && q < p) || !is_prime(p) || !is_prime(q) || !is_prime(r))
    throw std::invalid_argument("need distinct primes r < q < p");
  bool qp = (p - 1) % q == 0;
  bool rp = (p - 1) % r == 0;
  bool rq = (q - 1) % r == 0;
  if (!qp && !rp && !rq) return {1, 1};
  if (!qp && !rp && rq) return {2, 2};
  if (!qp && rp && !rq) return {3, 2};
  if (!qp && rp && rq) return {4, r + 2};
  if (qp && !rp && !rq) return {5, 2};
  if (qp && !rp && rq) return {6, 3};
  if (qp && rp && !rq) return {7, 4};
  return {8, r + 4};
}

Rational Rational::mod1(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    den = -den;
    num = -num;
  }
  num = mod_reduce(num, den);
  long long g = std::gcd(num, den);
  if (g == 0) g = 1;
  return Rational{num / g, den / g};
}

Rational Rational::plus(const Rational& o) const {
  long long l = std::lcm(den, o.den);
  return mod1(num * (l / den) + o.num * (l / o.den), l);
}

Rational Rational::negated() const { return mod1(-num, den); }

std::string Rational::str() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

}  // namespace hopfpqr
