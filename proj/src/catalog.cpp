#include "hopfpqr/catalog.hpp"

#include <stdexcept>
#include <string>

#include "hopfpqr/isomorphism.hpp"

namespace hopfpqr {

namespace {
std::string zs(long long n) { return "Z" + std::to_string(n); }
}  // namespace

GroupRef catalog_g4(long long p, long long q, long long r, long long n) {
  long long kp = element_of_order(r, p).value;
  long long kq = element_of_order(r, q).value;
  TripleForm f{p, q, r, 1, kp, mod_pow(kq, n, q)};
  return FiniteGroup::triple(f, zs(p * q) + ":" + zs(r) + "[n=" + std::to_string(n) + "]",
                             "G4[n=" + std::to_string(n) + "]");
}

std::vector<GroupRef> from_catalog(long long p, long long q, long long r) {
  if (!(r < q && q < p) || !is_prime(p) || !is_prime(q) || !is_prime(r))
    throw std::invalid_argument("need distinct primes r < q < p");
  bool qp = (p - 1) % q == 0;
  bool rp = (p - 1) % r == 0;
  bool rq = (q - 1) % r == 0;

  std::vector<GroupRef> raw;
  raw.push_back(FiniteGroup::triple(TripleForm{p, q, r, 1, 1, 1}, zs(p * q * r), "G1"));
  if (rq) {
    long long kq = element_of_order(r, q).value;
    raw.push_back(FiniteGroup::triple(TripleForm{p, q, r, 1, 1, kq},
                                      "(" + zs(q) + ":" + zs(r) + ")x" + zs(p), "G2"));
  }
  if (rp) {
    long long kp = element_of_order(r, p).value;
    raw.push_back(FiniteGroup::triple(TripleForm{p, q, r, 1, kp, 1},
                                      "(" + zs(p) + ":" + zs(r) + ")x" + zs(q), "G3"));
  }
  if (rp && rq)
    for (long long n = 1; n < r; ++n) raw.push_back(catalog_g4(p, q, r, n));
  if (qp) {
    long long kpq = element_of_order(q, p).value;
    raw.push_back(FiniteGroup::triple(TripleForm{p, q, r, kpq, 1, 1},
                                      "(" + zs(p) + ":" + zs(q) + ")x" + zs(r), "G5"));
  }
  if (qp && rp) {
    long long kpq = element_of_order(q, p).value;
    long long kpr = element_of_order(r, p).value;
    raw.push_back(FiniteGroup::triple(TripleForm{p, q, r, kpq, kpr, 1},
                                      zs(p) + ":" + zs(q * r), "G6"));
  }

  // the family count is an output, not an assumption: deduplicate explicitly
  std::vector<GroupRef> out;
  for (const auto& g : raw) {
    bool dup = false;
    for (const auto& kept : out)
      if (is_isomorphic(kept, g).isomorphic) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(g);
  }
  return out;
}

}  // namespace hopfpqr
