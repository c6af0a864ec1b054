#include "hopfpqr/products.hpp"

#include <numeric>
#include <stdexcept>

namespace hopfpqr {

ValidationReport validate_matched_pair(const MatchedPair& mp) {
  ValidationReport rep;
  long long nf = mp.F->order(), ng = mp.Gamma->order();
  auto fail = [&](std::string msg) {
    rep.ok = false;
    rep.issues.push_back(std::move(msg));
  };
  if (static_cast<long long>(mp.rhd.size()) != ng ||
      static_cast<long long>(mp.lhd.size()) != ng) {
    fail("action tables have wrong shape");
    return rep;
  }
  for (long long s = 0; s < ng; ++s)
    if (static_cast<long long>(mp.rhd[s].size()) != nf ||
        static_cast<long long>(mp.lhd[s].size()) != nf) {
      fail("action tables have wrong shape");
      return rep;
    }

  // unit laws
  for (Elem s = 0; s < ng; ++s) {
    if (mp.rhd[s][0] != 0) fail("s |> e != e at s=" + std::to_string(s));
    if (mp.lhd[s][0] != s) fail("s <| e != s at s=" + std::to_string(s));
  }
  for (Elem x = 0; x < nf; ++x) {
    if (mp.rhd[0][x] != x) fail("e |> x != x at x=" + std::to_string(x));
    if (mp.lhd[0][x] != 0) fail("e <| x != e at x=" + std::to_string(x));
  }
  // action laws
  for (Elem s = 0; s < ng && rep.ok; ++s)
    for (Elem x = 0; x < nf; ++x)
      for (Elem y = 0; y < nf; ++y) {
        if (mp.lhd[mp.lhd[s][x]][y] != mp.lhd[s][mp.F->mul(x, y)]) {
          fail("<| is not a right action at (" + std::to_string(s) + "," + std::to_string(x) +
               "," + std::to_string(y) + ")");
          break;
        }
      }
  for (Elem s = 0; s < ng && rep.ok; ++s)
    for (Elem t = 0; t < ng; ++t)
      for (Elem x = 0; x < nf; ++x) {
        if (mp.rhd[mp.Gamma->mul(s, t)][x] != mp.rhd[s][mp.rhd[t][x]]) {
          fail("|> is not a left action at (" + std::to_string(s) + "," + std::to_string(t) +
               "," + std::to_string(x) + ")");
          break;
        }
      }
  // compatibility laws
  for (Elem s = 0; s < ng && rep.ok; ++s)
    for (Elem x = 0; x < nf && rep.ok; ++x)
      for (Elem y = 0; y < nf; ++y) {
        Elem lhs = mp.rhd[s][mp.F->mul(x, y)];
        Elem rhs = mp.F->mul(mp.rhd[s][x], mp.rhd[mp.lhd[s][x]][y]);
        if (lhs != rhs) {
          fail("s |> (xy) law fails at (" + std::to_string(s) + "," + std::to_string(x) + "," +
               std::to_string(y) + ")");
          break;
        }
      }
  for (Elem s = 0; s < ng && rep.ok; ++s)
    for (Elem t = 0; t < ng && rep.ok; ++t)
      for (Elem x = 0; x < nf; ++x) {
        Elem lhs = mp.lhd[mp.Gamma->mul(s, t)][x];
        Elem rhs = mp.Gamma->mul(mp.lhd[s][mp.rhd[t][x]], mp.lhd[t][x]);
        if (lhs != rhs) {
          fail("(st) <| x law fails at (" + std::to_string(s) + "," + std::to_string(t) + "," +
               std::to_string(x) + ")");
          break;
        }
      }
  // each partial action must be a bijection
  for (Elem s = 0; s < ng && rep.ok; ++s) {
    std::vector<char> hit(nf, 0);
    for (Elem x = 0; x < nf; ++x) hit[mp.rhd[s][x]] = 1;
    for (Elem x = 0; x < nf; ++x)
      if (!hit[x]) {
        fail("s |> . not bijective at s=" + std::to_string(s));
        break;
      }
  }
  for (Elem x = 0; x < nf && rep.ok; ++x) {
    std::vector<char> hit(ng, 0);
    for (Elem s = 0; s < ng; ++s) hit[mp.lhd[s][x]] = 1;
    for (Elem s = 0; s < ng; ++s)
      if (!hit[s]) {
        fail(". <| x not bijective at x=" + std::to_string(x));
        break;
      }
  }
  return rep;
}

MatchedPair trivial_matched_pair(const GroupRef& f, const GroupRef& gamma) {
  MatchedPair mp;
  mp.F = f;
  mp.Gamma = gamma;
  mp.rhd.assign(gamma->order(), std::vector<Elem>(f->order()));
  mp.lhd.assign(gamma->order(), std::vector<Elem>(f->order()));
  for (Elem s = 0; s < gamma->order(); ++s)
    for (Elem x = 0; x < f->order(); ++x) {
      mp.rhd[s][x] = x;
      mp.lhd[s][x] = s;
    }
  return mp;
}

GroupRef bicrossed_product(const MatchedPair& mp) {
  ValidationReport rep = validate_matched_pair(mp);
  if (!rep.ok) throw std::invalid_argument("invalid matched pair: " + rep.issues.front());
  long long ng = mp.Gamma->order();
  return FiniteGroup::from_mult(
      mp.F->order() * ng,
      [&](Elem u, Elem v) {
        Elem x = static_cast<Elem>(u / ng), s = static_cast<Elem>(u % ng);
        Elem y = static_cast<Elem>(v / ng), t = static_cast<Elem>(v % ng);
        Elem fx = mp.F->mul(x, mp.rhd[s][y]);
        Elem gs = mp.Gamma->mul(mp.lhd[s][y], t);
        return static_cast<Elem>(fx * ng + gs);
      },
      mp.F->name() + "><" + mp.Gamma->name(), "bicrossed");
}

GroupRef semidirect_product(const GroupRef& a, const GroupRef& k,
                            const std::vector<std::vector<Elem>>& act) {
  long long na = a->order(), nk = k->order();
  if (static_cast<long long>(act.size()) != na)
    throw std::invalid_argument("action table has wrong shape");
  for (const auto& row : act)
    if (static_cast<long long>(row.size()) != nk)
      throw std::invalid_argument("action table has wrong shape");
  // right action by automorphisms
  for (Elem y = 0; y < nk; ++y) {
    std::vector<char> hit(na, 0);
    for (Elem s = 0; s < na; ++s) hit[act[s][y]] = 1;
    for (Elem s = 0; s < na; ++s)
      if (!hit[s]) throw std::invalid_argument("action is not by bijections");
    if (act[0][y] != 0) throw std::invalid_argument("action does not fix the identity");
    for (Elem s = 0; s < na; ++s)
      for (Elem t = 0; t < na; ++t)
        if (act[a->mul(s, t)][y] != a->mul(act[s][y], act[t][y]))
          throw std::invalid_argument("action is not by automorphisms");
  }
  for (Elem s = 0; s < na; ++s) {
    if (act[s][0] != s) throw std::invalid_argument("identity must act trivially");
    for (Elem y = 0; y < nk; ++y)
      for (Elem z = 0; z < nk; ++z)
        if (act[act[s][y]][z] != act[s][k->mul(y, z)])
          throw std::invalid_argument("not a right action");
  }
  return FiniteGroup::from_mult(
      nk * na,
      [&, na](Elem u, Elem v) {
        Elem x = static_cast<Elem>(u / na), s = static_cast<Elem>(u % na);
        Elem y = static_cast<Elem>(v / na), t = static_cast<Elem>(v % na);
        return static_cast<Elem>(k->mul(x, y) * na + a->mul(act[s][y], t));
      },
      a->name() + ":" + k->name(), "semidirect");
}

Rational CharacterGroup::pairing(Elem rho, Elem h) const {
  return Rational::mod1(rho * dlog[h], source->order());
}

std::vector<std::vector<Elem>> CharacterGroup::dual_action(
    const std::vector<std::vector<Elem>>& conj) const {
  long long n = source->order();
  std::vector<std::vector<Elem>> act(n, std::vector<Elem>(conj.size()));
  for (Elem rho = 0; rho < n; ++rho)
    for (size_t x = 0; x < conj.size(); ++x)
      act[rho][x] = static_cast<Elem>(mod_mul(rho, dlog[conj[x][generator]], n));
  return act;
}

CharacterGroup character_group(const GroupRef& h) {
  if (!h->is_abelian()) throw std::invalid_argument("H nonabelian");
  long long n = h->order();
  Elem gen = -1;
  for (Elem x = 0; x < n && gen < 0; ++x)
    if (h->element_order(x) == n) gen = x;
  if (gen < 0) throw std::invalid_argument("requires a cyclic group");
  CharacterGroup cg;
  cg.source = h;
  cg.dual = FiniteGroup::cyclic(n);
  cg.generator = gen;
  cg.dlog.assign(n, -1);
  Elem v = 0;
  for (long long e = 0; e < n; ++e) {
    cg.dlog[v] = e;
    v = h->mul(v, gen);
  }
  return cg;
}

MatchedPair a_family_matched_pair(long long p, long long first, long long second) {
  if (!is_prime(p) || !is_prime(first) || !is_prime(second))
    throw std::invalid_argument("need primes");
  if ((p - 1) % (first * second) != 0)
    throw std::invalid_argument("requires first*second to divide p-1");
  long long t = element_of_order(first, p).value;
  MetacyclicParams params(p, first, t, std::gcd(p, mod_reduce(t - 1, p)));
  GroupRef gamma = FiniteGroup::metacyclic(params);  // element (i,j) = a^i b^j, idx i*first + j
  GroupRef f = FiniteGroup::cyclic(second);
  long long m = element_of_order(second, p).value;

  MatchedPair mp;
  mp.F = f;
  mp.Gamma = gamma;
  mp.rhd.assign(gamma->order(), std::vector<Elem>(second));
  mp.lhd.assign(gamma->order(), std::vector<Elem>(second));
  std::vector<long long> mpow(second);
  mpow[0] = 1;
  for (long long k = 1; k < second; ++k) mpow[k] = mod_mul(mpow[k - 1], m, p);
  for (Elem s = 0; s < gamma->order(); ++s) {
    long long i = s / first, j = s % first;
    for (Elem k = 0; k < second; ++k) {
      mp.rhd[s][k] = k;  // trivial
      mp.lhd[s][k] = static_cast<Elem>(mod_mul(i, mpow[k], p) * first + j);
    }
  }
  return mp;
}

}  // namespace hopfpqr
