#include "hopfpqr/hopf.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "hopfpqr/cohomology.hpp"
#include "hopfpqr/subgroup.hpp"

namespace hopfpqr {

Scalar Scalar::times(const Scalar& o) const {
  if (is_zero || o.is_zero) return zero();
  return root(angle.plus(o.angle));
}

bool Scalar::operator==(const Scalar& o) const {
  if (is_zero != o.is_zero) return false;
  return is_zero || angle == o.angle;
}

std::string Scalar::str() const { return is_zero ? "0" : angle.str(); }

namespace {

// Formal sums are compared as multisets of (basis, angle) terms. All
// constants in scope are 0 or 1, so no cyclotomic cancellation can occur.
using Combo = std::vector<std::pair<int, Rational>>;
using PairCombo = std::vector<std::pair<std::pair<int, int>, Rational>>;

void push_term(Combo& c, int basis, const Scalar& s) {
  if (!s.is_zero) c.emplace_back(basis, s.angle);
}

void normalize(Combo& c) { std::sort(c.begin(), c.end()); }
void normalize(PairCombo& c) { std::sort(c.begin(), c.end()); }

Combo times_basis(const HopfStructureConstants& h, const Combo& c, int b) {
  Combo out;
  for (const auto& [t, ang] : c)
    for (const Term& r : h.prod(t, b)) push_term(out, r.basis, Scalar::root(ang).times(r.coeff));
  return out;
}

Combo basis_times(const HopfStructureConstants& h, int b, const Combo& c) {
  Combo out;
  for (const auto& [t, ang] : c)
    for (const Term& r : h.prod(b, t)) push_term(out, r.basis, Scalar::root(ang).times(r.coeff));
  return out;
}

std::string describe(int i) { return std::to_string(i); }

}  // namespace

AxiomReport verify_hopf_axioms(const HopfStructureConstants& h) {
  AxiomReport rep;
  auto fail = [&](std::string msg) {
    rep.ok = false;
    if (rep.failures.size() < 32) rep.failures.push_back(std::move(msg));
  };
  int d = h.dim;

  // associativity
  for (int a = 0; a < d && rep.failures.size() < 32; ++a)
    for (int b = 0; b < d; ++b) {
      const auto& ab = h.prod(a, b);
      for (int c = 0; c < d; ++c) {
        Combo lhs, rhs;
        for (const Term& t : ab)
          for (const Term& r : h.prod(t.basis, c)) push_term(lhs, r.basis, t.coeff.times(r.coeff));
        for (const Term& t : h.prod(b, c))
          for (const Term& r : h.prod(a, t.basis)) push_term(rhs, r.basis, t.coeff.times(r.coeff));
        if (lhs.size() != rhs.size()) {
          fail("associativity fails at (" + describe(a) + "," + describe(b) + "," + describe(c) + ")");
          continue;
        }
        normalize(lhs);
        normalize(rhs);
        if (lhs != rhs)
          fail("associativity fails at (" + describe(a) + "," + describe(b) + "," + describe(c) + ")");
      }
    }

  // unit laws
  {
    Combo unit;
    for (const Term& t : h.unit) push_term(unit, t.basis, t.coeff);
    for (int b = 0; b < d; ++b) {
      Combo l = times_basis(h, unit, b), r = basis_times(h, b, unit), want{{b, Rational{0, 1}}};
      normalize(l);
      normalize(r);
      if (l != want) fail("left unit fails at " + describe(b));
      if (r != want) fail("right unit fails at " + describe(b));
    }
  }

  // coassociativity
  for (int a = 0; a < d; ++a) {
    std::vector<std::pair<std::tuple<int, int, int>, Rational>> lhs, rhs;
    for (const PairTerm& t : h.comult[a]) {
      for (const PairTerm& u : h.comult[t.left])
        lhs.push_back({{u.left, u.right, t.right}, t.coeff.times(u.coeff).angle});
      for (const PairTerm& u : h.comult[t.right])
        rhs.push_back({{t.left, u.left, u.right}, t.coeff.times(u.coeff).angle});
    }
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    if (lhs != rhs) fail("coassociativity fails at " + describe(a));
  }

  // counit laws
  for (int a = 0; a < d; ++a) {
    Combo l, r, want{{a, Rational{0, 1}}};
    for (const PairTerm& t : h.comult[a]) {
      push_term(l, t.right, h.counit[t.left].times(t.coeff));
      push_term(r, t.left, h.counit[t.right].times(t.coeff));
    }
    normalize(l);
    normalize(r);
    if (l != want || r != want) fail("counit law fails at " + describe(a));
  }

  // coproduct is an algebra map
  {
    // index comultiplication terms by their left leg
    std::vector<std::vector<std::pair<int, PairTerm>>> by_left(d);
    std::vector<std::vector<int>> row_support(d);
    for (int b = 0; b < d; ++b) {
      for (const PairTerm& t : h.comult[b]) by_left[b].push_back({t.left, t});
      std::sort(by_left[b].begin(), by_left[b].end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
    }
    for (int p = 0; p < d; ++p) {
      for (int u = 0; u < d; ++u)
        if (!h.prod(p, u).empty()) row_support[p].push_back(u);
    }
    for (int a = 0; a < d && rep.failures.size() < 32; ++a)
      for (int b = 0; b < d; ++b) {
        PairCombo lhs, rhs;
        for (const Term& t : h.prod(a, b))
          for (const PairTerm& u : h.comult[t.basis])
            rhs.push_back({{u.left, u.right}, t.coeff.times(u.coeff).angle});
        for (const PairTerm& t : h.comult[a]) {
          for (int u : row_support[t.left]) {
            auto lo = std::lower_bound(
                by_left[b].begin(), by_left[b].end(), u,
                [](const auto& x, int key) { return x.first < key; });
            for (auto it = lo; it != by_left[b].end() && it->first == u; ++it) {
              const PairTerm& s = it->second;
              for (const Term& m1 : h.prod(t.left, s.left))
                for (const Term& m2 : h.prod(t.right, s.right))
                  lhs.push_back({{m1.basis, m2.basis},
                                 t.coeff.times(s.coeff).times(m1.coeff).times(m2.coeff).angle});
            }
          }
        }
        normalize(lhs);
        normalize(rhs);
        if (lhs != rhs) fail("coproduct multiplicativity fails at (" + describe(a) + "," +
                             describe(b) + ")");
      }
  }

  // counit is an algebra map
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      Scalar want = h.counit[a].times(h.counit[b]);
      Combo acc;
      for (const Term& t : h.prod(a, b)) push_term(acc, 0, t.coeff.times(h.counit[t.basis]));
      Combo goal;
      push_term(goal, 0, want);
      normalize(acc);
      if (acc != goal) fail("counit multiplicativity fails at (" + describe(a) + "," + describe(b) + ")");
    }

  // antipode convolution identities
  {
    Combo unit;
    for (const Term& t : h.unit) push_term(unit, t.basis, t.coeff);
    normalize(unit);
    for (int a = 0; a < d; ++a) {
      Combo l, r;
      for (const PairTerm& t : h.comult[a]) {
        for (const Term& s : h.antipode[t.left])
          for (const Term& m : h.prod(s.basis, t.right))
            push_term(l, m.basis, t.coeff.times(s.coeff).times(m.coeff));
        for (const Term& s : h.antipode[t.right])
          for (const Term& m : h.prod(t.left, s.basis))
            push_term(r, m.basis, t.coeff.times(s.coeff).times(m.coeff));
      }
      Combo want;
      if (!h.counit[a].is_zero)
        for (const auto& [b, ang] : unit) want.emplace_back(b, h.counit[a].times(Scalar::root(ang)).angle);
      normalize(l);
      normalize(r);
      normalize(want);
      if (l != want) fail("antipode identity m(S x id)D fails at " + describe(a));
      if (r != want) fail("antipode identity m(id x S)D fails at " + describe(a));
    }
  }

  return rep;
}

HopfStructureConstants smash_product(const MatchedPair& mp) {
  ValidationReport v = validate_matched_pair(mp);
  if (!v.ok) throw std::invalid_argument("invalid matched pair: " + v.issues.front());
  long long nf = mp.F->order(), ng = mp.Gamma->order();
  HopfStructureConstants h;
  h.dim = static_cast<int>(nf * ng);
  h.name = "k^" + mp.Gamma->name() + "#k[" + mp.F->name() + "]";
  h.gamma = mp.Gamma;
  h.f = mp.F;
  h.lhd = mp.lhd;
  h.rhd = mp.rhd;
  h.has_extension_data = true;
  auto idx = [&](Elem g, Elem x) { return static_cast<int>(g * nf + x); };

  h.mult.assign(static_cast<size_t>(h.dim) * h.dim, {});
  for (Elem g = 0; g < ng; ++g)
    for (Elem x = 0; x < nf; ++x) {
      Elem hh = mp.lhd[g][x];  // (e_g # x)(e_h # y) = [g <| x = h] e_g # xy
      for (Elem y = 0; y < nf; ++y)
        h.mult[static_cast<size_t>(idx(g, x)) * h.dim + idx(hh, y)].push_back(
            {idx(g, mp.F->mul(x, y)), Scalar::one()});
    }

  h.comult.assign(h.dim, {});
  for (Elem g = 0; g < ng; ++g)
    for (Elem x = 0; x < nf; ++x)
      for (Elem t = 0; t < ng; ++t) {
        Elem s = mp.Gamma->mul(g, mp.Gamma->inv(t));  // s t = g
        h.comult[idx(g, x)].push_back({idx(s, mp.rhd[t][x]), idx(t, x), Scalar::one()});
      }

  for (Elem g = 0; g < ng; ++g) h.unit.push_back({idx(g, 0), Scalar::one()});
  h.counit.assign(h.dim, Scalar::zero());
  for (Elem x = 0; x < nf; ++x) h.counit[idx(0, x)] = Scalar::one();

  // antipode: solved from the convolution identity on the basis
  h.antipode.assign(h.dim, {});
  for (Elem s = 0; s < ng; ++s)
    for (Elem z = 0; z < nf; ++z) {
      Elem t = mp.Gamma->inv(s);
      Elem x = -1;
      for (Elem cand = 0; cand < nf; ++cand)
        if (mp.rhd[t][cand] == z) {
          x = cand;
          break;
        }
      if (x < 0) throw std::logic_error("antipode solve: |> not surjective");
      Elem xi = mp.F->inv(x);
      Elem a = -1;
      for (Elem cand = 0; cand < ng; ++cand)
        if (mp.lhd[cand][xi] == t) {
          a = cand;
          break;
        }
      if (a < 0) throw std::logic_error("antipode solve: <| not surjective");
      h.antipode[idx(s, z)].push_back({idx(a, xi), Scalar::one()});
    }

  AxiomReport rep = verify_hopf_axioms(h);
  if (!rep.ok) throw std::logic_error("smash product fails axioms: " + rep.failures.front());
  return h;
}

HopfStructureConstants build_A(long long p, long long first, long long second) {
  MatchedPair mp = a_family_matched_pair(p, first, second);
  HopfStructureConstants h = smash_product(mp);
  h.name = "A_" + std::to_string(p) + "(" + std::to_string(first) + ";" +
           std::to_string(second) + ")";
  return h;
}

HopfStructureConstants dual_hopf(const HopfStructureConstants& h) {
  HopfStructureConstants d;
  d.dim = h.dim;
  d.name = "dual(" + h.name + ")";
  d.gamma = h.gamma;
  d.f = h.f;
  d.lhd = h.lhd;
  d.rhd = h.rhd;
  d.has_extension_data = h.has_extension_data;
  d.dualized = !h.dualized;

  d.mult.assign(static_cast<size_t>(d.dim) * d.dim, {});
  for (int b = 0; b < h.dim; ++b)
    for (const PairTerm& t : h.comult[b])
      d.mult[static_cast<size_t>(t.left) * d.dim + t.right].push_back({b, t.coeff});

  d.comult.assign(d.dim, {});
  for (int a = 0; a < h.dim; ++a)
    for (int b = 0; b < h.dim; ++b)
      for (const Term& t : h.prod(a, b)) d.comult[t.basis].push_back({a, b, t.coeff});

  for (int b = 0; b < h.dim; ++b)
    if (!h.counit[b].is_zero) d.unit.push_back({b, h.counit[b]});
  d.counit.assign(d.dim, Scalar::zero());
  for (const Term& t : h.unit) d.counit[t.basis] = t.coeff;

  d.antipode.assign(d.dim, {});
  for (int a = 0; a < h.dim; ++a)
    for (const Term& t : h.antipode[a]) d.antipode[t.basis].push_back({a, t.coeff});

  // canonical term order so that dual(dual(h)) == h on the stored tables
  auto term_less = [](const Term& x, const Term& y) { return x.basis < y.basis; };
  auto pair_less = [](const PairTerm& x, const PairTerm& y) {
    return std::tie(x.left, x.right) < std::tie(y.left, y.right);
  };
  for (auto& row : d.mult) std::sort(row.begin(), row.end(), term_less);
  for (auto& row : d.comult) std::sort(row.begin(), row.end(), pair_less);
  for (auto& row : d.antipode) std::sort(row.begin(), row.end(), term_less);
  std::sort(d.unit.begin(), d.unit.end(), term_less);
  return d;
}

std::vector<long long> group_irrep_dims(const GroupRef& g) {
  if (g->is_abelian()) return std::vector<long long>(g->order(), 1);
  auto params = derive_metacyclic_params(g);
  if (!params) throw std::invalid_argument("no split metacyclic decomposition");
  long long m = params->m, n = params->n, rho = mod_reduce(params->r, m);
  std::vector<char> seen(m, 0);
  std::vector<long long> dims;
  for (long long j = 0; j < m; ++j) {
    if (seen[j]) continue;
    long long orbit = 0, v = j;
    do {
      seen[v] = 1;
      ++orbit;
      v = mod_mul(v, rho, m);
    } while (v != j);
    // the orbit size divides n; the stabilizer has order n / orbit
    long long copies = n / orbit;
    for (long long c = 0; c < copies; ++c) dims.push_back(orbit);
  }
  std::sort(dims.begin(), dims.end());
  long long sq = 0;
  for (long long d : dims) sq += d * d;
  if (sq != g->order()) throw std::logic_error("irreducible dimensions do not sum to the order");
  return dims;
}

std::vector<long long> irrep_dimension_vector(const HopfStructureConstants& h) {
  if (!h.has_extension_data) throw std::invalid_argument("not a smash product");
  const GroupRef& gamma = h.gamma;
  const GroupRef& f = h.f;
  std::vector<long long> dims;
  if (!h.dualized) {
    // orbits of F on Gamma through <|
    std::vector<char> seen(gamma->order(), 0);
    for (Elem g0 = 0; g0 < gamma->order(); ++g0) {
      if (seen[g0]) continue;
      std::vector<Elem> orbit{g0};
      seen[g0] = 1;
      for (size_t i = 0; i < orbit.size(); ++i)
        for (Elem x = 0; x < f->order(); ++x) {
          Elem t = h.lhd[orbit[i]][x];
          if (!seen[t]) {
            seen[t] = 1;
            orbit.push_back(t);
          }
        }
      std::vector<Elem> stab;
      for (Elem x = 0; x < f->order(); ++x)
        if (h.lhd[g0][x] == g0) stab.push_back(x);
      std::sort(stab.begin(), stab.end());
      GroupRef stab_group = subgroup_group(Subgroup{f, stab});
      for (long long dd : group_irrep_dims(stab_group))
        dims.push_back(static_cast<long long>(orbit.size()) * dd);
    }
  } else {
    // orbits of Gamma on F through |>
    std::vector<char> seen(f->order(), 0);
    for (Elem x0 = 0; x0 < f->order(); ++x0) {
      if (seen[x0]) continue;
      std::vector<Elem> orbit{x0};
      seen[x0] = 1;
      for (size_t i = 0; i < orbit.size(); ++i)
        for (Elem s = 0; s < gamma->order(); ++s) {
          Elem t = h.rhd[s][orbit[i]];
          if (!seen[t]) {
            seen[t] = 1;
            orbit.push_back(t);
          }
        }
      std::vector<Elem> stab;
      for (Elem s = 0; s < gamma->order(); ++s)
        if (h.rhd[s][x0] == x0) stab.push_back(s);
      std::sort(stab.begin(), stab.end());
      GroupRef stab_group = subgroup_group(Subgroup{gamma, stab});
      for (long long dd : group_irrep_dims(stab_group))
        dims.push_back(static_cast<long long>(orbit.size()) * dd);
    }
  }
  std::sort(dims.begin(), dims.end());
  long long sq = 0;
  for (long long d : dims) sq += d * d;
  if (sq != h.dim) throw std::logic_error("irreducible dimensions do not sum to the dimension");
  return dims;
}

bool is_commutative(const HopfStructureConstants& h) {
  auto key = [](std::vector<Term> v) {
    std::sort(v.begin(), v.end(), [](const Term& a, const Term& b) { return a.basis < b.basis; });
    return v;
  };
  for (int a = 0; a < h.dim; ++a)
    for (int b = a + 1; b < h.dim; ++b) {
      auto l = key(h.prod(a, b)), r = key(h.prod(b, a));
      if (l.size() != r.size()) return false;
      for (size_t i = 0; i < l.size(); ++i)
        if (l[i].basis != r[i].basis || !(l[i].coeff == r[i].coeff)) return false;
    }
  return true;
}

bool is_cocommutative(const HopfStructureConstants& h) {
  for (int a = 0; a < h.dim; ++a) {
    PairCombo fwd, swp;
    for (const PairTerm& t : h.comult[a]) {
      fwd.push_back({{t.left, t.right}, t.coeff.angle});
      swp.push_back({{t.right, t.left}, t.coeff.angle});
    }
    normalize(fwd);
    normalize(swp);
    if (fwd != swp) return false;
  }
  return true;
}

std::string tensor_listing_text(const HopfStructureConstants& h) {
  std::ostringstream os;
  for (int a = 0; a < h.dim; ++a)
    for (int b = 0; b < h.dim; ++b)
      for (const Term& t : h.prod(a, b))
        os << "m " << a << ' ' << b << ' ' << t.basis << ' ' << t.coeff.str() << '\n';
  for (int a = 0; a < h.dim; ++a)
    for (const PairTerm& t : h.comult[a])
      os << "d " << a << ' ' << t.left << ' ' << t.right << ' ' << t.coeff.str() << '\n';
  return os.str();
}

}  // namespace hopfpqr
