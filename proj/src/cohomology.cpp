#include "hopfpqr/cohomology.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hopfpqr {

Cocycle zero_cocycle(const GroupRef& l) {
  Cocycle c;
  c.group = l;
  c.modulus = l->order();
  c.values.assign(static_cast<size_t>(l->order()) * l->order(), 0);
  return c;
}

bool is_normalized(const Cocycle& c) {
  long long n = c.group->order();
  for (Elem g = 0; g < n; ++g)
    if (c.at(g, 0) != 0 || c.at(0, g) != 0) return false;
  return true;
}

bool is_cocycle(const Cocycle& c) {
  if (!is_normalized(c)) return false;
  const auto& g = *c.group;
  long long n = g.order(), N = c.modulus;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem d = 0; d < n; ++d) {
        long long lhs = (c.at(a, b) + c.at(g.mul(a, b), d)) % N;
        long long rhs = (c.at(b, d) + c.at(a, g.mul(b, d))) % N;
        if (lhs != rhs) return false;
      }
  return true;
}

Cocycle add_cocycles(const Cocycle& a, const Cocycle& b, long long scale_b) {
  if (a.group->order() != b.group->order() || a.modulus != b.modulus)
    throw std::invalid_argument("mismatched groups");
  Cocycle out = a;
  for (size_t i = 0; i < out.values.size(); ++i)
    out.values[i] = mod_reduce(out.values[i] + scale_b * b.values[i], a.modulus);
  return out;
}

Cocycle coboundary(const GroupRef& l, long long n, const std::vector<long long>& chain) {
  if (static_cast<long long>(chain.size()) != l->order() || chain[0] % n != 0)
    throw std::invalid_argument("bad 1-cochain");
  Cocycle c = zero_cocycle(l);
  c.modulus = n;
  for (Elem g = 0; g < l->order(); ++g)
    for (Elem h = 0; h < l->order(); ++h)
      c.values[static_cast<size_t>(g) * l->order() + h] =
          mod_reduce(chain[g] + chain[h] - chain[l->mul(g, h)], n);
  return c;
}

Mat character_table_generators(const GroupRef& l, long long n) {
  long long ord = l->order();
  if (ord == 1) return {};
  Mat eqs;
  for (Elem g = 1; g < ord; ++g)
    for (Elem h = 1; h < ord; ++h) {
      Vec row(ord - 1, 0);
      row[g - 1] += 1;
      row[h - 1] += 1;
      Elem gh = l->mul(g, h);
      if (gh != 0) row[gh - 1] -= 1;
      for (auto& v : row) v = mod_reduce(v, n);
      eqs.push_back(std::move(row));
    }
  Mat ker = zn_kernel(eqs, static_cast<int>(ord - 1), n);
  Mat tables;
  for (auto& k : ker) {
    Vec t(ord, 0);
    for (Elem g = 1; g < ord; ++g) t[g] = k[g - 1];
    tables.push_back(std::move(t));
  }
  return tables;
}

Cocycle fractional_coboundary(const GroupRef& l, long long n, const Vec& chi) {
  Cocycle c = zero_cocycle(l);
  c.modulus = n;
  long long ord = l->order();
  for (Elem g = 0; g < ord; ++g)
    for (Elem h = 0; h < ord; ++h) {
      long long raw = chi[g] + chi[h] - chi[l->mul(g, h)];
      if (raw % n != 0) throw std::logic_error("not a character table");
      c.values[static_cast<size_t>(g) * ord + h] = mod_reduce(raw / n, n);
    }
  return c;
}

namespace {

// Breadth-first factorization y = w * s over a generating set.
struct Factorization {
  std::vector<Elem> order;                 // visit order, order[0] = 0
  std::vector<std::pair<Elem, int>> from;  // y -> (w, generator index)
};

Factorization bfs_factorize(const GroupRef& g, const std::vector<Elem>& gens) {
  Factorization f;
  f.from.assign(g->order(), {-1, -1});
  std::vector<char> seen(g->order(), 0);
  seen[0] = 1;
  f.order.push_back(0);
  for (size_t head = 0; head < f.order.size(); ++head) {
    Elem w = f.order[head];
    for (int gi = 0; gi < static_cast<int>(gens.size()); ++gi) {
      Elem y = g->mul(w, gens[gi]);
      if (!seen[y]) {
        seen[y] = 1;
        f.from[y] = {w, gi};
        f.order.push_back(y);
      }
    }
  }
  if (f.order.size() != static_cast<size_t>(g->order()))
    throw std::logic_error("generating set does not generate");
  return f;
}

}  // namespace

CohomologyGroup h2(const GroupRef& l) {
  long long n = l->order();
  if (n > kH2BruteLimit) throw std::invalid_argument("use metacyclic formula");
  CohomologyGroup out;
  out.group = l;
  if (n == 1) return out;
  long long N = n;

  std::vector<Elem> gens = l->generators();
  int ngen = static_cast<int>(gens.size());
  Factorization fac = bfs_factorize(l, gens);
  std::vector<int> gen_index(n, -1);
  for (int i = 0; i < ngen; ++i) gen_index[gens[i]] = i;

  // every normalized cocycle is a linear function of its generator columns
  int P = static_cast<int>((n - 1) * ngen);
  auto pid = [&](Elem g, int gi) { return static_cast<int>((g - 1) * ngen + gi); };

  // expand[g*n + y] = the value B[g][y] as a linear form in the parameters
  std::vector<Vec> expand(static_cast<size_t>(n) * n, Vec(P, 0));
  for (size_t pos = 1; pos < fac.order.size(); ++pos) {
    Elem y = fac.order[pos];
    auto [w, gi] = fac.from[y];
    if (w == 0) {
      for (Elem g = 1; g < n; ++g) expand[static_cast<size_t>(g) * n + y][pid(g, gi)] = 1;
      continue;
    }
    Elem s = gens[gi];
    for (Elem g = 1; g < n; ++g) {
      Vec& row = expand[static_cast<size_t>(g) * n + y];
      const Vec& a = expand[static_cast<size_t>(g) * n + w];
      Elem gw = l->mul(g, w);
      const Vec& b = expand[static_cast<size_t>(gw) * n + s];
      const Vec& c = expand[static_cast<size_t>(w) * n + s];
      for (int t = 0; t < P; ++t) row[t] = mod_reduce(a[t] + b[t] - c[t], N);
    }
  }

  // cocycle conditions with the third argument running over the generators
  Mat eqs;
  for (Elem g = 1; g < n; ++g)
    for (Elem h = 1; h < n; ++h)
      for (int gi = 0; gi < ngen; ++gi) {
        Elem s = gens[gi];
        Vec row(P, 0);
        const Vec& t1 = expand[static_cast<size_t>(g) * n + h];
        Elem gh = l->mul(g, h);
        const Vec& t2 = expand[static_cast<size_t>(gh) * n + s];
        const Vec& t3 = expand[static_cast<size_t>(h) * n + s];
        Elem hs = l->mul(h, s);
        const Vec& t4 = expand[static_cast<size_t>(g) * n + hs];
        bool nonzero = false;
        for (int t = 0; t < P; ++t) {
          row[t] = mod_reduce(t1[t] + t2[t] - t3[t] - t4[t], N);
          nonzero |= row[t] != 0;
        }
        if (nonzero) eqs.push_back(std::move(row));
      }

  Mat z_gens = zn_kernel(eqs, P, N);

  // coboundaries of the unit 1-cochains, projected onto the parameters
  Mat b_gens;
  for (Elem u = 1; u < n; ++u) {
    Vec row(P, 0);
    for (Elem g = 1; g < n; ++g)
      for (int gi = 0; gi < ngen; ++gi) {
        long long v = (g == u ? 1 : 0) + (gens[gi] == u ? 1 : 0) -
                      (l->mul(g, gens[gi]) == u ? 1 : 0);
        row[pid(g, gi)] = mod_reduce(v, N);
      }
    b_gens.push_back(std::move(row));
  }
  // fractional coboundaries of characters
  for (const auto& chi : character_table_generators(l, N)) {
    Cocycle v = fractional_coboundary(l, N, chi);
    Vec row(P, 0);
    for (Elem g = 1; g < n; ++g)
      for (int gi = 0; gi < ngen; ++gi) row[pid(g, gi)] = v.at(g, gens[gi]);
    b_gens.push_back(std::move(row));
  }

  ZnQuotient quot = zn_quotient(z_gens, b_gens, P, N);
  out.invariant_factors = quot.factors;
  for (const auto& params : quot.reps) {
    Cocycle rep = zero_cocycle(l);
    for (Elem g = 1; g < n; ++g)
      for (Elem y = 1; y < n; ++y) {
        const Vec& form = expand[static_cast<size_t>(g) * n + y];
        __int128 acc = 0;
        for (int t = 0; t < P; ++t) acc += static_cast<__int128>(form[t]) * params[t];
        rep.values[static_cast<size_t>(g) * n + y] =
            mod_reduce(static_cast<long long>(acc % N), N);
      }
    if (!is_cocycle(rep)) throw std::logic_error("representative fails the cocycle condition");
    out.representatives.push_back(std::move(rep));
  }
  return out;
}

CohomologyGroup schur_multiplier_metacyclic(const MetacyclicParams& params) {
  long long h = schur_h(params.m, params.n, params.r);
  long long d = std::gcd(std::abs(params.lambda), h);
  if (d == 0) d = h;
  CohomologyGroup out;
  if (params.m * params.n <= table_threshold()) out.group = FiniteGroup::metacyclic(params);
  if (d > 1) out.invariant_factors.push_back(d);
  return out;
}

std::optional<MetacyclicParams> derive_metacyclic_params(const GroupRef& g) {
  long long n = g->order();
  if (n == 1) return MetacyclicParams(1, 1, 1, 1);
  if (g->is_abelian()) {
    for (Elem x = 0; x < n; ++x)
      if (g->element_order(x) == n) return MetacyclicParams(1, n, 1, 1);
    return std::nullopt;
  }
  Subgroup d = derived_subgroup(g);
  Elem a0 = -1;
  for (Elem x : d.members)
    if (g->element_order(x) == d.order()) {
      a0 = x;
      break;
    }
  if (a0 < 0) return std::nullopt;  // derived subgroup not cyclic
  if (std::gcd(d.order(), n / d.order()) != 1) return std::nullopt;
  Subgroup k = complement(g, d);
  Elem b0 = -1;
  for (Elem x : k.members)
    if (g->element_order(x) == k.order()) {
      b0 = x;
      break;
    }
  if (b0 < 0) return std::nullopt;  // quotient not cyclic
  // b0 a0 b0^-1 = a0^rho
  Elem target = g->conj(a0, b0);
  long long rho = -1;
  Elem v = 0;
  for (long long e = 0; e < d.order(); ++e) {
    if (v == target) {
      rho = e;
      break;
    }
    v = g->mul(v, a0);
  }
  if (rho < 0) return std::nullopt;
  long long m = d.order();
  long long lambda = std::gcd(m, mod_reduce(rho - 1, m));
  return MetacyclicParams(m, k.order(), rho, lambda);
}

CohomologyGroup h2_any(const GroupRef& l) {
  if (l->order() <= kH2BruteLimit) return h2(l);
  if (is_squarefree(l->order())) {
    auto params = derive_metacyclic_params(l);
    if (!params) throw std::logic_error("square-free group without metacyclic parameters");
    CohomologyGroup coh = schur_multiplier_metacyclic(*params);
    if (!coh.invariant_factors.empty())
      throw std::logic_error("square-free group with nontrivial multiplier");
    return CohomologyGroup{l, {}, {}};
  }
  throw std::invalid_argument("use metacyclic formula");
}

std::vector<Cocycle> all_class_reps(const CohomologyGroup& coh) {
  if (!coh.group) throw std::invalid_argument("no representatives available");
  std::vector<Cocycle> out{zero_cocycle(coh.group)};
  for (size_t i = 0; i < coh.invariant_factors.size(); ++i) {
    std::vector<Cocycle> next;
    for (const auto& base : out)
      for (long long c = 0; c < coh.invariant_factors[i]; ++c)
        next.push_back(add_cocycles(base, coh.representatives[i], c));
    out = std::move(next);
  }
  return out;
}

Cocycle restrict_cocycle(const Cocycle& beta, const Subgroup& s) {
  if (s.parent.get() != beta.group.get()) throw std::invalid_argument("not a subgroup");
  if (!is_subgroup(s)) throw std::invalid_argument("not a subgroup");
  GroupRef local = subgroup_group(s);
  Cocycle out;
  out.group = local;
  out.modulus = beta.modulus;
  long long k = s.order();
  out.values.assign(static_cast<size_t>(k) * k, 0);
  for (long long i = 0; i < k; ++i)
    for (long long j = 0; j < k; ++j)
      out.values[static_cast<size_t>(i) * k + j] = beta.at(s.members[i], s.members[j]);
  return out;
}

Cocycle conj_transport(const Cocycle& beta, Elem g) {
  const GroupRef& grp = beta.group;
  Cocycle out = zero_cocycle(grp);
  out.modulus = beta.modulus;
  long long n = grp->order();
  for (Elem h = 0; h < n; ++h)
    for (Elem l = 0; l < n; ++l)
      out.values[static_cast<size_t>(h) * n + l] = beta.at(grp->conj(h, g), grp->conj(l, g));
  return out;
}

std::pair<Subgroup, Cocycle> conj_transport_subgroup(const Subgroup& l, const Cocycle& beta,
                                                     Elem g) {
  const GroupRef& parent = l.parent;
  Subgroup moved = conjugate_subgroup(parent, l, g);  // g^-1 L g
  GroupRef local = subgroup_group(moved);
  Cocycle out;
  out.group = local;
  out.modulus = beta.modulus;
  long long k = moved.order();
  out.values.assign(static_cast<size_t>(k) * k, 0);
  for (long long i = 0; i < k; ++i)
    for (long long j = 0; j < k; ++j) {
      Elem hi = parent->conj(moved.members[i], g);  // back inside L
      Elem hj = parent->conj(moved.members[j], g);
      int li = l.local_index(hi), lj = l.local_index(hj);
      if (li < 0 || lj < 0) throw std::logic_error("transport escapes the subgroup");
      out.values[static_cast<size_t>(i) * k + j] =
          beta.values[static_cast<size_t>(li) * l.order() + lj];
    }
  return {std::move(moved), std::move(out)};
}

bool is_cohomologous(const Cocycle& b1, const Cocycle& b2) {
  if (b1.group->order() != b2.group->order() || b1.modulus != b2.modulus)
    throw std::invalid_argument("mismatched groups");
  if (b1.values == b2.values) return true;
  const GroupRef& l = b1.group;
  long long n = l->order(), N = b1.modulus;
  if (n > kH2BruteLimit) {
    if (is_squarefree(n)) return true;  // trivial multiplier: every difference bounds
    throw std::invalid_argument("use metacyclic formula");
  }
  // solve  diff = delta(c) + sum_j d_j * frac_j  over Z_N
  std::vector<Cocycle> frac;
  for (const auto& chi : character_table_generators(l, N))
    frac.push_back(fractional_coboundary(l, N, chi));
  int cols = static_cast<int>(n - 1 + frac.size());
  Mat a;
  Vec rhs;
  for (Elem g = 1; g < n; ++g)
    for (Elem h = 1; h < n; ++h) {
      Vec row(cols, 0);
      row[g - 1] += 1;
      row[h - 1] += 1;
      Elem gh = l->mul(g, h);
      if (gh != 0) row[gh - 1] -= 1;
      for (auto& v : row) v = mod_reduce(v, N);
      for (size_t j = 0; j < frac.size(); ++j) row[n - 1 + j] = frac[j].at(g, h);
      a.push_back(std::move(row));
      rhs.push_back(mod_reduce(b2.at(g, h) - b1.at(g, h), N));
    }
  return zn_solve(a, rhs, N).has_value();
}

bool is_nondegenerate(const Cocycle& beta) {
  const GroupRef& l = beta.group;
  long long N = beta.modulus;
  long long regular = 0;
  for (const auto& cls : l->conjugacy_classes()) {
    Elem g = cls.front();
    bool reg = true;
    for (Elem h : l->centralizer(g))
      if (mod_reduce(beta.at(g, h) - beta.at(h, g), N) != 0) {
        reg = false;
        break;
      }
    if (reg) ++regular;
  }
  return regular == 1;
}

}  // namespace hopfpqr
