#include "hopfpqr/morita.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "hopfpqr/catalog.hpp"
#include "hopfpqr/cohomology.hpp"
#include "hopfpqr/isomorphism.hpp"
#include "hopfpqr/products.hpp"

namespace hopfpqr {

std::vector<MoritaWitness> morita_neighbors(const GroupRef& g) {
  if (!g->has_table()) throw std::invalid_argument("requires table form");
  std::vector<MoritaWitness> out;
  for (const auto& h : normal_abelian_subgroups(g)) {
    MoritaWitness w;
    w.source = g;
    w.H = h;
    if (h.order() == 1) {
      // trivial H: the dual is trivial and the target is G itself
      w.K = whole_subgroup(g);
      w.target = g;
      out.push_back(std::move(w));
      continue;
    }
    GroupRef hg = subgroup_group(h);
    CohomologyGroup coh = h2_any(hg);
    if (!coh.invariant_factors.empty())
      throw std::logic_error("normal abelian subgroup with nontrivial classes");
    w.K = complement(g, h);
    GroupRef kg = subgroup_group(w.K);
    CharacterGroup dual = character_group(hg);
    // conj[x][a] = x a x^-1 in local H indices, x running over K
    std::vector<std::vector<Elem>> conj(w.K.order(), std::vector<Elem>(h.order()));
    for (long long x = 0; x < w.K.order(); ++x)
      for (long long a = 0; a < h.order(); ++a) {
        Elem moved = g->conj(h.members[a], w.K.members[x]);
        int li = h.local_index(moved);
        if (li < 0) throw std::logic_error("complement does not normalize H");
        conj[x][a] = li;
      }
    // dual_action expects conj indexed by acting element first
    std::vector<std::vector<Elem>> act = dual.dual_action(conj);
    w.target = semidirect_product(dual.dual, kg, act);
    out.push_back(std::move(w));
  }
  return out;
}

GroupRef gtilde(const GroupRef& g4, long long q) {
  for (const auto& w : morita_neighbors(g4))
    if (w.H.order() == q) return w.target;
  throw std::invalid_argument("no normal subgroup of that order");
}

std::vector<TripleNeighbor> morita_neighbors_structured(const TripleForm& g4) {
  if (g4.alpha != 1) throw std::invalid_argument("expected a G4-family triple form");
  std::vector<TripleNeighbor> out;
  // H = <a> (order p): the dual inverts the exponent on the p-part
  out.push_back({TripleForm{g4.p, g4.q, g4.r, 1, mod_inv(g4.beta, g4.p), g4.gamma}, "Zp"});
  // H = <b> (order q)
  out.push_back({TripleForm{g4.p, g4.q, g4.r, 1, g4.beta, mod_inv(g4.gamma, g4.q)}, "Zq"});
  // H = <a, b> (order pq): both exponents invert
  out.push_back(
      {TripleForm{g4.p, g4.q, g4.r, 1, mod_inv(g4.beta, g4.p), mod_inv(g4.gamma, g4.q)}, "Zpq"});
  return out;
}

namespace {

int locate_iso_class(const std::vector<GroupRef>& catalog, const GroupRef& g) {
  for (int i = 0; i < static_cast<int>(catalog.size()); ++i)
    if (is_isomorphic(catalog[i], g).isomorphic) return i;
  return -1;
}

}  // namespace

MoritaPartition morita_partition(long long p, long long q, long long r) {
  MoritaPartition part;
  part.p = p;
  part.q = q;
  part.r = r;
  part.catalog = from_catalog(p, q, r);
  int ng = static_cast<int>(part.catalog.size());

  // nodes: k[G], k^G per group, then the two abelian extensions if present
  for (const auto& g : part.catalog) {
    part.nodes.push_back(HopfDescriptor::group_algebra(g));
    part.nodes.push_back(HopfDescriptor::dual_group_algebra(g));
  }
  bool has_a = (p - 1) % (q * r) == 0;
  int a_qr = -1, a_rq = -1;
  if (has_a) {
    a_qr = static_cast<int>(part.nodes.size());
    part.nodes.push_back(HopfDescriptor::abelian_ext(p, q, r));
    a_rq = static_cast<int>(part.nodes.size());
    part.nodes.push_back(HopfDescriptor::abelian_ext(p, r, q));
  }

  std::vector<int> parent(part.nodes.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b, std::string why) {
    part.edges.push_back({a, b, std::move(why)});
    parent[find(a)] = find(b);
  };

  // a group algebra and its dual are categorically Morita equivalent
  for (int i = 0; i < ng; ++i) unite(2 * i, 2 * i + 1, "dual pair");

  // group-theoretic neighbors
  for (int i = 0; i < ng; ++i) {
    for (const auto& w : morita_neighbors(part.catalog[i])) {
      int j = locate_iso_class(part.catalog, w.target);
      if (j < 0) throw std::logic_error("neighbor target escapes the catalog");
      if (j != i)
        unite(2 * i, 2 * j, "dual of order-" + std::to_string(w.H.order()) + " normal subgroup");
    }
  }

  // the abelian extensions pair with each other and with k[Z_p x| Z_qr]
  if (has_a) {
    unite(a_qr, a_rq, "dual abelian extensions");
    GroupRef big = a_family_category_group(p, q, r).first;
    int j = locate_iso_class(part.catalog, big);
    if (j < 0) throw std::logic_error("bicrossed group escapes the catalog");
    unite(a_qr, 2 * j, "representation category of the abelian extension");
  }

  std::vector<std::vector<int>> buckets(part.nodes.size());
  for (int i = 0; i < static_cast<int>(part.nodes.size()); ++i) buckets[find(i)].push_back(i);
  for (auto& b : buckets)
    if (!b.empty()) part.classes.push_back(std::move(b));
  std::sort(part.classes.begin(), part.classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return part;
}

bool abelian_isolation_check(const MoritaPartition& partition) {
  int abelian = -1;
  for (int i = 0; i < static_cast<int>(partition.catalog.size()); ++i)
    if (partition.catalog[i]->is_abelian()) abelian = i;
  if (abelian < 0) return false;
  for (const auto& cls : partition.classes) {
    if (std::find(cls.begin(), cls.end(), 2 * abelian) != cls.end())
      return cls.size() == 2 &&
             std::find(cls.begin(), cls.end(), 2 * abelian + 1) != cls.end();
  }
  return false;
}

}  // namespace hopfpqr
