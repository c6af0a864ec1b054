#include "hopfpqr/fiber.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace hopfpqr {

GTCategoryData make_category(const GroupRef& g, const Subgroup& f) {
  if (f.parent.get() != g.get() || !is_subgroup(f)) throw std::invalid_argument("F must be a subgroup of G");
  return GTCategoryData{g, f};
}

namespace {

struct RawWitness {
  Subgroup L;
  Cocycle beta;
};

// union-find over witnesses under (L, beta) -> (g^-1 L g, beta^g)
std::vector<FiberFunctorWitness> quotient_by_conjugation(const GroupRef& g,
                                                         std::vector<RawWitness> raw) {
  int n = static_cast<int>(raw.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

  // group indices by member set for fast lookup
  std::map<std::vector<Elem>, std::vector<int>> by_members;
  for (int i = 0; i < n; ++i) by_members[raw[i].L.members].push_back(i);

  for (int i = 0; i < n; ++i) {
    bool trivial_class =
        std::all_of(raw[i].beta.values.begin(), raw[i].beta.values.end(),
                    [](long long v) { return v == 0; });
    for (Elem x = 0; x < g->order(); ++x) {
      Subgroup moved = conjugate_subgroup(g, raw[i].L, x);
      auto it = by_members.find(moved.members);
      if (it == by_members.end()) continue;
      if (trivial_class && it->second.size() == 1 &&
          std::all_of(raw[it->second[0]].beta.values.begin(),
                      raw[it->second[0]].beta.values.end(),
                      [](long long v) { return v == 0; })) {
        unite(i, it->second[0]);  // transport of the zero class is the zero class
        continue;
      }
      Cocycle transported = conj_transport_subgroup(raw[i].L, raw[i].beta, x).second;
      for (int j : it->second)
        if (is_cohomologous(raw[j].beta, transported)) unite(i, j);
    }
  }

  std::map<int, int> canon;  // class root -> chosen witness
  for (int i = 0; i < n; ++i) {
    int root = find(i);
    auto it = canon.find(root);
    if (it == canon.end()) {
      canon[root] = i;
      continue;
    }
    const auto& best = raw[it->second];
    if (std::tie(raw[i].L.members, raw[i].beta.values) <
        std::tie(best.L.members, best.beta.values))
      it->second = i;
  }
  std::vector<FiberFunctorWitness> out;
  for (auto& [root, idx] : canon) out.push_back({raw[idx].L, raw[idx].beta});
  std::sort(out.begin(), out.end(), [](const FiberFunctorWitness& a, const FiberFunctorWitness& b) {
    if (a.L.order() != b.L.order()) return a.L.order() < b.L.order();
    return std::tie(a.L.members, a.beta.values) < std::tie(b.L.members, b.beta.values);
  });
  return out;
}

}  // namespace

std::vector<FiberFunctorWitness> fiber_functors(const GTCategoryData& cat) {
  const GroupRef& g = cat.G;
  std::vector<RawWitness> raw;
  for (const auto& l : subgroups(g)) {
    Subgroup inter = intersect(l, cat.F);
    if (l.order() * cat.F.order() != g->order() * inter.order()) continue;
    if (!product_covers(g, l, cat.F)) continue;
    GroupRef lg = subgroup_group(l);
    CohomologyGroup coh = h2_any(lg);
    // restriction target: F meet L inside the local group
    std::vector<Elem> local;
    for (Elem m : inter.members) local.push_back(static_cast<Elem>(l.local_index(m)));
    std::sort(local.begin(), local.end());
    Subgroup local_inter{lg, local};
    for (auto& beta : all_class_reps(coh)) {
      Cocycle restr = restrict_cocycle(beta, local_inter);
      if (is_nondegenerate(restr)) raw.push_back({l, beta});
    }
  }
  return quotient_by_conjugation(g, std::move(raw));
}

std::vector<FiberFunctorWitness> nondeg_pairs(const GroupRef& g) {
  std::vector<RawWitness> raw;
  for (const auto& s : subgroups(g)) {
    GroupRef sg = subgroup_group(s);
    CohomologyGroup coh = h2_any(sg);
    for (auto& beta : all_class_reps(coh))
      if (is_nondegenerate(beta)) raw.push_back({s, beta});
  }
  return quotient_by_conjugation(g, std::move(raw));
}

std::string HopfDescriptor::name() const {
  switch (kind) {
    case Kind::GroupAlgebra:
      return "k[" + group->name() + "]";
    case Kind::DualGroupAlgebra:
      return "k^[" + group->name() + "]";
    case Kind::AbelianExt:
      return "A_" + std::to_string(p) + "(" + std::to_string(first) + ";" +
             std::to_string(second) + ")";
  }
  return "?";
}

HopfDescriptor HopfDescriptor::group_algebra(const GroupRef& g) {
  HopfDescriptor d;
  d.kind = Kind::GroupAlgebra;
  d.group = g;
  return d;
}

HopfDescriptor HopfDescriptor::dual_group_algebra(const GroupRef& g) {
  HopfDescriptor d;
  d.kind = Kind::DualGroupAlgebra;
  d.group = g;
  return d;
}

HopfDescriptor HopfDescriptor::abelian_ext(long long p, long long first, long long second) {
  HopfDescriptor d;
  d.kind = Kind::AbelianExt;
  d.p = p;
  d.first = first;
  d.second = second;
  return d;
}

std::pair<GroupRef, Subgroup> a_family_category_group(long long p, long long first,
                                                      long long second) {
  MatchedPair mp = a_family_matched_pair(p, first, second);
  GroupRef g = bicrossed_product(mp);
  long long ng = mp.Gamma->order();
  std::vector<Elem> f_members;
  for (Elem x = 0; x < mp.F->order(); ++x) f_members.push_back(static_cast<Elem>(x * ng));
  std::sort(f_members.begin(), f_members.end());
  return {g, Subgroup{g, std::move(f_members)}};
}

long long galois_object_count(const HopfDescriptor& h) {
  switch (h.kind) {
    case HopfDescriptor::Kind::GroupAlgebra:
    case HopfDescriptor::Kind::DualGroupAlgebra:
      return static_cast<long long>(nondeg_pairs(h.group).size());
    case HopfDescriptor::Kind::AbelianExt: {
      // Galois objects of A_p(first; second) = fiber functors on the
      // representation category of its dual A_p(second; first).
      auto [g, f] = a_family_category_group(h.p, h.second, h.first);
      return static_cast<long long>(fiber_functors(make_category(g, f)).size());
    }
  }
  throw std::invalid_argument("unknown descriptor");
}

}  // namespace hopfpqr
