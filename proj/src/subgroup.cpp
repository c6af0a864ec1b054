#include "hopfpqr/subgroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace hopfpqr {

bool Subgroup::contains(Elem g) const {
  return std::binary_search(members.begin(), members.end(), g);
}

int Subgroup::local_index(Elem g) const {
  auto it = std::lower_bound(members.begin(), members.end(), g);
  if (it == members.end() || *it != g) return -1;
  return static_cast<int>(it - members.begin());
}

Subgroup whole_subgroup(const GroupRef& g) {
  Subgroup s{g, {}};
  s.members.resize(g->order());
  for (Elem i = 0; i < g->order(); ++i) s.members[i] = i;
  return s;
}

Subgroup trivial_subgroup(const GroupRef& g) { return Subgroup{g, {0}}; }

Subgroup closure_subgroup(const GroupRef& g, const std::vector<Elem>& gens) {
  if (!g->has_table()) throw std::invalid_argument("requires table form");
  // every positive word in the generators; closed in a finite group
  std::vector<char> in(g->order(), 0);
  in[0] = 1;
  std::vector<Elem> closure{0};
  for (size_t head = 0; head < closure.size(); ++head)
    for (Elem s : gens) {
      Elem z = g->mul(closure[head], s);
      if (!in[z]) {
        in[z] = 1;
        closure.push_back(z);
      }
    }
  std::sort(closure.begin(), closure.end());
  return Subgroup{g, std::move(closure)};
}

GroupRef subgroup_group(const Subgroup& s) {
  const auto& m = s.members;
  long long k = s.order();
  return FiniteGroup::from_mult(
      k,
      [&](Elem a, Elem b) {
        Elem p = s.parent->mul(m[a], m[b]);
        int idx = s.local_index(p);
        if (idx < 0) throw std::logic_error("member set not closed");
        return static_cast<Elem>(idx);
      },
      "sub" + std::to_string(k) + "of" + s.parent->name(), "subgroup");
}

bool is_subgroup(const Subgroup& s) {
  if (s.members.empty() || s.members[0] != 0) return false;
  if (s.parent->order() % s.order() != 0) return false;
  for (Elem a : s.members) {
    if (!s.contains(s.parent->inv(a))) return false;
    for (Elem b : s.members)
      if (!s.contains(s.parent->mul(a, b))) return false;
  }
  return true;
}

bool is_normal(const GroupRef& g, const Subgroup& s) {
  if (s.parent.get() != g.get() || !is_subgroup(s)) throw std::invalid_argument("not a subgroup");
  for (Elem x = 0; x < g->order(); ++x)
    for (Elem a : s.members)
      if (!s.contains(g->conj(a, x))) return false;
  return true;
}

bool is_abelian_subgroup(const Subgroup& s) {
  for (Elem a : s.members)
    for (Elem b : s.members)
      if (s.parent->mul(a, b) != s.parent->mul(b, a)) return false;
  return true;
}

bool is_cyclic_subgroup(const Subgroup& s) {
  for (Elem a : s.members)
    if (s.parent->element_order(a) == s.order()) return true;
  return false;
}

std::vector<Subgroup> subgroups(const GroupRef& g) {
  if (!g->has_table()) throw std::invalid_argument("requires table form");
  if (auto cached = g->subgroup_cache()) {
    std::vector<Subgroup> out;
    for (const auto& m : *cached) out.push_back(Subgroup{g, m});
    return out;
  }
  long long n = g->order();

  // distinct cyclic subgroups, each with one generator
  std::map<std::vector<Elem>, Elem> cyclic;
  for (Elem x = 0; x < n; ++x) {
    std::vector<Elem> cyc;
    Elem v = 0;
    do {
      cyc.push_back(v);
      v = g->mul(v, x);
    } while (v != 0);
    std::sort(cyc.begin(), cyc.end());
    cyclic.emplace(std::move(cyc), x);
  }

  // pairwise joins; complete because every subgroup here is 2-generated
  std::set<std::vector<Elem>> all;
  for (const auto& [members, x] : cyclic) all.insert(members);
  for (auto i = cyclic.begin(); i != cyclic.end(); ++i)
    for (auto j = std::next(i); j != cyclic.end(); ++j)
      all.insert(closure_subgroup(g, {i->second, j->second}).members);

  auto cache = std::make_shared<std::vector<std::vector<Elem>>>(all.begin(), all.end());
  std::sort(cache->begin(), cache->end(),
            [](const std::vector<Elem>& a, const std::vector<Elem>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  g->set_subgroup_cache(cache);
  std::vector<Subgroup> out;
  for (const auto& m : *cache) out.push_back(Subgroup{g, m});
  return out;
}

std::vector<Subgroup> normal_abelian_subgroups(const GroupRef& g) {
  std::vector<Subgroup> out;
  for (auto& s : subgroups(g))
    if (is_normal(g, s) && is_abelian_subgroup(s)) out.push_back(std::move(s));
  return out;
}

Subgroup complement(const GroupRef& g, const Subgroup& n) {
  if (!is_normal(g, n)) throw std::invalid_argument("not a normal subgroup");
  long long want = g->order() / n.order();
  if (std::gcd(want, n.order()) != 1)
    throw std::invalid_argument("complement needs coprime order and index");
  for (const auto& k : subgroups(g)) {
    if (k.order() != want) continue;
    if (intersect(k, n).order() == 1) return k;
  }
  throw std::logic_error("no complement found");
}

Subgroup conjugate_subgroup(const GroupRef& g, const Subgroup& s, Elem x) {
  std::vector<Elem> m;
  Elem xi = g->inv(x);
  for (Elem a : s.members) m.push_back(g->mul(g->mul(xi, a), x));
  std::sort(m.begin(), m.end());
  return Subgroup{g, std::move(m)};
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  std::vector<Elem> m;
  std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                        std::back_inserter(m));
  return Subgroup{a.parent, std::move(m)};
}

bool product_covers(const GroupRef& g, const Subgroup& l, const Subgroup& f) {
  std::vector<char> hit(g->order(), 0);
  long long count = 0;
  for (Elem a : l.members)
    for (Elem b : f.members) {
      Elem p = g->mul(a, b);
      if (!hit[p]) {
        hit[p] = 1;
        ++count;
      }
    }
  return count == g->order();
}

Subgroup derived_subgroup(const GroupRef& g) {
  std::vector<Elem> comms;
  for (Elem a = 0; a < g->order(); ++a)
    for (Elem b = 0; b < g->order(); ++b)
      comms.push_back(g->mul(g->mul(a, b), g->inv(g->mul(b, a))));
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  return closure_subgroup(g, comms);
}

std::vector<std::vector<int>> subgroup_conjugacy_classes(const GroupRef& g,
                                                         const std::vector<Subgroup>& subs) {
  std::map<std::vector<Elem>, int> index;
  for (int i = 0; i < static_cast<int>(subs.size()); ++i) index[subs[i].members] = i;
  std::vector<char> used(subs.size(), 0);
  std::vector<std::vector<int>> classes;
  for (int i = 0; i < static_cast<int>(subs.size()); ++i) {
    if (used[i]) continue;
    std::set<int> cls;
    for (Elem x = 0; x < g->order(); ++x) {
      auto c = conjugate_subgroup(g, subs[i], x);
      auto it = index.find(c.members);
      if (it == index.end()) throw std::logic_error("conjugate escapes the subgroup list");
      cls.insert(it->second);
    }
    std::vector<int> v(cls.begin(), cls.end());
    for (int e : v) used[e] = 1;
    classes.push_back(std::move(v));
  }
  return classes;
}

}  // namespace hopfpqr
