#include "hopfpqr/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "hopfpqr/subgroup.hpp"

namespace hopfpqr {

namespace {

struct Profile {
  long long order;
  long long class_size;
  bool operator<(const Profile& o) const {
    return std::tie(order, class_size) < std::tie(o.order, o.class_size);
  }
  bool operator==(const Profile& o) const {
    return order == o.order && class_size == o.class_size;
  }
};

std::vector<Profile> element_profiles(const GroupRef& g) {
  std::vector<Profile> p(g->order());
  for (const auto& cls : g->conjugacy_classes()) {
    for (Elem e : cls) {
      p[e].class_size = static_cast<long long>(cls.size());
      p[e].order = g->element_order(e);
    }
  }
  return p;
}

// breadth-first word structure over a generating set
struct Words {
  std::vector<Elem> order;                  // visit order, order[0] = 0
  std::vector<std::pair<Elem, int>> from;   // element -> (previous element, generator index)
};

Words bfs_words(const GroupRef& g, const std::vector<Elem>& gens) {
  Words w;
  w.from.assign(g->order(), {-1, -1});
  std::vector<char> seen(g->order(), 0);
  seen[0] = 1;
  w.order.push_back(0);
  for (size_t head = 0; head < w.order.size(); ++head) {
    Elem x = w.order[head];
    for (int gi = 0; gi < static_cast<int>(gens.size()); ++gi) {
      Elem y = g->mul(x, gens[gi]);
      if (!seen[y]) {
        seen[y] = 1;
        w.from[y] = {x, gi};
        w.order.push_back(y);
      }
    }
  }
  return w;
}

bool extend_and_check(const GroupRef& g, const GroupRef& h, const Words& words,
                      const std::vector<Elem>& images, std::vector<Elem>& phi) {
  long long n = g->order();
  phi.assign(n, -1);
  phi[0] = 0;
  for (size_t i = 1; i < words.order.size(); ++i) {
    Elem y = words.order[i];
    auto [prev, gi] = words.from[y];
    phi[y] = h->mul(phi[prev], images[gi]);
  }
  std::vector<char> hit(n, 0);
  for (Elem x = 0; x < n; ++x) {
    if (phi[x] < 0 || hit[phi[x]]) return false;
    hit[phi[x]] = 1;
  }
  // spot-check a diagonal stripe first, then the full table
  for (Elem a = 0; a < n; ++a) {
    Elem b = static_cast<Elem>((a * 37 + 11) % n);
    if (phi[g->mul(a, b)] != h->mul(phi[a], phi[b])) return false;
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (phi[g->mul(a, b)] != h->mul(phi[a], phi[b])) return false;
  return true;
}

}  // namespace

IsoResult is_isomorphic(const GroupRef& g, const GroupRef& h) {
  if (!g->has_table() || !h->has_table()) throw std::invalid_argument("requires table form");
  IsoResult res;
  long long n = g->order();
  if (n != h->order()) return res;
  if (g->order_histogram() != h->order_histogram()) return res;
  if (g->center().size() != h->center().size()) return res;
  if (g->conjugacy_size_multiset() != h->conjugacy_size_multiset()) return res;
  if (derived_subgroup(g).order() != derived_subgroup(h).order()) return res;

  std::vector<Elem> gens = g->generators();
  Words words = bfs_words(g, gens);
  std::vector<Profile> pg = element_profiles(g), ph = element_profiles(h);

  std::vector<std::vector<Elem>> cands(gens.size());
  for (size_t i = 0; i < gens.size(); ++i) {
    for (Elem x = 0; x < n; ++x)
      if (ph[x] == pg[gens[i]]) cands[i].push_back(x);
    if (cands[i].empty()) return res;
  }

  // order of pairwise generator products, used as a cheap relation filter
  std::vector<std::vector<long long>> pair_ord(gens.size(),
                                               std::vector<long long>(gens.size()));
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = 0; j < gens.size(); ++j)
      pair_ord[i][j] = g->element_order(g->mul(gens[i], gens[j]));

  std::vector<Elem> images(gens.size(), -1), phi;
  std::function<bool(size_t)> dfs = [&](size_t pos) -> bool {
    if (pos == gens.size()) return extend_and_check(g, h, words, images, phi);
    for (Elem cand : cands[pos]) {
      images[pos] = cand;
      bool ok = true;
      for (size_t j = 0; j <= pos && ok; ++j) {
        ok &= h->element_order(h->mul(images[j], cand)) == pair_ord[j][pos];
        ok &= h->element_order(h->mul(cand, images[j])) == pair_ord[pos][j];
      }
      if (ok && dfs(pos + 1)) return true;
    }
    images[pos] = -1;
    return false;
  };
  if (dfs(0)) {
    res.isomorphic = true;
    res.map = phi;
  }
  return res;
}

}  // namespace hopfpqr
