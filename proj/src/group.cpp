#include "hopfpqr/group.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hopfpqr {

namespace {
std::atomic<long long> g_table_threshold{5000};

void check_group_axioms(const FiniteGroup& g) {
  long long n = g.order();
  for (Elem a = 0; a < n; ++a) {
    if (g.mul(0, a) != a || g.mul(a, 0) != a) throw std::logic_error("element 0 is not an identity");
  }
  // exhaustive associativity for small orders, sampled above that
  if (n <= 200) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c)
          if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
            throw std::logic_error("multiplication is not associative");
  } else {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<long long> pick(0, n - 1);
    for (int t = 0; t < 100000; ++t) {
      Elem a = static_cast<Elem>(pick(rng)), b = static_cast<Elem>(pick(rng)),
           c = static_cast<Elem>(pick(rng));
      if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
        throw std::logic_error("multiplication is not associative");
    }
  }
}
}  // namespace

long long table_threshold() { return g_table_threshold.load(); }
void set_table_threshold(long long t) {
  if (t < 1) throw std::invalid_argument("threshold must be positive");
  g_table_threshold.store(t);
}

Elem FiniteGroup::triple_mul(Elem a, Elem b) const {
  const TripleForm& f = *triple_;
  long long qr = f.q * f.r;
  long long i1 = a / qr, j1 = (a / f.r) % f.q, k1 = a % f.r;
  long long i2 = b / qr, j2 = (b / f.r) % f.q, k2 = b % f.r;
  long long i = (i1 + i2 * beta_pow_[k1] % f.p * alpha_pow_[j1]) % f.p;
  long long j = (j1 + j2 * gamma_pow_[k1]) % f.q;
  long long k = (k1 + k2) % f.r;
  return static_cast<Elem>((i * f.q + j) * f.r + k);
}

Elem FiniteGroup::mul(Elem a, Elem b) const {
  if (!table_.empty()) return table_[static_cast<size_t>(a) * order_ + b];
  return triple_mul(a, b);
}

Elem FiniteGroup::inv(Elem a) const {
  if (!inverse_.empty()) return inverse_[a];
  const TripleForm& f = *triple_;
  long long qr = f.q * f.r;
  long long i = a / qr, j = (a / f.r) % f.q, k = a % f.r;
  long long ks = (f.r - k) % f.r;
  long long js = (f.q - j * gamma_pow_[ks] % f.q) % f.q;
  long long is = (f.p - i * beta_pow_[ks] % f.p * alpha_pow_[(f.q - j) % f.q] % f.p) % f.p;
  Elem cand = static_cast<Elem>((is * f.q + js) * f.r + ks);
  if (triple_mul(a, cand) != 0) throw std::logic_error("triple inverse mismatch");
  return cand;
}

Elem FiniteGroup::pow(Elem a, long long e) const {
  if (e < 0) return pow(inv(a), -e);
  Elem acc = 0, base = a;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

long long FiniteGroup::element_order(Elem a) const {
  long long k = 1;
  Elem v = a;
  while (v != 0) {
    v = mul(v, a);
    ++k;
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  if (triple_) return triple_->alpha == 1 && triple_->beta == 1 && triple_->gamma == 1;
  for (Elem a = 0; a < order_; ++a)
    for (Elem b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<Elem> FiniteGroup::generators() const {
  if (triple_) {
    std::vector<Elem> gens;
    const TripleForm& f = *triple_;
    if (f.p > 1) gens.push_back(static_cast<Elem>(f.q * f.r));  // a
    if (f.q > 1) gens.push_back(static_cast<Elem>(f.r));        // b
    if (f.r > 1) gens.push_back(1);                             // c
    if (gens.empty()) gens.push_back(0);
    return gens;
  }
  // greedy closure
  std::vector<char> in(order_, 0);
  in[0] = 1;
  std::vector<Elem> closure{0}, gens;
  while (static_cast<long long>(closure.size()) < order_) {
    Elem next = 0;
    while (in[next]) ++next;
    gens.push_back(next);
    std::vector<Elem> frontier{next};
    in[next] = 1;
    closure.push_back(next);
    while (!frontier.empty()) {
      Elem x = frontier.back();
      frontier.pop_back();
      for (size_t idx = 0; idx < closure.size(); ++idx) {
        Elem y = closure[idx];
        for (Elem z : {mul(x, y), mul(y, x)}) {
          if (!in[z]) {
            in[z] = 1;
            closure.push_back(z);
            frontier.push_back(z);
          }
        }
      }
    }
  }
  if (gens.empty()) gens.push_back(0);
  return gens;
}

std::map<long long, long long> FiniteGroup::order_histogram() const {
  std::map<long long, long long> h;
  for (Elem a = 0; a < order_; ++a) ++h[element_order(a)];
  return h;
}

std::vector<Elem> FiniteGroup::center() const {
  std::vector<Elem> gens = generators();
  std::vector<Elem> z;
  for (Elem a = 0; a < order_; ++a) {
    bool central = true;
    for (Elem g : gens)
      if (mul(a, g) != mul(g, a)) {
        central = false;
        break;
      }
    if (central) z.push_back(a);
  }
  return z;
}

std::vector<std::vector<Elem>> FiniteGroup::conjugacy_classes() const {
  if (!has_table()) throw std::invalid_argument("requires table form");
  std::vector<char> seen(order_, 0);
  std::vector<std::vector<Elem>> classes;
  for (Elem g = 0; g < order_; ++g) {
    if (seen[g]) continue;
    std::set<Elem> cls;
    for (Elem x = 0; x < order_; ++x) cls.insert(conj(g, x));
    std::vector<Elem> v(cls.begin(), cls.end());
    for (Elem e : v) seen[e] = 1;
    classes.push_back(std::move(v));
  }
  return classes;
}

std::vector<long long> FiniteGroup::conjugacy_size_multiset() const {
  std::vector<long long> sizes;
  for (const auto& c : conjugacy_classes()) sizes.push_back(static_cast<long long>(c.size()));
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::vector<Elem> FiniteGroup::centralizer(Elem g) const {
  std::vector<Elem> out;
  for (Elem x = 0; x < order_; ++x)
    if (mul(x, g) == mul(g, x)) out.push_back(x);
  return out;
}

std::string FiniteGroup::cayley_text() const {
  if (!has_table()) throw std::invalid_argument("requires table form");
  std::ostringstream os;
  for (Elem a = 0; a < order_; ++a) {
    for (Elem b = 0; b < order_; ++b) {
      if (b) os << ' ';
      os << mul(a, b);
    }
    os << '\n';
  }
  return os.str();
}

void FiniteGroup::finish_table_init(bool check_axioms) {
  if (check_axioms) check_group_axioms(*this);
  inverse_.assign(order_, -1);
  for (Elem a = 0; a < order_; ++a) {
    for (Elem b = 0; b < order_; ++b)
      if (table_[static_cast<size_t>(a) * order_ + b] == 0) {
        if (table_[static_cast<size_t>(b) * order_ + a] != 0)
          throw std::logic_error("one-sided inverse");
        inverse_[a] = b;
        break;
      }
    if (inverse_[a] < 0) throw std::logic_error("element without inverse");
  }
}

GroupRef FiniteGroup::trivial() {
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->order_ = 1;
  g->table_ = {0};
  g->inverse_ = {0};
  g->name_ = "1";
  g->tag_ = "trivial";
  return g;
}

GroupRef FiniteGroup::from_mult(long long n, const std::function<Elem(Elem, Elem)>& f,
                                std::string name, std::string tag) {
  if (n < 1) throw std::invalid_argument("order must be positive");
  if (n > table_threshold()) throw std::invalid_argument("order exceeds table threshold");
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->order_ = n;
  g->name_ = std::move(name);
  g->tag_ = std::move(tag);
  g->table_.resize(static_cast<size_t>(n) * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      Elem v = f(a, b);
      if (v < 0 || v >= n) throw std::logic_error("multiplication escapes the element range");
      g->table_[static_cast<size_t>(a) * n + b] = v;
    }
  g->finish_table_init(true);
  return g;
}

GroupRef FiniteGroup::cyclic(long long n) {
  return from_mult(n, [n](Elem a, Elem b) { return static_cast<Elem>((a + b) % n); },
                   "Z" + std::to_string(n), "cyclic");
}

GroupRef FiniteGroup::direct_product(const GroupRef& a, const GroupRef& b) {
  long long n = a->order() * b->order();
  long long nb = b->order();
  return from_mult(
      n,
      [&](Elem x, Elem y) {
        Elem xa = static_cast<Elem>(x / nb), xb = static_cast<Elem>(x % nb);
        Elem ya = static_cast<Elem>(y / nb), yb = static_cast<Elem>(y % nb);
        return static_cast<Elem>(a->mul(xa, ya) * nb + b->mul(xb, yb));
      },
      a->name() + "x" + b->name(), "direct");
}

GroupRef FiniteGroup::metacyclic(const MetacyclicParams& params) {
  long long m = params.m, n = params.n;
  long long rr = mod_reduce(params.r, m);
  long long g1 = std::gcd(m, mod_reduce(params.r - 1, m));
  long long shift = mod_reduce(m / g1 * mod_reduce(params.lambda, m), m);  // b^n = a^shift
  std::vector<long long> rpow(n);
  rpow[0] = 1 % m;
  for (long long j = 1; j < n; ++j) rpow[j] = mod_mul(rpow[j - 1], rr, m);
  std::string nm = "G(" + std::to_string(m) + "," + std::to_string(n) + "," +
                   std::to_string(params.r) + "," + std::to_string(params.lambda) + ")";
  return from_mult(
      m * n,
      [=](Elem x, Elem y) {
        long long i1 = x / n, j1 = x % n, i2 = y / n, j2 = y % n;
        long long wrap = (j1 + j2 >= n) ? shift : 0;
        long long i = (i1 + mod_mul(i2, rpow[j1], m) + wrap) % m;
        long long j = (j1 + j2) % n;
        return static_cast<Elem>(i * n + j);
      },
      nm, "metacyclic");
}

GroupRef FiniteGroup::triple(const TripleForm& form, std::string name, std::string tag) {
  if (form.p < 1 || form.q < 1 || form.r < 1) throw std::invalid_argument("bad component orders");
  if (!(form.alpha == 1 || form.gamma == 1))
    throw std::invalid_argument("triple form needs alpha = 1 or gamma = 1");
  if (mod_pow(form.alpha, form.q, form.p) != 1 % form.p ||
      mod_pow(form.beta, form.r, form.p) != 1 % form.p ||
      mod_pow(form.gamma, form.r, form.q) != 1 % form.q)
    throw std::invalid_argument("action exponents incompatible with component orders");

  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->order_ = form.p * form.q * form.r;
  g->triple_ = form;
  g->name_ = std::move(name);
  g->tag_ = std::move(tag);
  g->alpha_pow_.resize(form.q);
  g->beta_pow_.resize(form.r);
  g->gamma_pow_.resize(form.r);
  for (long long j = 0; j < form.q; ++j) g->alpha_pow_[j] = mod_pow(form.alpha, j, form.p);
  for (long long k = 0; k < form.r; ++k) {
    g->beta_pow_[k] = mod_pow(form.beta, k, form.p);
    g->gamma_pow_[k] = mod_pow(form.gamma, k, form.q);
  }
  if (g->order_ <= table_threshold()) {
    g->table_.resize(static_cast<size_t>(g->order_) * g->order_);
    for (Elem a = 0; a < g->order_; ++a)
      for (Elem b = 0; b < g->order_; ++b)
        g->table_[static_cast<size_t>(a) * g->order_ + b] = g->triple_mul(a, b);
    g->finish_table_init(true);
  } else {
    check_group_axioms(*g);
  }
  return g;
}

std::shared_ptr<const std::vector<std::vector<Elem>>> FiniteGroup::subgroup_cache() const {
  std::lock_guard<std::mutex> lock(cache_mu_);
  return subgroups_;
}

void FiniteGroup::set_subgroup_cache(
    std::shared_ptr<const std::vector<std::vector<Elem>>> c) const {
  std::lock_guard<std::mutex> lock(cache_mu_);
  subgroups_ = std::move(c);
}

std::optional<long long> triple_action_class(const FiniteGroup& g) {
  if (!g.triple_form()) return std::nullopt;
  const TripleForm& f = *g.triple_form();
  if (f.alpha != 1 || f.p < 2 || f.q < 2 || f.r < 2) return std::nullopt;
  if (mult_order(Residue(f.p, f.beta)) != f.r || mult_order(Residue(f.q, f.gamma)) != f.r)
    return std::nullopt;
  long long kp = element_of_order(f.r, f.p).value;
  long long kq = element_of_order(f.r, f.q).value;
  auto dlog = [](long long base, long long value, long long mod, long long ord) {
    long long v = 1 % mod;
    for (long long e = 0; e < ord; ++e) {
      if (v == value) return e;
      v = mod_mul(v, base, mod);
    }
    throw std::logic_error("discrete log not found");
  };
  long long u = dlog(kp, f.beta, f.p, f.r);
  long long v = dlog(kq, f.gamma, f.q, f.r);
  return mod_mul(v, mod_inv(u, f.r), f.r);
}

}  // namespace hopfpqr
