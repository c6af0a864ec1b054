#include "hopfpqr/linalg.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "hopfpqr/numbers.hpp"

namespace hopfpqr {

namespace {

constexpr long long kGuard = 1LL << 56;

long long checked(__int128 v) {
  if (v > kGuard || v < -kGuard) throw std::overflow_error("integer reduction overflow");
  return static_cast<long long>(v);
}

long long cmul(long long a, long long b) { return checked(static_cast<__int128>(a) * b); }

long long ext_gcd(long long a, long long b, long long& x, long long& y) {
  if (b == 0) {
    x = (a < 0 ? -1 : 1);
    y = 0;
    return std::abs(a);
  }
  long long x1, y1;
  long long g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

Mat identity(int n) {
  Mat m(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

int row_count(const Mat& a) { return static_cast<int>(a.size()); }

}  // namespace

SmithResult smith_normal_form(Mat a, long long mod) {
  int rows = row_count(a);
  int cols = rows ? static_cast<int>(a[0].size()) : 0;
  SmithResult res;
  res.V = identity(cols);
  res.Vinv = identity(cols);
  if (rows == 0 || cols == 0) return res;

  // symmetric residue: never increases the absolute value
  auto reduce = [&](long long v) {
    if (mod <= 0) return v;
    v %= mod;
    if (v > mod / 2) v -= mod;
    if (v < -(mod - 1) / 2) v += mod;
    return v;
  };
  if (mod > 0)
    for (auto& row : a)
      for (auto& v : row) v = reduce(v);

  auto swap_rows = [&](int i, int j) { std::swap(a[i], a[j]); };
  auto addmul_row = [&](int dst, int src, long long k) {
    for (int j = 0; j < cols; ++j)
      a[dst][j] = reduce(checked((__int128)a[dst][j] + (__int128)k * a[src][j]));
  };
  auto swap_cols = [&](int i, int j) {
    for (auto& row : a) std::swap(row[i], row[j]);
    for (auto& row : res.V) std::swap(row[i], row[j]);
    std::swap(res.Vinv[i], res.Vinv[j]);
  };
  auto negate_col = [&](int j) {
    for (auto& row : a) row[j] = -row[j];
    for (auto& row : res.V) row[j] = -row[j];
    for (auto& v : res.Vinv[j]) v = -v;
  };
  // col_dst += k * col_src;  Vinv absorbs the inverse op as a row operation.
  auto addmul_col = [&](int dst, int src, long long k) {
    for (auto& row : a) row[dst] = reduce(checked((__int128)row[dst] + (__int128)k * row[src]));
    for (auto& row : res.V)
      row[dst] = reduce(checked((__int128)row[dst] + (__int128)k * row[src]));
    for (int j = 0; j < cols; ++j)
      res.Vinv[src][j] =
          reduce(checked((__int128)res.Vinv[src][j] - (__int128)k * res.Vinv[dst][j]));
  };

  int m = std::min(rows, cols);
  for (int t = 0; t < m; ++t) {
    for (;;) {
      // minimal |entry| pivot in the trailing submatrix
      int pi = -1, pj = -1;
      long long best = 0;
      for (int i = t; i < rows; ++i)
        for (int j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pi < 0 || std::abs(a[i][j]) < best)) {
            best = std::abs(a[i][j]);
            pi = i;
            pj = j;
          }
      if (pi < 0) {
        // trailing submatrix is zero
        res.diag.assign(m, 0);
        for (int i = 0; i < t; ++i) res.diag[i] = a[i][i];
        return res;
      }
      if (pi != t) swap_rows(t, pi);
      if (pj != t) swap_cols(t, pj);

      bool clean = true;
      for (int i = t + 1; i < rows; ++i)
        if (a[i][t] != 0) {
          addmul_row(i, t, -(a[i][t] / a[t][t]));
          if (a[i][t] != 0) clean = false;
        }
      if (!clean) continue;
      for (int j = t + 1; j < cols; ++j)
        if (a[t][j] != 0) {
          addmul_col(j, t, -(a[t][j] / a[t][t]));
          if (a[t][j] != 0) clean = false;
        }
      if (!clean) continue;
      // pivot must divide the rest of the submatrix for the divisor chain
      bool divides = true;
      for (int i = t + 1; i < rows && divides; ++i)
        for (int j = t + 1; j < cols && divides; ++j)
          if (a[i][j] % a[t][t] != 0) {
            addmul_row(t, i, 1);
            divides = false;
          }
      if (divides) break;
    }
    if (a[t][t] < 0) negate_col(t);
  }
  res.diag.assign(m, 0);
  for (int i = 0; i < m; ++i) res.diag[i] = a[i][i];
  return res;
}

Mat zn_row_reduce(Mat a, long long N) {
  int rows = row_count(a);
  int cols = rows ? static_cast<int>(a[0].size()) : 0;
  for (auto& row : a)
    for (auto& v : row) v = mod_reduce(v, N);

  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(a[r], a[p]);
    for (int i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      long long u, w;
      long long g = ext_gcd(a[r][c], a[i][c], u, w);
      long long br = a[r][c] / g, bi = a[i][c] / g;
      for (int j = c; j < cols; ++j) {
        long long nr = mod_reduce(cmul(u, a[r][j]) % N + cmul(w, a[i][j]) % N, N);
        long long ni = mod_reduce(cmul(br, a[i][j]) % N - cmul(bi, a[r][j]) % N, N);
        a[r][j] = nr;
        a[i][j] = ni;
      }
    }
    ++r;
  }
  a.resize(r);
  return a;
}

Mat zn_kernel(const Mat& a, int cols, long long N) {
  Mat reduced = zn_row_reduce(a, N);
  Mat gens;
  if (reduced.empty()) {
    gens = identity(cols);
    return gens;
  }
  SmithResult s = smith_normal_form(reduced, N);
  for (int j = 0; j < cols; ++j) {
    long long sj = j < static_cast<int>(s.diag.size()) ? s.diag[j] : 0;
    long long d = std::gcd(sj, N);
    if (d == 0) d = N;
    long long scale = N / d;
    Vec gen(cols, 0);
    bool nonzero = false;
    for (int i = 0; i < cols; ++i) {
      gen[i] = mod_reduce(cmul(scale, s.V[i][j]), N);
      nonzero |= gen[i] != 0;
    }
    if (nonzero) gens.push_back(std::move(gen));
  }
  return gens;
}

std::optional<Vec> zn_solve(const Mat& a, const Vec& v, long long N) {
  int rows = row_count(a);
  if (rows == 0) return Vec{};
  int cols = static_cast<int>(a[0].size());

  // augmented reduction; the rhs column is never chosen as pivot
  Mat m(rows, Vec(cols + 1, 0));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m[i][j] = mod_reduce(a[i][j], N);
    m[i][cols] = mod_reduce(v[i], N);
  }
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[r], m[p]);
    for (int i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      long long u, w;
      long long g = ext_gcd(m[r][c], m[i][c], u, w);
      long long br = m[r][c] / g, bi = m[i][c] / g;
      for (int j = c; j <= cols; ++j) {
        long long nr = mod_reduce(cmul(u, m[r][j]) % N + cmul(w, m[i][j]) % N, N);
        long long ni = mod_reduce(cmul(br, m[i][j]) % N - cmul(bi, m[r][j]) % N, N);
        m[r][j] = nr;
        m[i][j] = ni;
      }
    }
    ++r;
  }
  for (int i = r; i < rows; ++i)
    if (m[i][cols] != 0) {
      bool zero = true;
      for (int j = 0; j < cols; ++j) zero &= m[i][j] == 0;
      if (zero) return std::nullopt;
    }
  m.resize(r);

  // Homogenize: A x = v  <=>  [A | -v] (x, t) = 0 with t a unit, then rescale.
  Mat aug(r, Vec(cols + 1, 0));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < cols; ++j) aug[i][j] = m[i][j];
    aug[i][cols] = mod_reduce(-m[i][cols], N);
  }
  Mat ker = zn_kernel(aug, cols + 1, N);
  // look for a kernel combination whose last coordinate is 1 (a unit suffices)
  // first: any generator with unit last coordinate
  for (const auto& g : ker) {
    long long last = g[cols];
    if (last == 0) continue;
    if (std::gcd(last, N) == 1) {
      long long inv = mod_inv(last, N);
      Vec x(cols, 0);
      for (int j = 0; j < cols; ++j) x[j] = mod_reduce(cmul(g[j], inv), N);
      return x;
    }
  }
  // general case: the last coordinates generate an ideal (d); need d = 1
  long long d = N;
  for (const auto& g : ker) d = std::gcd(d, g[cols]);
  if (d != 1) return std::nullopt;
  // combine generators to reach last coordinate 1
  Vec acc(cols + 1, 0);
  long long cur = N;
  for (const auto& g : ker) {
    long long u, w;
    long long ng = ext_gcd(cur, g[cols], u, w);
    for (int j = 0; j <= cols; ++j)
      acc[j] = mod_reduce(cmul(u, acc[j]) % N + cmul(w, g[j]) % N, N);
    cur = ng;
    if (cur == 1) break;
  }
  if (mod_reduce(acc[cols], N) == 0) return std::nullopt;
  if (std::gcd(acc[cols], N) != 1) return std::nullopt;
  long long inv = mod_inv(acc[cols], N);
  Vec x(cols, 0);
  for (int j = 0; j < cols; ++j) x[j] = mod_reduce(cmul(acc[j], inv), N);
  return x;
}

Vec zn_span_factors(const Mat& rows, int dim, long long N) {
  Mat reduced = zn_row_reduce(rows, N);
  Vec factors;
  if (reduced.empty()) return factors;
  SmithResult s = smith_normal_form(reduced, N);
  // |span| = prod over the diagonal of |s_i Z_N| = prod N / gcd(s_i, N)
  for (long long d : s.diag) {
    long long g = std::gcd(d, N);
    if (g == 0) g = N;
    if (N / g > 1) factors.push_back(N / g);
  }
  std::sort(factors.begin(), factors.end());
  return factors;
}

namespace {
Mat transpose(const Mat& a, int cols) {
  Mat t(cols, Vec(a.size(), 0));
  for (size_t i = 0; i < a.size(); ++i)
    for (int j = 0; j < cols; ++j) t[j][i] = a[i][j];
  return t;
}
}  // namespace

ZnQuotient zn_quotient(const Mat& z_gens, const Mat& b_gens, int dim, long long N) {
  ZnQuotient out;
  // present the top group by generators: rows of the reduced basis W
  Mat w = zn_row_reduce(z_gens, N);
  int m = static_cast<int>(w.size());
  if (m == 0) return out;  // trivial top group

  // relations of the presentation (Z_N)^m ->> top/bottom, c -> [c W]:
  // a coordinate solution for every bottom generator, plus the annihilator
  Mat wt = transpose(w, dim);
  Mat rels;
  for (const auto& b : b_gens) {
    Vec rhs(dim, 0);
    for (int j = 0; j < dim; ++j) rhs[j] = mod_reduce(b[j], N);
    auto sol = zn_solve(wt, rhs, N);
    if (!sol) throw std::logic_error("subgroup generators escape the span");
    rels.push_back(std::move(*sol));
  }
  for (auto& ann : zn_kernel(wt, m, N)) rels.push_back(std::move(ann));

  Vec diag;
  Mat vinv = identity(m);
  if (!rels.empty()) {
    SmithResult s = smith_normal_form(rels, N);
    diag = s.diag;
    vinv = s.Vinv;
  }
  for (int i = 0; i < m; ++i) {
    long long si = i < static_cast<int>(diag.size()) ? diag[i] : 0;
    long long d = std::gcd(si, N);
    if (d == 0) d = N;
    if (d == 1) continue;
    out.factors.push_back(d);
    Vec ambient(dim, 0);
    for (int j = 0; j < dim; ++j) {
      __int128 acc = 0;
      for (int k = 0; k < m; ++k) acc += (__int128)vinv[i][k] * w[k][j];
      ambient[j] = mod_reduce(static_cast<long long>(acc % N), N);
    }
    out.reps.push_back(std::move(ambient));
  }
  return out;
}

}  // namespace hopfpqr
