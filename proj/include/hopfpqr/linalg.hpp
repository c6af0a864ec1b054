#pragma once

// Exact integer linear algebra: Smith normal form with fraction-free
// row/column reduction (pivot of minimal absolute value), Hermite bases,
// and kernels / solvers / span sizes over Z_N for composite N.

#include <optional>
#include <vector>

namespace hopfpqr {

using Vec = std::vector<long long>;
using Mat = std::vector<Vec>;

/// S = U * A * V with U, V unimodular. Only V and V^-1 are tracked.
/// With mod > 0 every entry of A, V, V^-1 is kept reduced modulo mod;
/// the result is then an exact Smith form of some matrix congruent to A,
/// which is all that mod-N kernels, span sizes and quotients depend on.
struct SmithResult {
  Vec diag;  // min(rows, cols) entries, d_i | d_{i+1} up to the modulus
  Mat V;     // cols x cols
  Mat Vinv;  // cols x cols
};
SmithResult smith_normal_form(Mat a, long long mod = 0);

/// Row-equivalent matrix mod N (unimodular row ops, zero rows dropped).
Mat zn_row_reduce(Mat a, long long N);

/// Generators of { x in (Z_N)^cols : A x = 0 mod N }.
Mat zn_kernel(const Mat& a, int cols, long long N);

/// One solution of A x = v over Z_N, if any.
std::optional<Vec> zn_solve(const Mat& a, const Vec& v, long long N);

/// Factor multiset (entries > 1) whose product is |span_{Z_N}(rows)| in (Z_N)^dim.
Vec zn_span_factors(const Mat& rows, int dim, long long N);

/// Invariant factors (> 1) and generator vectors of the quotient
///   (span_Z(z_gens) + N Z^dim) / (span_Z(b_gens) + N Z^dim).
/// Requires the bottom lattice to lie inside the top one.
struct ZnQuotient {
  Vec factors;
  Mat reps;  // one ambient representative per factor, entries mod N
};
ZnQuotient zn_quotient(const Mat& z_gens, const Mat& b_gens, int dim, long long N);

}  // namespace hopfpqr
