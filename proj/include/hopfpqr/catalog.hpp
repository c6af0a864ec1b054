#pragma once

// The groups of order pqr (r < q < p): the six presentation families, the
// G4 family over its exponent parameter, and isomorphism deduplication.

#include <vector>

#include "hopfpqr/group.hpp"

namespace hopfpqr {

/// All groups of order pqr up to isomorphism, in presentation order
/// (G1, G2, G3, G4[n = 1..r-1], G5, G6), deduplicated. Each carries its
/// presentation tag and retains the triple form.
std::vector<GroupRef> from_catalog(long long p, long long q, long long r);

/// One G4-family member (both order-p and order-q generators twisted by the
/// order-r one); n indexes the exponent on the order-q part.
GroupRef catalog_g4(long long p, long long q, long long r, long long n);

}  // namespace hopfpqr
