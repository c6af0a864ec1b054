#pragma once

// Isomorphism testing: invariant pre-screen, then backtracking over the
// images of a two-element generating set.

#include <vector>

#include "hopfpqr/group.hpp"

namespace hopfpqr {

struct IsoResult {
  bool isomorphic = false;
  std::vector<Elem> map;  // g -> image, set when isomorphic
};

IsoResult is_isomorphic(const GroupRef& g, const GroupRef& h);

}  // namespace hopfpqr
