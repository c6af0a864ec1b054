#pragma once

// Classification pipeline and report rendering: structured JSON on one
// hand, human tables on the other. Reports are byte-stable across runs.

#include <string>
#include <utility>
#include <vector>

#include "hopfpqr/morita.hpp"

namespace hopfpqr {

struct Report {
  long long p = 0, q = 0, r = 0;
  int table_case = 0;
  long long holder = 0;
  struct GroupLine {
    std::string name, tag;
    long long order;
  };
  std::vector<GroupLine> groups;
  std::vector<std::string> hopf_algebras;
  std::vector<std::pair<std::string, long long>> galois_counts;
  std::vector<std::vector<std::string>> morita_classes;
  std::vector<std::pair<std::string, bool>> checks;

  bool all_checks_pass() const;
};

/// Full pipeline: catalog, Galois-object counts, Morita partition, and the
/// internal consistency checks. `extended` additionally runs the
/// structured-arithmetic pairing check at (331, 11, 5).
Report classify(long long p, long long q, long long r, bool extended = false);

/// Cross-module verification suite (named pass/fail checks).
std::vector<std::pair<std::string, bool>> verify_suite(long long p, long long q, long long r,
                                                       bool extended = false);

/// Expected number of Morita classes by table case.
long long expected_morita_classes(long long p, long long q, long long r);

/// The structured-arithmetic pairing check at (331, 11, 5): every
/// G4-family member has a Morita partner with negated exponent label,
/// non-isomorphic to it for r > 2.
bool extended_g4_check();

std::string render_json(const Report& rep);    // single structured document
std::string render_pretty(const Report& rep);  // human tables

}  // namespace hopfpqr
