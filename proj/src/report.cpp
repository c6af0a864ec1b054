#include "hopfpqr/report.hpp"

#include <json.hpp>
#include <sstream>

#include "hopfpqr/catalog.hpp"
#include "hopfpqr/hopf.hpp"
#include "hopfpqr/isomorphism.hpp"

namespace hopfpqr {

bool Report::all_checks_pass() const {
  for (const auto& [name, ok] : checks)
    if (!ok) return false;
  return true;
}

long long expected_morita_classes(long long p, long long q, long long r) {
  Table1Row row = table1_case(p, q, r);
  switch (row.case_id) {
    case 1:
    case 2:
    case 3:
    case 5:
    case 6:
      return row.count;
    case 4:
      return r == 2 ? 4 : 3 + (r - 1) / 2;
    case 7:
      return 4;
    case 8:
      return r == 2 ? 6 : 5 + (r - 1) / 2;
  }
  return -1;
}

bool extended_g4_check() {
  const long long p = 331, q = 11, r = 5;
  bool ok = true;
  std::vector<long long> labels;
  std::vector<GroupRef> family;
  for (long long n = 1; n < r; ++n) {
    family.push_back(catalog_g4(p, q, r, n));
    auto lab = triple_action_class(*family.back());
    ok &= lab.has_value();
    labels.push_back(lab.value_or(-1));
  }
  // labels must be exactly 1..r-1 (pairwise distinct family members)
  std::vector<long long> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  for (long long n = 1; n < r; ++n) ok &= sorted[n - 1] == n;

  for (long long n = 1; n < r && ok; ++n) {
    const TripleForm& f = *family[n - 1]->triple_form();
    auto source_hist = family[n - 1]->order_histogram();
    auto source_center = family[n - 1]->center().size();
    bool found_partner = false;
    for (const auto& nb : morita_neighbors_structured(f)) {
      GroupRef target = FiniteGroup::triple(nb.target, "target", "dual-semidirect");
      // same coarse invariants in every case
      ok &= target->order() == family[n - 1]->order();
      ok &= target->order_histogram() == source_hist;
      ok &= target->center().size() == source_center;
      auto lab = triple_action_class(*target);
      if (!lab) {
        ok = false;
        continue;
      }
      if (*lab != labels[n - 1]) {
        // a Morita partner that is not isomorphic to the source
        found_partner = true;
        ok &= *lab == mod_reduce(-labels[n - 1], r);
      }
    }
    ok &= found_partner;
  }
  return ok;
}

Report classify(long long p, long long q, long long r, bool extended) {
  Report rep;
  rep.p = p;
  rep.q = q;
  rep.r = r;
  Table1Row row = table1_case(p, q, r);
  rep.table_case = row.case_id;
  rep.holder = holder_count(p * q * r);

  MoritaPartition part = morita_partition(p, q, r);
  for (const auto& g : part.catalog) rep.groups.push_back({g->name(), g->tag(), g->order()});
  for (const auto& n : part.nodes) rep.hopf_algebras.push_back(n.name());
  for (const auto& n : part.nodes) rep.galois_counts.push_back({n.name(), galois_object_count(n)});
  for (const auto& cls : part.classes) {
    std::vector<std::string> names;
    for (int i : cls) names.push_back(part.nodes[i].name());
    rep.morita_classes.push_back(std::move(names));
  }

  long long n_groups = static_cast<long long>(part.catalog.size());
  rep.checks.push_back({"holder_agreement", n_groups == rep.holder});
  rep.checks.push_back({"table1_agreement", n_groups == row.count});
  bool all_one = true;
  for (const auto& [name, c] : rep.galois_counts) all_one &= c == 1;
  rep.checks.push_back({"galois_counts_all_one", all_one});
  rep.checks.push_back(
      {"morita_count_matches_formula",
       static_cast<long long>(part.classes.size()) == expected_morita_classes(p, q, r)});
  // partition consistency: every node in exactly one class
  std::vector<int> seen(part.nodes.size(), 0);
  for (const auto& cls : part.classes)
    for (int i : cls) ++seen[i];
  bool consistent = true;
  for (int s : seen) consistent &= s == 1;
  rep.checks.push_back({"partition_consistent", consistent});
  rep.checks.push_back({"abelian_isolation", abelian_isolation_check(part)});
  if (extended) rep.checks.push_back({"extended_g4_pairing", extended_g4_check()});
  return rep;
}

std::vector<std::pair<std::string, bool>> verify_suite(long long p, long long q, long long r,
                                                       bool extended) {
  std::vector<std::pair<std::string, bool>> checks;
  Report rep = classify(p, q, r);
  for (auto& c : rep.checks) checks.push_back(c);

  // cohomology: closed formula against brute force on the small subgroups
  {
    bool ok = true;
    long long tested = 0;
    for (const auto& g : from_catalog(p, q, r)) {
      for (const auto& s : subgroups(g)) {
        if (s.order() > kH2BruteLimit || s.order() == g->order()) continue;
        GroupRef sg = subgroup_group(s);
        auto params = derive_metacyclic_params(sg);
        if (!params) {
          ok = false;
          continue;
        }
        CohomologyGroup brute = h2(sg);
        CohomologyGroup formula = schur_multiplier_metacyclic(*params);
        ok &= brute.invariant_factors == formula.invariant_factors;
        ++tested;
      }
    }
    checks.push_back({"cohomology_formula_agreement", ok && tested > 0});
  }

  // Hopf axiom and dimension checks
  {
    bool ok = true;
    if ((p - 1) % (q * r) == 0) {
      HopfStructureConstants a1 = build_A(p, q, r);
      HopfStructureConstants a2 = build_A(p, r, q);
      ok &= verify_hopf_axioms(a1).ok && verify_hopf_axioms(a2).ok;
      ok &= verify_hopf_axioms(dual_hopf(a1)).ok && verify_hopf_axioms(dual_hopf(a2)).ok;
      auto sum_sq = [](const std::vector<long long>& v) {
        long long s = 0;
        for (long long d : v) s += d * d;
        return s;
      };
      ok &= sum_sq(irrep_dimension_vector(a1)) == a1.dim;
      ok &= sum_sq(irrep_dimension_vector(a2)) == a2.dim;
      ok &= irrep_dimension_vector(dual_hopf(a1)) == irrep_dimension_vector(a2);
      checks.push_back({"hopf_axioms_and_dimensions", ok});
    } else {
      MatchedPair mp = trivial_matched_pair(FiniteGroup::cyclic(q), FiniteGroup::cyclic(p));
      HopfStructureConstants control = smash_product(mp);
      ok &= verify_hopf_axioms(control).ok;
      ok &= is_commutative(control) && is_cocommutative(control);
      checks.push_back({"hopf_axioms_and_dimensions", ok});
    }
  }

  if (extended) checks.push_back({"extended_g4_pairing", extended_g4_check()});
  return checks;
}

std::string render_json(const Report& rep) {
  nlohmann::json j;
  j["schema"] = 1;
  j["triple"] = {rep.p, rep.q, rep.r};
  j["case"] = rep.table_case;
  j["holder_count"] = rep.holder;
  j["groups"] = nlohmann::json::array();
  for (const auto& g : rep.groups)
    j["groups"].push_back({{"name", g.name}, {"tag", g.tag}, {"order", g.order}});
  j["hopf_algebras"] = rep.hopf_algebras;
  nlohmann::json counts = nlohmann::json::object();
  for (const auto& [name, c] : rep.galois_counts) counts[name] = c;
  j["galois_object_counts"] = counts;
  j["morita_classes"] = rep.morita_classes;
  nlohmann::json checks = nlohmann::json::object();
  for (const auto& [name, ok] : rep.checks) checks[name] = ok;
  j["checks"] = checks;
  return j.dump(2) + "\n";
}

std::string render_pretty(const Report& rep) {
  std::ostringstream os;
  os << "triple (" << rep.p << ", " << rep.q << ", " << rep.r << ")  case " << rep.table_case
     << "  groups " << rep.groups.size() << "\n\n";
  os << "groups of order " << rep.p * rep.q * rep.r << ":\n";
  for (const auto& g : rep.groups) os << "  " << g.tag << "  " << g.name << "\n";
  os << "\nhopf algebras and galois object counts:\n";
  for (const auto& [name, c] : rep.galois_counts) os << "  " << name << "  " << c << "\n";
  os << "\nmorita classes (" << rep.morita_classes.size() << "):\n";
  for (size_t i = 0; i < rep.morita_classes.size(); ++i) {
    os << "  class " << (i + 1) << ":";
    for (const auto& n : rep.morita_classes[i]) os << "  " << n;
    os << "\n";
  }
  os << "\nchecks:\n";
  for (const auto& [name, ok] : rep.checks)
    os << "  " << (ok ? "pass" : "FAIL") << "  " << name << "\n";
  return os.str();
}

}  // namespace hopfpqr
