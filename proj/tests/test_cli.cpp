#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <json.hpp>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const char* bin = std::getenv("HOPF_PQR_BIN");
  REQUIRE(bin != nullptr);
  std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int status = pclose(pipe);
  return RunResult{WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("classify produces the documented schema") {
  RunResult r = run_cli("classify 7 3 2");
  CHECK(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["triple"] == nlohmann::json({7, 3, 2}));
  CHECK(j["case"] == 8);
  CHECK(j.contains("groups"));
  CHECK(j.contains("hopf_algebras"));
  CHECK(j.contains("galois_object_counts"));
  CHECK(j.contains("morita_classes"));
  CHECK(j.contains("checks"));
  CHECK(j["groups"].size() == 6);
  CHECK(j["morita_classes"].size() == 6);
  for (const auto& [name, ok] : j["checks"].items()) CHECK(ok == true);
  for (const auto& [name, count] : j["galois_object_counts"].items()) CHECK(count == 1);
}

TEST_CASE("classify is byte-stable") {
  RunResult a = run_cli("classify 13 7 3");
  RunResult b = run_cli("classify 13 7 3");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK_FALSE(a.out.empty());
}

TEST_CASE("usage errors") {
  CHECK(run_cli("classify 4 3 2").exit_code == 1);   // 4 is not prime
  CHECK(run_cli("classify 3 5 7").exit_code == 1);   // misordered
  CHECK(run_cli("classify 7 3").exit_code == 1);     // missing argument
  CHECK(run_cli("unknown").exit_code == 1);
  CHECK(run_cli("cohomology").exit_code == 1);       // no selector
  CHECK(run_cli("verify 4 3 2").exit_code == 1);
}

TEST_CASE("verify runs the cross-module suite") {
  RunResult r = run_cli("verify 7 3 2");
  CHECK(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["checks"]["holder_agreement"] == true);
  CHECK(j["checks"]["cohomology_formula_agreement"] == true);
  CHECK(j["checks"]["hopf_axioms_and_dimensions"] == true);
  CHECK(j["checks"]["galois_counts_all_one"] == true);
}

TEST_CASE("cohomology selectors") {
  RunResult r = run_cli("cohomology --group Z2xZ2");
  CHECK(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["results"][0]["invariant_factors"] == nlohmann::json({2}));

  r = run_cli("cohomology --metacyclic 2 2 1 2");
  CHECK(r.exit_code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["results"][0]["invariant_factors"] == nlohmann::json({2}));
  CHECK(j["results"][0]["sources_agree"] == true);

  r = run_cli("cohomology --metacyclic 7 3 2 1");
  CHECK(r.exit_code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["results"][0]["invariant_factors"].empty());
  CHECK(j["results"][0]["sources_agree"] == true);

  r = run_cli("cohomology --triple 7 5 3");
  CHECK(r.exit_code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["results"].size() == 2);
  for (const auto& e : j["results"]) CHECK(e["invariant_factors"].empty());
}

TEST_CASE("threshold control") {
  // a threshold too small for the catalog groups surfaces as a usage error
  CHECK(run_cli("classify 7 5 3 --threshold 50").exit_code == 1);
  CHECK(run_cli("classify 7 5 3 --threshold 5000").exit_code == 0);
}
