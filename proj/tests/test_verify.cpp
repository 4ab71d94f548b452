#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include <json.hpp>

#include "surface_lab/errors.hpp"
#include "surface_lab/verify.hpp"

using namespace surface_lab;

namespace {

const std::vector<std::string> kRequired = {
    "homology_h1",        "commutator_table",        "sign_condition",       "hurwitz_genus5",
    "subgroup_classification", "fixed_points_8",     "orbifold_bound_64",    "k2_hat_224",
    "ks2_7",              "pg_38",                   "chi_32",               "kunneth_list",
    "q_S_zero",           "picard_config",           "independence_ranks",   "chi_omega_minus4",
    "chi_restricted_zero", "theta_bounds_233",       "theta_h1_4_h2_8",      "character_decomposition",
    "pencil_two_invariants", "legendre_identities"};

const CheckResult& find(const std::vector<CheckResult>& rs, const std::string& name) {
  const auto it = std::find_if(rs.begin(), rs.end(), [&](const CheckResult& r) { return r.name == name; });
  REQUIRE(it != rs.end());
  return *it;
}

}  // namespace

TEST_CASE("the full suite passes") {
  const auto results = run(RunConfig{});
  CHECK(results.size() >= kRequired.size());
  for (const auto& r : results) CHECK_MESSAGE(r.status == Status::kPass, r.name << ": " << r.actual);
  for (const auto& name : kRequired) CHECK(find(results, name).status == Status::kPass);
  CHECK(exit_code(results) == 0);
  CHECK(std::is_sorted(results.begin(), results.end(),
                       [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; }));
}

TEST_CASE("registry") {
  const auto checks = list_checks();
  std::set<std::string> names;
  for (const auto& c : checks) {
    names.insert(c.name);
    CHECK_FALSE(c.anchor.empty());
  }
  CHECK(names.size() == checks.size());
  for (const auto& name : kRequired) CHECK(names.count(name) == 1);
}

TEST_CASE("homology check reports the group") {
  RunConfig cfg;
  cfg.checks = {"homology_h1"};
  const auto results = run(cfg);
  REQUIRE(results.size() == 1);
  CHECK(results[0].expected == "Z/4 ⊕ (Z/2)^4");
  CHECK(results[0].actual == results[0].expected);
}

TEST_CASE("selection, duplicates and unknown names") {
  RunConfig cfg;
  cfg.checks = {"pg_38", "chi_32", "pg_38"};
  const auto results = run(cfg);
  REQUIRE(results.size() == 2);
  CHECK(results[0].name == "chi_32");
  CHECK(results[1].name == "pg_38");
  cfg.checks = {"no_such_check"};
  CHECK_THROWS_AS(run(cfg), UnknownCheck);
}

TEST_CASE("numeric checks are skipped without moduli") {
  RunConfig cfg;
  cfg.default_taus = false;
  const auto results = run(cfg);
  for (const auto& c : list_checks()) {
    const Status s = find(results, c.name).status;
    CHECK(s == (c.numeric ? Status::kSkipped : Status::kPass));
  }
  CHECK(exit_code(results) == 0);
}

TEST_CASE("loose tolerance on a single modulus") {
  RunConfig cfg;
  cfg.checks = {"legendre_identities"};
  cfg.eps = 1e-3;
  cfg.taus = {parse_tau("0+1i")};
  const auto results = run(cfg);
  REQUIRE(results.size() == 1);
  CHECK(results[0].status == Status::kPass);
  CHECK(results[0].actual.find("worst") != std::string::npos);
}

TEST_CASE("exit code") {
  auto result = [](Status s) {
    CheckResult r;
    r.status = s;
    return r;
  };
  CHECK(exit_code({}) == 0);
  CHECK(exit_code({result(Status::kPass), result(Status::kSkipped)}) == 0);
  CHECK(exit_code({result(Status::kPass), result(Status::kFail)}) == 1);
}

TEST_CASE("JSON output is deterministic") {
  RunConfig cfg;
  const std::string first = render_json(cfg, run(cfg));
  const std::string second = render_json(cfg, run(cfg));
  CHECK(first == second);
  const auto doc = nlohmann::json::parse(first);
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["config"]["taus"].size() == 4);
  CHECK(doc["config"]["eps"] == 1e-9);
  CHECK(doc["results"].size() == list_checks().size());
  CHECK_FALSE(doc["results"][0].contains("elapsed_ms"));
  cfg.timing = true;
  CHECK(nlohmann::json::parse(render_json(cfg, run(cfg)))["results"][0].contains("elapsed_ms"));
}

TEST_CASE("text output") {
  RunConfig cfg;
  cfg.checks = {"ks2_7"};
  const std::string text = render_text(run(cfg));
  CHECK(text.find("ks2_7") != std::string::npos);
  CHECK(text.find("pass") != std::string::npos);
}

TEST_CASE("parsing moduli") {
  CHECK(parse_tau("0+1i") == Complex(0.0, 1.0));
  CHECK(parse_tau("i") == Complex(0.0, 1.0));
  CHECK(parse_tau("2i") == Complex(0.0, 2.0));
  CHECK(parse_tau("0.5+1.5i") == Complex(0.5, 1.5));
  CHECK(parse_tau("-0.5+1.5i") == Complex(-0.5, 1.5));
  CHECK(parse_tau("1e-1+2e+0i") == Complex(0.1, 2.0));
  const Complex third = parse_tau("1/3+5/3i");
  CHECK(third.real() == 1.0 / 3.0);
  CHECK(third.imag() == 5.0 / 3.0);
  for (const char* bad : {"", "1+2", "abc", "1/0+1i", "1++2i", "x+1i"})
    CHECK_THROWS_AS(parse_tau(bad), InvalidArgument);
  for (Complex t : default_taus()) CHECK(parse_tau(format_tau(t)) == t);
  CHECK(format_tau({0.5, 1.5}) == "0.5+1.5i");
}

TEST_CASE("invalid configuration") {
  RunConfig cfg;
  cfg.eps = 0.0;
  CHECK_THROWS_AS(cfg.validate(), InvalidArgument);
  cfg = RunConfig{};
  cfg.samples = 0;
  CHECK_THROWS_AS(cfg.validate(), InvalidArgument);
  cfg = RunConfig{};
  cfg.taus = {Complex(0.0, -1.0)};
  CHECK_THROWS_AS(cfg.validate(), InvalidArgument);
}
