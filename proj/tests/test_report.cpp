#include <doctest.h>

#include "klein/report.hpp"

using namespace klein;

TEST_CASE("empty suite") {
  CHECK(emit_report({}, ReportFormat::Json) == "[]");
  CHECK(emit_report({}, ReportFormat::Tsv) == "name\tstatus\texpected\tactual\treference\n");
}

TEST_CASE("single outcome") {
  const VerifyOutcome o{"x", VerifyStatus::Discrepancy, "a\tb", "c\nd", "r"};
  const auto j = Json::parse(emit_report({o}, ReportFormat::Json));
  REQUIRE(j.size() == 1);
  CHECK(j[0]["name"] == "x");
  CHECK(j[0]["status"] == "discrepancy");
  CHECK(j[0]["expected"] == "a\tb");
  CHECK(j[0]["reference"] == "r");
  std::vector<std::string> keys;
  for (const auto& [k, v] : j[0].items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"name", "status", "expected", "actual", "reference"});
  CHECK(emit_report({o}, ReportFormat::Tsv) ==
        "name\tstatus\texpected\tactual\treference\nx\tdiscrepancy\ta b\tc d\tr\n");
}

TEST_CASE("verify suite") {
  const auto a = run_verify(0);
  REQUIRE(a.size() == 14);
  CHECK(a[2].status == VerifyStatus::Discrepancy);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].name.rfind(std::to_string(i + 1) + " ", 0) == 0);
  // Same seed, same report.
  CHECK(emit_report(a, ReportFormat::Json) == emit_report(run_verify(0), ReportFormat::Json));
}

TEST_CASE("renderers") {
  const auto& G = Group::instance();
  const auto e = element_json(G.named("g7"));
  CHECK(e["name"] == "g7");
  CHECK(e["order"] == 7);
  CHECK(e["matrix"].size() == 3);
  const auto f = fixed_json(G[G.named("g7")].mat);
  CHECK(f["kind"] == "elliptic");
  CHECK(f["count"] == 7);
  CHECK(fixed_json(G[G.named("rho2")].mat)["components"] == 4);
  CHECK(group_table_json().size() == 336);
  CHECK(classes_json(Ambient::H).size() == 6);
  CHECK(subgroup_table_json().size() == 15);
  CHECK(stabilizer_json(eta(1), Ambient::G)["stabilizer"]["label"] == "C7");
  CHECK(orbit_json(eta(1), Ambient::H)["size"] == 24);
}
