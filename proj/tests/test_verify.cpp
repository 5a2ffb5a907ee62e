#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gasep/verify.hpp"

using namespace gasep;

TEST_CASE("symbolic checks pass on small modules") {
  for (const auto& raw : {std::vector<int>{3}, std::vector<int>{2, 2}, std::vector<int>{4}}) {
    RepSpec rep = RepSpec::canonicalize(raw);
    SeparatingSet set = build_separating_set(rep);
    CHECK(check_invariance(rep, set).pass);
    CHECK(check_degree(rep, set).pass);
    CHECK(check_support(rep, set).pass);
    CHECK(check_projection(rep, set).pass);
  }
}

TEST_CASE("projection check records the pairing and detector scalars") {
  RepSpec rep = RepSpec::canonicalize({2, 2});
  SeparatingSet set = build_separating_set(rep);
  CheckResult r = check_projection(rep, set);
  REQUIRE(r.pass);
  CHECK(r.details["projection_scalars"]["w[1,2]"] == "-8");
}

TEST_CASE("epsilon identity holds on random points") {
  RepSpec rep = RepSpec::canonicalize({2, 3});
  CheckResult r = check_epsilon_identity(rep, 120, 42);
  CHECK(r.pass);
  CHECK(r.details["trials"].get<int>() >= 100);
  CHECK(r.details["slice_identities"].get<int>() == 3);  // one on V2, two on V3
}

TEST_CASE("separation check on stratified pairs") {
  RepSpec rep = RepSpec::canonicalize({2, 2});
  SeparatingSet set = build_separating_set(rep);
  CheckResult r = check_separation(rep, set, 210, 42);
  CHECK(r.pass);
  CHECK(r.details["mismatches"] == 0);
  CHECK(r.details["pairs"] == 210);
  // the flip stratum is exercised on modules with a 2-mod-4 block
  CHECK(r.details["strata"].contains("c2_flip"));
}

TEST_CASE("separation check covers odd-only modules") {
  RepSpec rep = RepSpec::canonicalize({3});
  SeparatingSet set = build_separating_set(rep);
  CheckResult r = check_separation(rep, set, 120, 7);
  CHECK(r.pass);
  CHECK(!r.details["strata"].contains("c2_flip"));
}

TEST_CASE("counts check matches the published sizes") {
  auto computed_size = [](const std::vector<int>& raw) {
    RepSpec rep = RepSpec::canonicalize(raw);
    SeparatingSet set = build_separating_set(rep);
    CheckResult r = check_counts(rep, set);
    REQUIRE(r.pass);
    return std::make_pair(set.elements.size(), r.details["table"]);
  };

  auto [v3, table_v3] = computed_size({3});
  CHECK(v3 == 7);
  CHECK(table_v3["status"] == "match");

  auto [v22, table_v22] = computed_size({2, 2});
  CHECK(v22 == 10);
  CHECK(table_v22["status"] == "match");

  // published 7 vs scalar-dedup 6: flagged, not failed
  auto [v12, table_v12] = computed_size({1, 2});
  CHECK(v12 == 6);
  CHECK(table_v12["published"] == 7);
  CHECK(table_v12["status"] == "mismatch-flagged");

  // published 15 vs scalar-dedup 16: flagged, not failed
  auto [v23, table_v23] = computed_size({2, 3});
  CHECK(v23 == 16);
  CHECK(table_v23["status"] == "mismatch-flagged");

  auto [v14, table_v14] = computed_size({1, 4});
  CHECK(v14 == 17);
  CHECK(table_v14["status"] == "match");
}

TEST_CASE("counts check reports the swapped pairing ratio") {
  RepSpec rep = RepSpec::canonicalize({2, 2});
  SeparatingSet set = build_separating_set(rep);
  CheckResult r = check_counts(rep, set);
  REQUIRE(r.details["w_swap"].size() == 1);
  CHECK(r.details["w_swap"][0]["proportional"] == true);
  CHECK(r.details["w_swap"][0]["ratio"] == "1");
}

TEST_CASE("table lookup covers the published families") {
  CHECK(table_size(RepSpec::canonicalize({2, 2})) == 10);
  CHECK(table_size(RepSpec::canonicalize({3, 3, 3, 3})) == 108);
  CHECK(table_size(RepSpec::canonicalize({4, 4})) == 35);
  CHECK(table_size(RepSpec::canonicalize({5})) == 16);
  CHECK(table_size(RepSpec::canonicalize({2, 2, 2, 2, 2})) == 55);   // 2n^2+n
  CHECK(table_size(RepSpec::canonicalize({6, 6})) == 71);            // (31n^2+9n)/2
  CHECK(table_size(RepSpec::canonicalize({3, 4})) == 30);
  CHECK(!table_size(RepSpec::canonicalize({2, 2, 4})).has_value());
  CHECK(!table_size(RepSpec::canonicalize({7})).has_value());
}

TEST_CASE("reports are deterministic for a fixed seed") {
  RepSpec rep = RepSpec::canonicalize({2, 2});
  auto once = run_checks(rep, all_check_names(), 60, 42);
  auto twice = run_checks(rep, all_check_names(), 60, 42);
  CHECK(once.dump() == twice.dump());
  CHECK(!report_has_failures(once));

  auto other_seed = run_checks(rep, all_check_names(), 60, 43);
  CHECK(!report_has_failures(other_seed));
}

TEST_CASE("report shape") {
  RepSpec rep = RepSpec::canonicalize({1, 1});
  auto report = run_checks(rep, {"invariance", "counts"}, 10, 1);
  CHECK(report["rep"]["canonical"] == std::vector<int>{1, 1});
  CHECK(report["seed"] == 1);
  REQUIRE(report["checks"].size() == 2);
  CHECK(report["checks"][0]["name"] == "invariance");
  CHECK(report["checks"][0]["status"] == "pass");
  CHECK(report["checks"][0]["millis"] == 0);
  CHECK(report["checks"][1]["name"] == "counts");
  CHECK_THROWS_AS(run_checks(rep, {"bogus"}, 10, 1), std::invalid_argument);
}
