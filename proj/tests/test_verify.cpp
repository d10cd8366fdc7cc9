#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>
#include <string>
#include <vector>

#include "miscube/verify.hpp"

using namespace miscube;

TEST_CASE("suite registry", "[verify]") {
  const std::vector<std::string> expect = {"core",       "peeling",      "labeling",
                                           "projection", "isoperimetry", "containers"};
  REQUIRE(suite_names() == expect);

  VerifyOptions opts;
  auto all = run_suites("all", opts);
  REQUIRE(all.size() == expect.size());
  for (std::size_t i = 0; i < all.size(); ++i) REQUIRE(all[i].suite == expect[i]);

  auto one = run_suites("peeling", opts);
  REQUIRE(one.size() == 1);
  REQUIRE(one[0].suite == "peeling");

  REQUIRE_THROWS_AS(run_suites("spectral", opts), std::invalid_argument);
  REQUIRE_THROWS_AS(run_suites("", opts), std::invalid_argument);
}

TEST_CASE("reports are deterministic and worker independent", "[verify]") {
  VerifyOptions serial;
  serial.seed = 42;
  serial.workers = 1;
  VerifyOptions pooled = serial;
  pooled.workers = 4;

  auto a = run_suites("core", serial);
  auto b = run_suites("core", serial);
  auto c = run_suites("core", pooled);
  REQUIRE(a == b);
  REQUIRE(a == c);
  REQUIRE(a[0].all_pass());
}

TEST_CASE("fault injection fails exactly the targeted claim", "[verify]") {
  VerifyOptions opts;
  opts.inject_fault = "isoperimetry.expansion-positive";
  auto reports = run_suites("isoperimetry", opts);
  REQUIRE(reports.size() == 1);
  const SuiteReport& rep = reports[0];
  REQUIRE(rep.failures() == 1);
  for (const ClaimResult& claim : rep.claims) {
    if (claim.id == "isoperimetry.expansion-positive") {
      REQUIRE_FALSE(claim.pass);
      // The sabotaged comparator must produce a concrete witness.
      REQUIRE(claim.detail.find("ratio=") != std::string::npos);
      REQUIRE(claim.detail.find("A=") != std::string::npos);
    } else {
      REQUIRE(claim.pass);
    }
  }
}

TEST_CASE("default options reproduce the frozen report", "[verify]") {
  VerifyOptions opts;
  auto all = run_suites("all", opts);

  std::vector<std::string> ids;
  for (const auto& rep : all) {
    REQUIRE(rep.all_pass());
    for (const auto& claim : rep.claims) ids.push_back(claim.id);
  }
  const std::vector<std::string> expect = {
      "core.count-subset-oracle",
      "core.count-frozen",
      "core.count-worker-stable",
      "core.canonical-families",
      "core.family-overlap",
      "core.largest-im",
      "core.matching-count-bound",
      "core.assignment-oracle",
      "core.compositions",
      "core.klinked-bound",
      "peeling.replay-identity",
      "peeling.survivor-mis",
      "peeling.alpha-monotonicity",
      "peeling.support-stop-bound",
      "peeling.two-stage",
      "labeling.round-trip-identity",
      "labeling.legal-count-matches-mis",
      "labeling.outside-family-structure",
      "labeling.occupancy-facts",
      "projection.q3-structure",
      "projection.q4-structure",
      "projection.q4-large-structure",
      "projection.canonical-structure",
      "isoperimetry.functional-exhaustive",
      "isoperimetry.functional-random",
      "isoperimetry.expansion-positive",
      "isoperimetry.partition-random",
      "isoperimetry.sqrt-probe-still-fails",
      "containers.decomposition-census",
      "containers.occupancy-facts-q5",
      "containers.component-witness",
      "containers.tight-slack",
      "containers.degree-threshold-table",
  };
  REQUIRE(ids == expect);

  auto claim = [&all](const std::string& id) -> const ClaimResult& {
    for (const auto& rep : all)
      for (const auto& c : rep.claims)
        if (c.id == id) return c;
    FAIL("missing claim " + id);
    throw std::logic_error("unreachable");
  };
  REQUIRE(claim("core.count-frozen").detail == "2,2,6,42,1670");
  REQUIRE(claim("core.family-overlap").detail == "3:max=3/3 4:max=7/9");
  REQUIRE(claim("peeling.support-stop-bound").detail == "3:applicable=2 4:applicable=18");
  REQUIRE(claim("labeling.outside-family-structure").detail ==
          "3:outside=0 4:outside=0 5:outside=0");
  REQUIRE(claim("isoperimetry.functional-exhaustive").detail ==
          "3:{0:20 +1:236} 4:{0:34 +1:65502}");
  REQUIRE(claim("isoperimetry.expansion-positive").detail ==
          "3:min=1/2/10 4:min=3/7/162 5:min=3/7/39202");
  REQUIRE(claim("isoperimetry.sqrt-probe-still-fails").detail == "3:{-1:20 0:8 +1:228}");
  REQUIRE(claim("containers.decomposition-census").detail ==
          "3:t={0:4} 4:t={0:28} 5:t={0:1064 3:272 4:144}");
  REQUIRE(claim("containers.component-witness").detail ==
          "3:comps=4 minfdeg=2 4:comps=28 minfdeg=3 5:comps=1480 minfdeg=4");
}

TEST_CASE("containers overrides are honored", "[verify]") {
  VerifyOptions opts;
  opts.small_threshold = 1;  // every nonempty neighborhood counts as large
  opts.eps = Rational(1, 3);
  auto reports = run_suites("containers", opts);
  const SuiteReport& rep = reports[0];
  for (const auto& claim : rep.claims) {
    if (claim.id != "containers.tight-slack") continue;
    REQUIRE(claim.pass);
    // 4 + 28 + 1480 components, all large at threshold 1, all with honest
    // witnesses, hence all tight.
    REQUIRE(claim.detail == "large=1512 tight=1512 slack=0");
  }
}
