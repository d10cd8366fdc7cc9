#pragma once

// Named verification suites over the library invariants. Each suite returns a
// list of claims with stable ids; a claim's detail is a short deterministic
// summary on pass and a concrete witness on failure. Reports depend only on
// (suite, seed, overrides), never on timing or worker count, so two runs with
// the same options serialize identically.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "miscube/rational.hpp"

namespace miscube {

struct VerifyOptions {
  std::uint64_t seed = 0;
  int workers = 1;
  // Containers-suite overrides; defaults reproduce the frozen expectations.
  std::optional<std::uint64_t> small_threshold;
  std::optional<Rational> eps;
  std::optional<Rational> c3;
  // Test hook: id of the one claim that supports sabotage
  // (isoperimetry.expansion-positive). That claim then runs with a comparator
  // requiring expansion ratio > 1/2 and fails on the known minimum expanders.
  std::string inject_fault;
};

struct ClaimResult {
  std::string id;
  bool pass = false;
  std::string detail;

  bool operator==(const ClaimResult&) const = default;
};

struct SuiteReport {
  std::string suite;
  std::vector<ClaimResult> claims;

  bool operator==(const SuiteReport&) const = default;

  bool all_pass() const {
    for (const auto& c : claims)
      if (!c.pass) return false;
    return true;
  }
  std::size_t failures() const {
    std::size_t k = 0;
    for (const auto& c : claims)
      if (!c.pass) ++k;
    return k;
  }
};

// The six suites in execution order; "all" is accepted by run_suites but is
// not itself a name here.
const std::vector<std::string>& suite_names();

// Runs one named suite, or every suite for "all". Throws std::invalid_argument
// on an unknown name.
std::vector<SuiteReport> run_suites(const std::string& name, const VerifyOptions& opts);

SuiteReport verify_core(const VerifyOptions& opts);
SuiteReport verify_peeling(const VerifyOptions& opts);
SuiteReport verify_labeling(const VerifyOptions& opts);
SuiteReport verify_projection(const VerifyOptions& opts);
SuiteReport verify_isoperimetry(const VerifyOptions& opts);
SuiteReport verify_containers(const VerifyOptions& opts);

}  // namespace miscube
