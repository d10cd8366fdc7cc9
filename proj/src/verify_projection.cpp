#include <cstdint>
#include <string>
#include <vector>

#include "miscube/cube.hpp"
#include "miscube/matching.hpp"
#include "miscube/projection.hpp"
#include "miscube/rational.hpp"
#include "miscube/verify.hpp"

namespace miscube {
namespace {

ClaimResult sweep(const char* id, int n, std::uint64_t min_edges, std::uint64_t expect_count) {
  Cube c(n);
  std::uint64_t seen = 0;
  for (const Matching& m : all_induced_matchings(c, VertexSet::full(c))) {
    if (m.size() < min_edges) continue;
    ++seen;
    ProjectionAnalysis p = analyze(c, m);
    ProjectionReport rep = check_structure(p);
    if (!rep.all_hold()) {
      std::string ids;
      for (auto e : matching_ids(c, m)) ids += (ids.empty() ? "" : ",") + std::to_string(e);
      return {id, false,
              "ids={" + ids + "} violations=" + std::to_string(rep.violations)};
    }
  }
  if (seen != expect_count)
    return {id, false,
            "swept=" + std::to_string(seen) + " want=" + std::to_string(expect_count)};
  return {id, true, "swept=" + std::to_string(seen)};
}

ClaimResult canonical_structure() {
  std::string detail;
  for (int n = 4; n <= 5; ++n) {
    Cube c(n);
    const Rational half(1, 2);
    for (const auto& cm : canonical_matchings(c)) {
      ProjectionAnalysis p = analyze(c, canonical_edges(c, cm));
      ProjectionReport rep = check_structure(p);
      if (!rep.all_hold())
        return {"projection.canonical-structure", false,
                "n=" + std::to_string(n) + " dir=" + std::to_string(cm.dir) +
                    " eps=" + std::to_string(cm.eps) +
                    " violations=" + std::to_string(rep.violations)};
      MeasureReport mr = component_measures(p);
      bool split = mr.components.size() == 2 && mr.components[0] == half &&
                   mr.components[1] == half && mr.bad == Rational(0);
      if (!split)
        return {"projection.canonical-structure", false,
                "n=" + std::to_string(n) + " dir=" + std::to_string(cm.dir) +
                    " eps=" + std::to_string(cm.eps) + " measures off"};
    }
    detail += (n > 4 ? " " : "") + std::to_string(n) + ":" + std::to_string(2 * n);
  }
  return {"projection.canonical-structure", true, detail};
}

}  // namespace

SuiteReport verify_projection(const VerifyOptions&) {
  SuiteReport r;
  r.suite = "projection";
  r.claims.push_back(sweep("projection.q3-structure", 3, 0, 19));
  r.claims.push_back(sweep("projection.q4-structure", 4, 0, 233));
  r.claims.push_back(sweep("projection.q4-large-structure", 4, 3, 40));
  r.claims.push_back(canonical_structure());
  return r;
}

}  // namespace miscube
