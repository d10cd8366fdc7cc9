#include <cstdint>
#include <string>
#include <vector>

#include "miscube/cube.hpp"
#include "miscube/executor.hpp"
#include "miscube/labeling.hpp"
#include "miscube/matching.hpp"
#include "miscube/mis.hpp"
#include "miscube/verify.hpp"

namespace miscube {
namespace {

std::vector<VertexSet> all_mis(const Cube& c) {
  Executor ex(1);
  std::vector<VertexSet> out;
  for (auto mask : enumerate_cube_mis(c, ex)) out.push_back(mask_to_set(c, mask));
  return out;
}

ClaimResult round_trip() {
  std::uint64_t checked = 0;
  for (int n = 3; n <= 4; ++n) {
    Cube c(n);
    for (const VertexSet& I : all_mis(c)) {
      ++checked;
      if (!(from_labeling(to_labeling(c, I)) == I))
        return {"labeling.round-trip-identity", false,
                "n=" + std::to_string(n) + " I=" + I.to_hex()};
    }
  }
  return {"labeling.round-trip-identity", true, "checked=" + std::to_string(checked)};
}

ClaimResult legal_count() {
  std::string detail;
  for (int bn = 1; bn <= 3; ++bn) {
    Cube base(bn);
    Executor ex(1);
    const std::uint64_t legal = enumerate_legal_labelings(base).size();
    MisReport lifted = count_cube_mis(Cube(bn + 1), ex);
    if (BigInt(legal) != lifted.count)
      return {"labeling.legal-count-matches-mis", false,
              "base=" + std::to_string(bn) + " legal=" + std::to_string(legal) +
                  " mis=" + lifted.count.str()};
    detail += (bn > 1 ? "," : "") + std::to_string(legal);
  }
  return {"labeling.legal-count-matches-mis", true, detail};
}

// An MIS outside every canonical family must carry a non-singleton 2-linked
// occupied component. At enumeration scale there are no such MIS's, so the
// loop body mainly documents the check; the counts keep it honest.
ClaimResult outside_family() {
  std::string detail;
  for (int n = 3; n <= 5; ++n) {
    Cube c(n);
    std::vector<Matching> canon;
    for (const auto& cm : canonical_matchings(c)) canon.push_back(canonical_edges(c, cm));
    std::uint64_t outside = 0;
    for (const VertexSet& I : all_mis(c)) {
      bool in_family = false;
      for (const Matching& m : canon)
        if (meets_every_edge(c, I, m)) {
          in_family = true;
          break;
        }
      if (in_family) continue;
      ++outside;
      OccupiedDecomposition d = decompose(c, I);
      bool has_multi = false;
      for (const OccupiedComponent& comp : d.components)
        if (comp.verts.count() >= 2) has_multi = true;
      if (!has_multi)
        return {"labeling.outside-family-structure", false,
                "n=" + std::to_string(n) + " I=" + I.to_hex() + " no multi component"};
    }
    detail += (n > 3 ? " " : "") + std::to_string(n) + ":outside=" + std::to_string(outside);
  }
  return {"labeling.outside-family-structure", true, detail};
}

ClaimResult occupancy_facts() {
  std::uint64_t checked = 0;
  for (int n = 3; n <= 4; ++n) {
    Cube c(n);
    for (const VertexSet& I : all_mis(c)) {
      OccupiedDecomposition d = decompose(c, I);
      OccupancyReport rep = check_occupancy_facts(c, I, d);
      ++checked;
      if (!rep.odd_outside_g_occupied || !rep.lifted_edges_guarded ||
          !rep.lifted_matching_induced)
        return {"labeling.occupancy-facts", false,
                "n=" + std::to_string(n) + " I=" + I.to_hex()};
    }
  }
  return {"labeling.occupancy-facts", true, "checked=" + std::to_string(checked)};
}

}  // namespace

SuiteReport verify_labeling(const VerifyOptions&) {
  SuiteReport r;
  r.suite = "labeling";
  r.claims.push_back(round_trip());
  r.claims.push_back(legal_count());
  r.claims.push_back(outside_family());
  r.claims.push_back(occupancy_facts());
  return r;
}

}  // namespace miscube
