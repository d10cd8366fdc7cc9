#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "miscube/cube.hpp"
#include "miscube/executor.hpp"
#include "miscube/interval.hpp"
#include "miscube/labeling.hpp"
#include "miscube/mis.hpp"
#include "miscube/rational.hpp"
#include "miscube/verify.hpp"

namespace miscube {
namespace {

std::vector<VertexSet> all_mis(const Cube& c) {
  Executor ex(1);
  std::vector<VertexSet> out;
  for (auto mask : enumerate_cube_mis(c, ex)) out.push_back(mask_to_set(c, mask));
  return out;
}

std::string hist_str(const std::map<std::int64_t, std::uint64_t>& h) {
  std::string s;
  for (const auto& [k, v] : h) {
    if (!s.empty()) s += " ";
    s += std::to_string(k) + ":" + std::to_string(v);
  }
  return s;
}

ClaimResult decomposition_census() {
  struct Expect {
    std::map<std::int64_t, std::uint64_t> comp_hist;
    std::map<std::int64_t, std::uint64_t> t_hist;
  };
  const std::map<int, Expect> frozen = {
      {3, {{{0, 2}, {1, 4}}, {{0, 4}}}},
      {4, {{{0, 14}, {1, 28}}, {{0, 28}}}},
      {5, {{{0, 190}, {1, 1480}}, {{0, 1064}, {3, 272}, {4, 144}}}},
  };
  std::string detail;
  for (const auto& [n, expect] : frozen) {
    Cube c(n);
    std::map<std::int64_t, std::uint64_t> comp_hist, t_hist;
    for (const VertexSet& I : all_mis(c)) {
      OccupiedDecomposition d = decompose(c, I);
      ++comp_hist[std::int64_t(d.components.size())];
      for (const OccupiedComponent& comp : d.components) ++t_hist[comp.t];
    }
    if (comp_hist != expect.comp_hist || t_hist != expect.t_hist)
      return {"containers.decomposition-census", false,
              "n=" + std::to_string(n) + " comps={" + hist_str(comp_hist) + "} t={" +
                  hist_str(t_hist) + "}"};
    detail += (detail.empty() ? "" : " ") + std::to_string(n) + ":t={" + hist_str(t_hist) + "}";
  }
  return {"containers.decomposition-census", true, detail};
}

ClaimResult occupancy_facts_q5() {
  Cube c(5);
  std::uint64_t checked = 0;
  for (const VertexSet& I : all_mis(c)) {
    OccupiedDecomposition d = decompose(c, I);
    OccupancyReport rep = check_occupancy_facts(c, I, d);
    ++checked;
    if (!rep.odd_outside_g_occupied || !rep.lifted_edges_guarded ||
        !rep.lifted_matching_induced)
      return {"containers.occupancy-facts-q5", false, "I=" + I.to_hex()};
  }
  return {"containers.occupancy-facts-q5", true, "checked=" + std::to_string(checked)};
}

// The trivial witness (S = [A], F = N(A)) must satisfy all three container
// properties for every component that actually occurs.
ClaimResult component_witness(const VerifyOptions& opts) {
  const Rational c3 = opts.c3.value_or(Rational(1));
  std::string detail;
  for (int n = 3; n <= 5; ++n) {
    Cube c(n);
    Cube base(n - 1);
    std::uint64_t comps = 0;
    std::int64_t min_f_degree = -1;
    for (const VertexSet& I : all_mis(c)) {
      for (const OccupiedComponent& comp : decompose(c, I).components) {
        ContainerReport rep =
            check_container(base, comp.closed, {comp.closed, comp.nbrs, c3}, comp.t);
        ++comps;
        if (!rep.covers || !rep.degrees || !rep.size_bound)
          return {"containers.component-witness", false,
                  "n=" + std::to_string(n) + " I=" + I.to_hex() + " A=" + comp.verts.to_hex()};
        if (min_f_degree < 0 || rep.min_f_degree < min_f_degree)
          min_f_degree = rep.min_f_degree;
      }
    }
    detail += (n > 3 ? " " : "") + std::to_string(n) + ":comps=" + std::to_string(comps) +
              " minfdeg=" + std::to_string(min_f_degree);
  }
  return {"containers.component-witness", true, detail};
}

ClaimResult tight_slack(const VerifyOptions& opts) {
  const Rational eps = opts.eps.value_or(Rational(0));
  const Rational c3 = opts.c3.value_or(Rational(1));
  std::uint64_t large = 0, tight = 0, slack = 0;
  for (int n = 3; n <= 5; ++n) {
    Cube c(n);
    for (const VertexSet& I : all_mis(c)) {
      OccupiedDecomposition d = opts.small_threshold
                                    ? decompose(c, I, *opts.small_threshold)
                                    : decompose(c, I);
      std::map<std::size_t, ContainerWitness> witnesses;
      for (std::size_t i = 0; i < d.components.size(); ++i)
        if (!d.components[i].small)
          witnesses.emplace(i, ContainerWitness{d.components[i].closed,
                                                d.components[i].nbrs, c3});
      large += witnesses.size();
      TightSlackPartition part = tight_slack_classify(d, witnesses, eps);
      tight += part.tight.size();
      slack += part.slack.size();
      if (part.tight.size() + part.slack.size() != witnesses.size())
        return {"containers.tight-slack", false,
                "n=" + std::to_string(n) + " I=" + I.to_hex() + " partition leak"};
    }
  }
  return {"containers.tight-slack", true,
          "large=" + std::to_string(large) + " tight=" + std::to_string(tight) +
              " slack=" + std::to_string(slack)};
}

ClaimResult degree_threshold_table() {
  const std::map<int, long> expect = {{2, 1}, {3, 2}, {4, 3}, {5, 5}, {6, 6}, {16, 15}};
  std::string detail;
  for (const auto& [n, want] : expect) {
    const long got = container_degree_threshold(n);
    if (got != want)
      return {"containers.degree-threshold-table", false,
              "n=" + std::to_string(n) + " got=" + std::to_string(got) +
                  " want=" + std::to_string(want)};
    detail += (detail.empty() ? "" : " ") + std::to_string(n) + ":" + std::to_string(got);
  }
  return {"containers.degree-threshold-table", true, detail};
}

}  // namespace

SuiteReport verify_containers(const VerifyOptions& opts) {
  SuiteReport r;
  r.suite = "containers";
  r.claims.push_back(decomposition_census());
  r.claims.push_back(occupancy_facts_q5());
  r.claims.push_back(component_witness(opts));
  r.claims.push_back(tight_slack(opts));
  r.claims.push_back(degree_threshold_table());
  return r;
}

}  // namespace miscube
