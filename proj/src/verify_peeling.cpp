#include <cstdint>
#include <string>
#include <vector>

#include "miscube/cube.hpp"
#include "miscube/executor.hpp"
#include "miscube/interval.hpp"
#include "miscube/mis.hpp"
#include "miscube/peeling.hpp"
#include "miscube/verify.hpp"

namespace miscube {
namespace {

struct MisPool {
  Cube cube;
  std::vector<VertexSet> sets;

  explicit MisPool(int n) : cube(n) {
    Executor ex(1);
    for (auto mask : enumerate_cube_mis(cube, ex)) sets.push_back(mask_to_set(cube, mask));
  }
};

std::vector<StopRule> rule_battery(const Cube& c) {
  return {
      StopRule::empty_only(),
      StopRule::support_at_least(std::uint64_t(support_stop_threshold(c.n()))),
      StopRule::max_deg_at_most(ceil_frac_pow(std::uint64_t(c.n()), 2, 3)),
      StopRule::max_deg_at_most(1),
      StopRule::size_at_most(c.N() / 2),
      first_of({StopRule::support_at_least(2), StopRule::size_at_most(3)}),
  };
}

ClaimResult replay_identity(const std::vector<MisPool>& pools) {
  std::uint64_t runs = 0;
  for (const MisPool& p : pools) {
    const VertexSet full = VertexSet::full(p.cube);
    for (const StopRule& rule : rule_battery(p.cube)) {
      for (const VertexSet& I : p.sets) {
        PeelResult r = peel(p.cube, full, I, rule);
        ReplayOutcome o = replay(p.cube, r.trace);
        ++runs;
        if (!(o.X == r.X) || !(o.removed_in_I == r.removed_in_I) ||
            o.fired_atom != r.fired_atom)
          return {"peeling.replay-identity", false,
                  "n=" + std::to_string(p.cube.n()) + " rule=" + rule.str() +
                      " I=" + I.to_hex()};
      }
    }
  }
  return {"peeling.replay-identity", true, "runs=" + std::to_string(runs)};
}

ClaimResult survivor_mis(const std::vector<MisPool>& pools) {
  std::uint64_t runs = 0;
  for (const MisPool& p : pools) {
    const VertexSet full = VertexSet::full(p.cube);
    for (const StopRule& rule : rule_battery(p.cube)) {
      for (const VertexSet& I : p.sets) {
        PeelResult r = peel(p.cube, full, I, rule);
        ++runs;
        if (!is_mis(p.cube, r.X, I & r.X))
          return {"peeling.survivor-mis", false,
                  "n=" + std::to_string(p.cube.n()) + " rule=" + rule.str() +
                      " I=" + I.to_hex() + " X=" + r.X.to_hex()};
      }
    }
  }
  return {"peeling.survivor-mis", true, "runs=" + std::to_string(runs)};
}

ClaimResult alpha_monotonicity(const std::vector<MisPool>& pools) {
  std::uint64_t runs = 0;
  for (const MisPool& p : pools) {
    const VertexSet full = VertexSet::full(p.cube);
    for (const StopRule& rule : rule_battery(p.cube)) {
      for (const VertexSet& I : p.sets) {
        PeelResult r = peel(p.cube, full, I, rule);
        AlphaReport a = alpha_trajectory(p.cube, r);
        ++runs;
        if (!a.max_deg_bound || !a.support_contraction)
          return {"peeling.alpha-monotonicity", false,
                  "n=" + std::to_string(p.cube.n()) + " rule=" + rule.str() +
                      " I=" + I.to_hex()};
      }
    }
  }
  return {"peeling.alpha-monotonicity", true, "runs=" + std::to_string(runs)};
}

ClaimResult support_stop(const std::vector<MisPool>& pools) {
  std::string detail;
  for (const MisPool& p : pools) {
    const VertexSet full = VertexSet::full(p.cube);
    const StopRule rule =
        StopRule::support_at_least(std::uint64_t(support_stop_threshold(p.cube.n())));
    std::uint64_t applicable = 0;
    for (const VertexSet& I : p.sets) {
      PeelResult r = peel(p.cube, full, I, rule);
      AlphaReport a = alpha_trajectory(p.cube, r);
      if (!a.support_stop_applicable) continue;
      ++applicable;
      if (!a.support_stop_bound)
        return {"peeling.support-stop-bound", false,
                "n=" + std::to_string(p.cube.n()) + " I=" + I.to_hex()};
    }
    const std::uint64_t expect = p.cube.n() == 3 ? 2 : 18;
    if (applicable != expect)
      return {"peeling.support-stop-bound", false,
              "n=" + std::to_string(p.cube.n()) + " applicable=" + std::to_string(applicable) +
                  " want=" + std::to_string(expect)};
    detail += (detail.empty() ? "" : " ") + std::to_string(p.cube.n()) + ":applicable=" +
              std::to_string(applicable);
  }
  return {"peeling.support-stop-bound", true, detail};
}

ClaimResult two_stage(const std::vector<MisPool>& pools) {
  std::uint64_t runs = 0;
  for (const MisPool& p : pools) {
    const std::uint64_t nn = std::uint64_t(p.cube.n());
    const std::uint64_t d1 = ceil_frac_pow(nn, 2, 3), d2 = ceil_frac_pow(nn, 1, 3);
    const VertexSet full = VertexSet::full(p.cube);
    for (const VertexSet& I : p.sets) {
      PeelResult s1 = peel(p.cube, full, I, StopRule::max_deg_at_most(d1));
      PeelResult s2 = peel(p.cube, s1.X, I, StopRule::max_deg_at_most(d2));
      ++runs;
      if (!is_mis(p.cube, s1.X, I & s1.X) || !is_mis(p.cube, s2.X, I & s2.X))
        return {"peeling.two-stage", false,
                "n=" + std::to_string(p.cube.n()) + " I=" + I.to_hex() + " survivor not MIS"};
      SupportSizeBound b1 = support_size_bound(p.cube, s1, d1);
      SupportSizeBound b2 = support_size_bound(p.cube, s2, d2);
      if (!b1.hypothesis || !b1.bound || !b2.hypothesis || !b2.bound)
        return {"peeling.two-stage", false,
                "n=" + std::to_string(p.cube.n()) + " I=" + I.to_hex() + " support bound"};
    }
  }
  return {"peeling.two-stage", true, "runs=" + std::to_string(runs)};
}

}  // namespace

SuiteReport verify_peeling(const VerifyOptions&) {
  std::vector<MisPool> pools;
  pools.emplace_back(3);
  pools.emplace_back(4);
  SuiteReport r;
  r.suite = "peeling";
  r.claims.push_back(replay_identity(pools));
  r.claims.push_back(survivor_mis(pools));
  r.claims.push_back(alpha_monotonicity(pools));
  r.claims.push_back(support_stop(pools));
  r.claims.push_back(two_stage(pools));
  return r;
}

}  // namespace miscube
