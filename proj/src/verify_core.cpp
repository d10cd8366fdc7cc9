#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "miscube/cube.hpp"
#include "miscube/combinatorics.hpp"
#include "miscube/executor.hpp"
#include "miscube/matching.hpp"
#include "miscube/mis.hpp"
#include "miscube/rng.hpp"
#include "miscube/verify.hpp"

namespace miscube {
namespace {

std::uint64_t set_mask(const VertexSet& s) {
  std::uint64_t m = 0;
  for (Vertex v : s.to_vector()) m |= std::uint64_t{1} << v;
  return m;
}

// All perfect matchings on m labeled vertices, as edge lists.
void pair_up(int m, std::uint64_t unpaired, std::vector<std::pair<int, int>>& cur,
             std::vector<std::vector<std::pair<int, int>>>& out) {
  if (!unpaired) {
    out.push_back(cur);
    return;
  }
  int u = __builtin_ctzll(unpaired);
  std::uint64_t rest = unpaired & ~(std::uint64_t{1} << u);
  for (std::uint64_t w = rest; w; w &= w - 1) {
    int v = __builtin_ctzll(w);
    cur.push_back({u, v});
    pair_up(m, rest & ~(std::uint64_t{1} << v), cur, out);
    cur.pop_back();
  }
}

ClaimResult count_subset_oracle() {
  std::string detail;
  for (int n = 1; n <= 3; ++n) {
    Cube c(n);
    MaskGraph g = cube_mask_graph(c);
    std::uint64_t full = (std::uint64_t{1} << c.N()) - 1;
    std::uint64_t oracle = mis_by_subsets(g, full).size();
    std::uint64_t engine = count_mis_masks(g, full);
    if (engine != oracle)
      return {"core.count-subset-oracle", false,
              "n=" + std::to_string(n) + " engine=" + std::to_string(engine) +
                  " oracle=" + std::to_string(oracle)};
    detail += (n > 1 ? " " : "") + std::to_string(n) + ":" + std::to_string(engine);
  }
  return {"core.count-subset-oracle", true, detail};
}

ClaimResult count_frozen(Executor& ex) {
  const std::uint64_t expect[] = {0, 2, 2, 6, 42, 1670};
  std::string detail;
  for (int n = 1; n <= 5; ++n) {
    MisReport r = count_cube_mis(Cube(n), ex);
    if (r.partial || r.count != BigInt(expect[n]))
      return {"core.count-frozen", false,
              "n=" + std::to_string(n) + " got=" + r.count.str() +
                  " want=" + std::to_string(expect[n])};
    detail += (n > 1 ? "," : "") + r.count.str();
  }
  return {"core.count-frozen", true, detail};
}

ClaimResult count_worker_stable(const VerifyOptions& opts) {
  Executor one(1), many(opts.workers);
  std::string detail;
  for (int n = 4; n <= 5; ++n) {
    Cube c(n);
    MisReport a = count_cube_mis(c, one);
    MisReport b = count_cube_mis(c, many);
    if (a.count != b.count)
      return {"core.count-worker-stable", false,
              "n=" + std::to_string(n) + " serial=" + a.count.str() +
                  " pooled=" + b.count.str()};
    detail += (n > 4 ? " " : "") + std::to_string(n) + ":" + a.count.str();
  }
  return {"core.count-worker-stable", true, detail};
}

ClaimResult canonical_families_complete(Executor& ex) {
  std::string detail;
  for (int n = 3; n <= 4; ++n) {
    Cube c(n);
    std::vector<std::uint64_t> global = enumerate_cube_mis(c, ex);
    std::uint64_t want = std::uint64_t{1} << (c.N() / 4);
    for (const auto& cm : canonical_matchings(c)) {
      std::vector<VertexSet> fam = canonical_family(c, cm);
      if (fam.size() != want)
        return {"core.canonical-families", false,
                "n=" + std::to_string(n) + " dir=" + std::to_string(cm.dir) +
                    " eps=" + std::to_string(cm.eps) + " size=" + std::to_string(fam.size()) +
                    " want=" + std::to_string(want)};
      for (const VertexSet& I : fam)
        if (!std::binary_search(global.begin(), global.end(), set_mask(I)))
          return {"core.canonical-families", false,
                  "n=" + std::to_string(n) + " missing=" + I.to_hex()};
    }
    detail += (n > 3 ? " " : "") + std::to_string(n) + ":" +
              std::to_string(2 * n) + "x" + std::to_string(want);
  }
  return {"core.canonical-families", true, detail};
}

ClaimResult family_overlap_bound() {
  std::string detail;
  for (int n = 3; n <= 4; ++n) {
    Cube c(n);
    std::uint64_t bound = 1;
    for (std::uint64_t i = 0; i < c.N() / 8; ++i) bound *= 3;
    VertexSet evens = VertexSet::even_class(c), odds = VertexSet::odd_class(c);
    std::uint64_t max_cross = 0;
    auto cms = canonical_matchings(c);
    for (std::size_t i = 0; i < cms.size(); ++i) {
      for (std::size_t j = i + 1; j < cms.size(); ++j) {
        std::uint64_t ov = family_overlap(c, cms[i], cms[j]);
        if (ov > bound)
          return {"core.family-overlap", false,
                  "n=" + std::to_string(n) + " pair=(" + std::to_string(cms[i].dir) + "," +
                      std::to_string(cms[j].dir) + ") overlap=" + std::to_string(ov) +
                      " bound=" + std::to_string(bound)};
        if (cms[i].dir == cms[j].dir) {
          std::vector<VertexSet> a = canonical_family(c, cms[i]);
          std::vector<VertexSet> b = canonical_family(c, cms[j]);
          std::sort(a.begin(), a.end());
          std::sort(b.begin(), b.end());
          std::vector<VertexSet> both;
          std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(both));
          bool is_eo = both.size() == 2 &&
                       ((both[0] == evens && both[1] == odds) ||
                        (both[0] == odds && both[1] == evens));
          if (ov != 2 || !is_eo)
            return {"core.family-overlap", false,
                    "n=" + std::to_string(n) + " same-dir=" + std::to_string(cms[i].dir) +
                        " overlap=" + std::to_string(ov) + " want classes"};
        } else {
          max_cross = std::max(max_cross, ov);
        }
      }
    }
    detail += (n > 3 ? " " : "") + std::to_string(n) + ":max=" + std::to_string(max_cross) +
              "/" + std::to_string(bound);
  }
  return {"core.family-overlap", true, detail};
}

ClaimResult largest_im_canonical() {
  std::string detail;
  for (int n = 2; n <= 4; ++n) {
    Cube c(n);
    VertexSet full = VertexSet::full(c);
    LargestIm top = largest_im(c, full);
    if (std::uint64_t(top.size) != c.N() / 4)
      return {"core.largest-im", false,
              "n=" + std::to_string(n) + " size=" + std::to_string(top.size)};
    std::vector<Matching> achievers;
    for (const Matching& m : all_induced_matchings(c, full))
      if (m.size() == c.N() / 4) achievers.push_back(m);
    std::vector<Matching> canon;
    for (const auto& cm : canonical_matchings(c)) canon.push_back(canonical_edges(c, cm));
    auto ids_less = [&c](const Matching& a, const Matching& b) {
      return matching_ids(c, a) < matching_ids(c, b);
    };
    std::sort(achievers.begin(), achievers.end(), ids_less);
    std::sort(canon.begin(), canon.end(), ids_less);
    if (achievers != canon)
      return {"core.largest-im", false,
              "n=" + std::to_string(n) + " achievers=" + std::to_string(achievers.size()) +
                  " canonical=" + std::to_string(canon.size())};
    detail += (n > 2 ? " " : "") + std::to_string(n) + ":" + std::to_string(top.size) + "@" +
              std::to_string(achievers.size());
  }
  return {"core.largest-im", true, detail};
}

ClaimResult matching_count_bound(const VerifyOptions& opts) {
  // Seeded triangle-free graphs by edge-add with rejection.
  for (int rep = 0; rep < 10000; ++rep) {
    auto rng = SplitMix64::substream(opts.seed, std::uint64_t(rep));
    const int m = 2 + int(rng.below(11));
    MaskGraph adj(std::size_t(m), 0);
    std::vector<std::pair<int, int>> edges;
    const int attempts = int(rng.below(std::uint64_t(2 * m + 1)));
    for (int t = 0; t < attempts; ++t) {
      const int u = int(rng.below(std::uint64_t(m))), v = int(rng.below(std::uint64_t(m)));
      if (u == v || ((adj[std::size_t(u)] >> v) & 1) ||
          (adj[std::size_t(u)] & adj[std::size_t(v)]))
        continue;
      adj[std::size_t(u)] |= std::uint64_t{1} << v;
      adj[std::size_t(v)] |= std::uint64_t{1} << u;
      edges.push_back({u, v});
    }
    HtReport r = ht_bound_check(m, edges);
    if (!r.bound_holds || r.equality != r.perfect_matching)
      return {"core.matching-count-bound", false,
              "random rep=" + std::to_string(rep) + " m=" + std::to_string(m) +
                  " count=" + std::to_string(r.count)};
  }
  // Every perfect matching graph on m labeled vertices, m even.
  std::uint64_t pm_total = 0;
  for (int m = 2; m <= 12; m += 2) {
    std::vector<std::vector<std::pair<int, int>>> pms;
    std::vector<std::pair<int, int>> cur;
    pair_up(m, (std::uint64_t{1} << m) - 1, cur, pms);
    for (const auto& edges : pms) {
      HtReport r = ht_bound_check(m, edges);
      if (!r.bound_holds || !r.equality || !r.perfect_matching)
        return {"core.matching-count-bound", false,
                "pm m=" + std::to_string(m) + " count=" + std::to_string(r.count)};
    }
    pm_total += pms.size();
  }
  return {"core.matching-count-bound", true,
          "random=10000 perfect=" + std::to_string(pm_total)};
}

ClaimResult assignment_oracle(const VerifyOptions& opts, Executor& ex) {
  Cube c3(3);
  for (auto mask : enumerate_cube_mis(c3, ex)) {
    VertexSet I = mask_to_set(c3, mask);
    VertexSet full = VertexSet::full(c3);
    if (!(assignment_matching(c3, full, I) == assignment_matching_oracle(c3, full, I)))
      return {"core.assignment-oracle", false, "q3 I=" + I.to_hex()};
  }
  Cube c4(4);
  const MaskGraph g = cube_mask_graph(c4);
  int built = 0;
  for (std::uint64_t rep = 0; built < 200; ++rep) {
    if (rep >= 20000)
      return {"core.assignment-oracle", false, "generator starved"};
    auto rng = SplitMix64::substream(opts.seed, 100000 + rep);
    std::uint64_t verts = rng.next() & 0xffff;
    if (__builtin_popcountll(verts) > 14) continue;
    ++built;
    std::uint64_t I = 0, cand = verts;
    while (cand) {
      const int pick = int(rng.below(std::uint64_t(__builtin_popcountll(cand))));
      std::uint64_t rest = cand;
      for (int k = 0; k < pick; ++k) rest &= rest - 1;
      const int v = __builtin_ctzll(rest);
      I |= std::uint64_t{1} << v;
      cand &= ~(g[std::size_t(v)] | (std::uint64_t{1} << v));
    }
    const VertexSet vs = mask_to_set(c4, verts), is = mask_to_set(c4, I);
    if (!(assignment_matching(c4, vs, is) == assignment_matching_oracle(c4, vs, is)))
      return {"core.assignment-oracle", false,
              "q4 verts=" + vs.to_hex() + " I=" + is.to_hex()};
  }
  return {"core.assignment-oracle", true, "q3=6 random=200"};
}

ClaimResult compositions_identities() {
  for (unsigned m = 1; m <= 20; ++m)
    if (compositions_count(m) != pow2(int(m) - 1))
      return {"core.compositions", false, "closed form fails at m=" + std::to_string(m)};
  for (unsigned m = 1; m <= 12; ++m) {
    auto all = enumerate_compositions(m);
    if (BigInt(all.size()) != compositions_count(m))
      return {"core.compositions", false, "enumeration size at m=" + std::to_string(m)};
    for (unsigned b = 1; b <= m / 2; ++b) {
      std::uint64_t direct = 0;
      for (const auto& parts : all)
        if (parts.size() <= b) ++direct;
      CompositionsAtMost r = compositions_at_most(m, b);
      if (r.exact != BigInt(direct))
        return {"core.compositions", false,
                "at-most m=" + std::to_string(m) + " b=" + std::to_string(b) +
                    " exact=" + r.exact.str() + " direct=" + std::to_string(direct)};
    }
  }
  return {"core.compositions", true, "closed-form m<=20 enumeration m<=12"};
}

ClaimResult klinked_tree_bound() {
  std::uint64_t checked = 0;
  for (int n = 2; n <= 4; ++n) {
    Cube c(n);
    for (Vertex v = 0; v < c.N(); ++v) {
      for (int x = 1; x <= 4; ++x) {
        KlinkedCount r = count_klinked(c, v, x, 2);
        ++checked;
        if (!r.bound_holds)
          return {"core.klinked-bound", false,
                  "n=" + std::to_string(n) + " v=" + std::to_string(v) +
                      " x=" + std::to_string(x) + " count=" + std::to_string(r.count)};
      }
    }
  }
  return {"core.klinked-bound", true, "checked=" + std::to_string(checked)};
}

}  // namespace

SuiteReport verify_core(const VerifyOptions& opts) {
  Executor ex(opts.workers);
  SuiteReport r;
  r.suite = "core";
  r.claims.push_back(count_subset_oracle());
  r.claims.push_back(count_frozen(ex));
  r.claims.push_back(count_worker_stable(opts));
  r.claims.push_back(canonical_families_complete(ex));
  r.claims.push_back(family_overlap_bound());
  r.claims.push_back(largest_im_canonical());
  r.claims.push_back(matching_count_bound(opts));
  r.claims.push_back(assignment_oracle(opts, ex));
  r.claims.push_back(compositions_identities());
  r.claims.push_back(klinked_tree_bound());
  return r;
}

}  // namespace miscube
