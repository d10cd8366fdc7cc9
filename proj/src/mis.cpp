#include "miscube/mis.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>

namespace miscube {

namespace {

int popcount(std::uint64_t x) { return __builtin_popcountll(x); }

// Pivoted recursive extension. R: chosen so far; P: candidates compatible
// with all of R; X: already-branched vertices compatible with all of R
// (nonempty X means R extends to an already-reported set). comp_[v] is the
// compatibility row: universe & ~adj[v] & ~{v}.
class Searcher {
 public:
  Searcher(const MaskGraph& g, std::uint64_t universe) : comp_(g.size()) {
    for (std::size_t v = 0; v < g.size(); ++v)
      comp_[v] = universe & ~g[v] & ~(std::uint64_t{1} << v);
  }

  struct Frame {
    std::uint64_t R, P, X;
  };

  // Every maximal set reachable from the frame, ascending-branch DFS.
  // Returns false iff the stop flag fired (deadline); counts are then partial.
  template <class Visit>
  bool run(Frame f, Visit&& visit, std::atomic<bool>* stop,
           std::chrono::steady_clock::time_point deadline) {
    stop_ = stop;
    deadline_ = deadline;
    nodes_ = 0;
    return expand(f.R, f.P, f.X, visit);
  }

  // The first two branching levels as frames, in deterministic DFS order.
  // Terminal nodes (P = X = 0) become single-set frames; dead ends are
  // dropped.
  std::vector<Frame> presplit(std::uint64_t universe) const {
    std::vector<Frame> out;
    split(0, universe, 0, 0, out);
    return out;
  }

 private:
  template <class Visit>
  bool expand(std::uint64_t R, std::uint64_t P, std::uint64_t X, Visit& visit) {
    if (stop_ != nullptr && (++nodes_ & 1023) == 0) {
      if (stop_->load(std::memory_order_relaxed)) return false;
      if (std::chrono::steady_clock::now() >= deadline_) {
        stop_->store(true, std::memory_order_relaxed);
        return false;
      }
    }
    if (P == 0) {
      if (X == 0) visit(R);
      return true;
    }
    std::uint64_t branch = P & ~comp_[pivot(P, X)];
    while (branch) {
      const int v = __builtin_ctzll(branch);
      branch &= branch - 1;
      const std::uint64_t bit = std::uint64_t{1} << v;
      if (!expand(R | bit, P & comp_[v], X & comp_[v], visit)) return false;
      P &= ~bit;
      X |= bit;
    }
    return true;
  }

  void split(std::uint64_t R, std::uint64_t P, std::uint64_t X, int depth,
             std::vector<Frame>& out) const {
    if (P == 0) {
      if (X == 0) out.push_back({R, P, X});
      return;
    }
    if (depth == 2) {
      out.push_back({R, P, X});
      return;
    }
    std::uint64_t branch = P & ~comp_[pivot(P, X)];
    while (branch) {
      const int v = __builtin_ctzll(branch);
      branch &= branch - 1;
      const std::uint64_t bit = std::uint64_t{1} << v;
      split(R | bit, P & comp_[v], X & comp_[v], depth + 1, out);
      P &= ~bit;
      X |= bit;
    }
  }

  // Vertex of P|X whose compatibility row covers most of P; lowest index on
  // ties. Minimizes the branch set P & ~comp_[u].
  int pivot(std::uint64_t P, std::uint64_t X) const {
    int best = -1, best_cover = -1;
    std::uint64_t cand = P | X;
    while (cand) {
      const int u = __builtin_ctzll(cand);
      cand &= cand - 1;
      const int cover = popcount(P & comp_[u]);
      if (cover > best_cover) {
        best_cover = cover;
        best = u;
      }
    }
    return best;
  }

  std::vector<std::uint64_t> comp_;
  std::atomic<bool>* stop_ = nullptr;
  std::chrono::steady_clock::time_point deadline_{};
  std::uint64_t nodes_ = 0;
};

std::uint64_t full_universe(const Cube& c) {
  return c.n() == 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << c.N()) - 1;
}

void check_engine_dims(const Cube& c, int enum_cap) {
  if (enum_cap > 6) enum_cap = 6;
  if (c.n() > enum_cap)
    throw cap_exceeded("mis engine: dimension " + std::to_string(c.n()) +
                       " exceeds enumeration cap " + std::to_string(enum_cap));
}

}  // namespace

MaskGraph cube_mask_graph(const Cube& c) {
  if (c.n() > 6) throw cap_exceeded("cube_mask_graph: dimension > 6");
  MaskGraph g(c.N(), 0);
  for (Vertex v = 0; v < c.N(); ++v)
    for (int i = 1; i <= c.n(); ++i) g[v] |= std::uint64_t{1} << c.flip(v, i);
  return g;
}

bool is_independent_mask(const MaskGraph& g, std::uint64_t s) {
  std::uint64_t rest = s;
  while (rest) {
    const int v = __builtin_ctzll(rest);
    rest &= rest - 1;
    if (g[v] & s) return false;
  }
  return true;
}

bool is_mis_mask(const MaskGraph& g, std::uint64_t universe, std::uint64_t s) {
  if (s & ~universe) throw std::invalid_argument("is_mis_mask: set outside universe");
  if (!is_independent_mask(g, s)) return false;
  std::uint64_t rest = universe & ~s;
  while (rest) {
    const int v = __builtin_ctzll(rest);
    rest &= rest - 1;
    if ((g[v] & s) == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> mis_by_subsets(const MaskGraph& g, std::uint64_t universe) {
  if (popcount(universe) > 24)
    throw cap_exceeded("mis_by_subsets: universe larger than 24 vertices");
  std::vector<std::uint64_t> out;
  // Standard submask walk, descending; 0 handled after the loop.
  for (std::uint64_t s = universe;; s = (s - 1) & universe) {
    if (is_mis_mask(g, universe, s)) out.push_back(s);
    if (s == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> enumerate_mis_masks(const MaskGraph& g, std::uint64_t universe) {
  Searcher se(g, universe);
  std::vector<std::uint64_t> out;
  se.run({0, universe, 0}, [&](std::uint64_t R) { out.push_back(R); }, nullptr, {});
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_mis_masks(const MaskGraph& g, std::uint64_t universe) {
  Searcher se(g, universe);
  std::uint64_t n = 0;
  se.run({0, universe, 0}, [&](std::uint64_t) { ++n; }, nullptr, {});
  return n;
}

MisReport count_cube_mis(const Cube& c, Executor& ex, long long budget_ms, int enum_cap) {
  check_engine_dims(c, enum_cap);
  const auto t0 = std::chrono::steady_clock::now();
  Searcher se(cube_mask_graph(c), full_universe(c));
  const auto frames = se.presplit(full_universe(c));

  std::atomic<bool> stop{false};
  const auto deadline = budget_ms < 0 ? std::chrono::steady_clock::time_point::max()
                                      : t0 + std::chrono::milliseconds(budget_ms);
  std::vector<std::uint64_t> counts(frames.size(), 0);
  std::vector<char> done(frames.size(), 0);
  ex.parallel_for(frames.size(), [&](std::size_t i) {
    Searcher local(se);
    std::uint64_t n = 0;
    done[i] = local.run(frames[i], [&](std::uint64_t) { ++n; },
                        budget_ms < 0 ? nullptr : &stop, deadline);
    counts[i] = n;
  });

  MisReport rep;
  rep.n = c.n();
  rep.workers = ex.workers();
  for (std::size_t i = 0; i < frames.size(); ++i) {
    rep.count += counts[i];
    if (!done[i]) rep.partial = true;
  }
  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::vector<std::uint64_t> enumerate_cube_mis(const Cube& c, Executor& ex, int enum_cap) {
  check_engine_dims(c, enum_cap);
  Searcher se(cube_mask_graph(c), full_universe(c));
  const auto frames = se.presplit(full_universe(c));
  std::vector<std::vector<std::uint64_t>> parts(frames.size());
  ex.parallel_for(frames.size(), [&](std::size_t i) {
    Searcher local(se);
    local.run(frames[i], [&](std::uint64_t R) { parts[i].push_back(R); }, nullptr, {});
  });
  std::vector<std::uint64_t> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet mask_to_set(const Cube& c, std::uint64_t mask) {
  if (c.n() > 6) throw cap_exceeded("mask_to_set: dimension > 6");
  return VertexSet::from_word(c, mask);
}

bool is_independent(const Cube& c, const VertexSet& verts, const VertexSet& s) {
  if (!s.subset_of(verts)) throw std::invalid_argument("is_independent: set outside subgraph");
  for (int i = 1; i <= c.n(); ++i)
    if (s.intersects(s.flipped(i))) return false;
  return true;
}

bool is_mis(const Cube& c, const VertexSet& verts, const VertexSet& s) {
  if (!is_independent(c, verts, s)) return false;
  // Everything in verts off s needs an s-neighbor inside the subgraph.
  VertexSet dominated = neighborhood(c, s);
  dominated &= verts;
  dominated |= s;
  return verts.subset_of(dominated);
}

ExtendResult extend_to_mis(const Cube& c, const VertexSet& verts, const VertexSet& s) {
  if (!is_independent(c, verts, s))
    throw std::invalid_argument("extend_to_mis: seed not independent in subgraph");
  VertexSet r = verts;
  r -= s;
  r -= neighborhood(c, s);
  ExtendResult res;
  bool found = false;
  Edge best(0, 1);
  for (int i = 1; i <= c.n(); ++i) {
    VertexSet hit = r & r.flipped(i);
    if (!hit.any()) continue;
    // Lower endpoints only, for a canonical witness.
    VertexSet lows(c);
    hit.for_each([&](Vertex v) {
      if (((v >> (i - 1)) & 1) == 0) lows.insert(v);
    });
    const Edge e(lows.first(), i);
    if (!found || e.id(c) < best.id(c)) {
      best = e;
      found = true;
    }
  }
  if (found) {
    res.unique = false;
    res.witness = best;
    return res;
  }
  res.unique = true;
  res.mis = s | r;
  return res;
}

HtReport ht_bound_check(int m, const std::vector<std::pair<int, int>>& edges) {
  if (m < 1 || m > 24) throw std::invalid_argument("ht_bound_check: m out of range");
  MaskGraph g(static_cast<std::size_t>(m), 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= m || v >= m || u == v)
      throw std::invalid_argument("ht_bound_check: malformed edge");
    if ((g[u] >> v) & 1) throw std::invalid_argument("ht_bound_check: duplicate edge");
    g[u] |= std::uint64_t{1} << v;
    g[v] |= std::uint64_t{1} << u;
  }
  for (int u = 0; u < m; ++u) {
    std::uint64_t both = g[u] & ~((std::uint64_t{1} << (u + 1)) - 1);
    while (both) {
      const int v = __builtin_ctzll(both);
      both &= both - 1;
      if (g[u] & g[v]) throw std::invalid_argument("ht_bound_check: graph has a triangle");
    }
  }

  HtReport rep;
  rep.m = m;
  const std::uint64_t universe = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
  rep.count = count_mis_masks(g, universe);
  rep.perfect_matching = true;
  for (int v = 0; v < m; ++v)
    if (popcount(g[v]) != 1) rep.perfect_matching = false;
  const BigInt lhs = BigInt(rep.count) * rep.count;
  const BigInt rhs = pow2(static_cast<unsigned>(m));
  rep.bound_holds = lhs <= rhs;
  rep.equality = lhs == rhs;
  return rep;
}

}  // namespace miscube
