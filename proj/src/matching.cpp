#include "miscube/matching.hpp"

#include <algorithm>
#include <stdexcept>

namespace miscube {

namespace {

int popcount(std::uint64_t x) { return __builtin_popcountll(x); }

struct EdgeCand {
  Edge e;
  std::uint64_t id = 0;
  std::uint64_t pair = 0;    // both endpoints
  std::uint64_t closed = 0;  // endpoints and their neighbors
  std::uint64_t nbrs = 0;    // neighbors off the edge
};

// Candidate edges of cube[verts] in id order, pair/closed masks precomputed.
std::vector<EdgeCand> candidate_edges(const Cube& c, const MaskGraph& g, std::uint64_t verts) {
  std::vector<EdgeCand> out;
  for (std::uint64_t id = 0; id < std::uint64_t(c.n()) * (c.N() / 2); ++id) {
    const Edge e = Edge::from_id(c, id);
    const std::uint64_t pair =
        (std::uint64_t{1} << e.lo) | (std::uint64_t{1} << e.hi());
    if (pair & ~verts) continue;
    EdgeCand cand;
    cand.e = e;
    cand.id = id;
    cand.pair = pair;
    cand.nbrs = (g[e.lo] | g[e.hi()]) & ~pair;
    cand.closed = pair | cand.nbrs;
    out.push_back(cand);
  }
  return out;
}

// Shared DFS core over candidate edges in id order. `imask` nonzero switches
// on the assignment constraints (every edge meets I, and the incremental
// exactness prune for edges between V(M) and I off V(M)).
class ImSearch {
 public:
  ImSearch(std::vector<EdgeCand> cand, std::uint64_t verts, std::uint64_t imask)
      : cand_(std::move(cand)), verts_(verts), imask_(imask) {
    if (imask_) {
      std::erase_if(cand_, [&](const EdgeCand& e) { return (e.pair & imask_) == 0; });
    }
  }

  int max_size() {
    best_ = 0;
    max_dfs(0, 0, 0, 0);
    return best_;
  }

  // The id-order-first matching of exactly `target` edges (which must be
  // feasible): committing the lowest-id edge whose subtree still reaches the
  // target yields the lexicographically least sorted id list.
  std::vector<EdgeCand> first_witness(int target) {
    std::vector<EdgeCand> out;
    std::uint64_t blocked = 0, used = 0;
    std::size_t idx = 0;
    int need = target;
    while (need > 0) {
      bool stepped = false;
      for (; idx < cand_.size(); ++idx) {
        const EdgeCand& e = cand_[idx];
        if (!feasible(e, blocked, used)) continue;
        if (!exists(idx + 1, blocked | e.closed, used | e.pair, need - 1)) continue;
        out.push_back(e);
        blocked |= e.closed;
        used |= e.pair;
        ++idx;
        --need;
        stepped = true;
        break;
      }
      if (!stepped) throw std::logic_error("first_witness: target size unreachable");
    }
    return out;
  }

 private:
  bool feasible(const EdgeCand& e, std::uint64_t blocked, std::uint64_t used) const {
    if (e.pair & blocked) return false;
    if (imask_ && (e.nbrs & imask_ & ~(used | e.pair))) return false;
    return true;
  }

  void max_dfs(std::size_t idx, std::uint64_t blocked, std::uint64_t used, int size) {
    if (size > best_) best_ = size;
    if (size + popcount(verts_ & ~blocked) / 2 <= best_) return;
    for (std::size_t i = idx; i < cand_.size(); ++i) {
      const EdgeCand& e = cand_[i];
      if (!feasible(e, blocked, used)) continue;
      max_dfs(i + 1, blocked | e.closed, used | e.pair, size + 1);
    }
  }

  bool exists(std::size_t idx, std::uint64_t blocked, std::uint64_t used, int need) const {
    if (need == 0) return true;
    if (popcount(verts_ & ~blocked) / 2 < need) return false;
    for (std::size_t i = idx; i < cand_.size(); ++i) {
      const EdgeCand& e = cand_[i];
      if (!feasible(e, blocked, used)) continue;
      if (exists(i + 1, blocked | e.closed, used | e.pair, need - 1)) return true;
    }
    return false;
  }

  std::vector<EdgeCand> cand_;
  std::uint64_t verts_;
  std::uint64_t imask_;
  int best_ = 0;
};

std::uint64_t set_to_mask(const VertexSet& s) {
  if (s.n() > 6) throw cap_exceeded("matching search: dimension > 6");
  return s.as_word();
}

Matching to_matching(std::vector<EdgeCand> picked) {
  Matching m;
  m.edges.reserve(picked.size());
  for (const auto& e : picked) m.edges.push_back(e.e);
  return m;
}

}  // namespace

Matching make_matching(const Cube& c, std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end(),
            [&](const Edge& a, const Edge& b) { return a.id(c) < b.id(c); });
  VertexSet seen(c);
  for (const Edge& e : edges) {
    c.check_vertex(e.hi());
    if (seen.contains(e.lo) || seen.contains(e.hi()))
      throw std::invalid_argument("make_matching: edges share a vertex");
    seen.insert(e.lo);
    seen.insert(e.hi());
  }
  return Matching{std::move(edges)};
}

std::vector<std::uint64_t> matching_ids(const Cube& c, const Matching& m) {
  std::vector<std::uint64_t> ids;
  ids.reserve(m.edges.size());
  for (const Edge& e : m.edges) ids.push_back(e.id(c));
  std::sort(ids.begin(), ids.end());
  return ids;
}

VertexSet matching_vertices(const Cube& c, const Matching& m) {
  VertexSet s(c);
  for (const Edge& e : m.edges) {
    s.insert(e.lo);
    s.insert(e.hi());
  }
  return s;
}

bool matching_precedes(const Cube& c, const Matching& a, const Matching& b) {
  return matching_ids(c, a) < matching_ids(c, b);
}

int matching_distance(const Cube& c, const Matching& a, const Matching& b) {
  const auto ia = matching_ids(c, a), ib = matching_ids(c, b);
  std::vector<std::uint64_t> sym;
  std::set_symmetric_difference(ia.begin(), ia.end(), ib.begin(), ib.end(),
                                std::back_inserter(sym));
  return static_cast<int>(sym.size());
}

bool is_induced_matching(const Cube& c, const VertexSet& verts, const Matching& m) {
  VertexSet ends(c);
  for (const Edge& e : m.edges) {
    if (!verts.contains(e.lo) || !verts.contains(e.hi()))
      throw std::invalid_argument("is_induced_matching: edge outside subgraph");
    if (ends.contains(e.lo) || ends.contains(e.hi())) return false;
    ends.insert(e.lo);
    ends.insert(e.hi());
  }
  return internal_edge_count(c, ends) == m.edges.size();
}

std::vector<CanonicalMatching> canonical_matchings(const Cube& c) {
  if (c.n() < 2)
    throw std::invalid_argument("canonical_matchings: size N/4 needs n >= 2");
  std::vector<CanonicalMatching> out;
  out.reserve(2 * c.n());
  for (int dir = 1; dir <= c.n(); ++dir)
    for (int eps = 0; eps <= 1; ++eps) out.push_back({dir, eps});
  return out;
}

Matching canonical_edges(const Cube& c, const CanonicalMatching& cm) {
  c.check_dir(cm.dir);
  if (cm.eps != 0 && cm.eps != 1) throw std::invalid_argument("canonical_edges: bad parity");
  if (c.n() < 2)
    throw std::invalid_argument("canonical_edges: size N/4 needs n >= 2");
  Matching m;
  m.edges.reserve(c.N() / 4);
  for (Vertex v = 0; v < c.N(); ++v) {
    if ((v >> (cm.dir - 1)) & 1) continue;
    if ((__builtin_popcount(v) & 1) != cm.eps) continue;
    m.edges.push_back(Edge(v, cm.dir));
  }
  return m;
}

std::pair<CanonicalMatching, int> nearest_canonical(const Cube& c, const Matching& m) {
  if (!is_induced_matching(c, VertexSet::full(c), m))
    throw std::invalid_argument("nearest_canonical: not an induced matching");
  std::pair<CanonicalMatching, int> best{{1, 0}, -1};
  for (const auto& cm : canonical_matchings(c)) {
    const int d = matching_distance(c, m, canonical_edges(c, cm));
    if (best.second < 0 || d < best.second) best = {cm, d};
  }
  return best;
}

std::vector<VertexSet> canonical_family(const Cube& c, const CanonicalMatching& cm) {
  const Matching m = canonical_edges(c, cm);
  const VertexSet full = VertexSet::full(c);
  if (m.edges.size() > 20) throw cap_exceeded("canonical_family: 2^(N/4) too large");
  std::vector<VertexSet> out;
  out.reserve(std::size_t{1} << m.edges.size());
  for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << m.edges.size()); ++choice) {
    VertexSet seed(c);
    for (std::size_t k = 0; k < m.edges.size(); ++k)
      seed.insert((choice >> k) & 1 ? m.edges[k].hi() : m.edges[k].lo);
    ExtendResult r = extend_to_mis(c, full, seed);
    if (!r.unique)
      throw std::logic_error("canonical_family: endpoint choice with ambiguous completion");
    out.push_back(r.mis);
  }
  std::sort(out.begin(), out.end());
  for (std::size_t k = 1; k < out.size(); ++k)
    if (out[k - 1] == out[k])
      throw std::logic_error("canonical_family: duplicate member");
  return out;
}

std::uint64_t family_overlap(const Cube& c, const CanonicalMatching& a,
                             const CanonicalMatching& b) {
  if (a == b) throw std::invalid_argument("family_overlap: matchings must differ");
  const auto fa = canonical_family(c, a);
  const auto fb = canonical_family(c, b);
  std::uint64_t n = 0;
  std::size_t i = 0, j = 0;
  while (i < fa.size() && j < fb.size()) {
    const auto cmp = fa[i] <=> fb[j];
    if (cmp == 0) {
      ++n;
      ++i;
      ++j;
    } else if (cmp < 0) {
      ++i;
    } else {
      ++j;
    }
  }
  return n;
}

LargestIm largest_im(const Cube& c, const VertexSet& verts) {
  const std::uint64_t vm = set_to_mask(verts);
  ImSearch search(candidate_edges(c, cube_mask_graph(c), vm), vm, 0);
  LargestIm out;
  out.size = search.max_size();
  out.witness = to_matching(search.first_witness(out.size));
  return out;
}

std::vector<Matching> all_induced_matchings(const Cube& c, const VertexSet& verts) {
  if (verts.count() > 16)
    throw cap_exceeded("all_induced_matchings: more than 16 vertices");
  const std::uint64_t vm = set_to_mask(verts);
  const auto cand = candidate_edges(c, cube_mask_graph(c), vm);
  std::vector<Matching> out;
  std::vector<EdgeCand> cur;
  auto dfs = [&](auto&& self, std::size_t idx, std::uint64_t blocked) -> void {
    out.push_back(to_matching(cur));
    for (std::size_t i = idx; i < cand.size(); ++i) {
      if (cand[i].pair & blocked) continue;
      cur.push_back(cand[i]);
      self(self, i + 1, blocked | cand[i].closed);
      cur.pop_back();
    }
  };
  dfs(dfs, 0, 0);
  return out;
}

Matching assignment_matching(const Cube& c, const VertexSet& verts, const VertexSet& I) {
  if (!is_mis(c, verts, I))
    throw std::invalid_argument("assignment_matching: I is not an MIS of the subgraph");
  const std::uint64_t vm = set_to_mask(verts);
  ImSearch search(candidate_edges(c, cube_mask_graph(c), vm), vm, I.as_word());
  const int best = search.max_size();
  return to_matching(search.first_witness(best));
}

Matching assignment_matching_oracle(const Cube& c, const VertexSet& verts, const VertexSet& I) {
  if (!is_mis(c, verts, I))
    throw std::invalid_argument("assignment_matching_oracle: I is not an MIS of the subgraph");
  const MaskGraph g = cube_mask_graph(c);
  const std::uint64_t imask = I.as_word();
  bool have = false;
  std::size_t best_size = 0;
  std::vector<std::uint64_t> best_ids;
  Matching best;
  for (const Matching& m : all_induced_matchings(c, verts)) {
    std::uint64_t vmask = 0;
    bool meets = true;
    for (const Edge& e : m.edges) {
      const std::uint64_t pair =
          (std::uint64_t{1} << e.lo) | (std::uint64_t{1} << e.hi());
      if ((pair & imask) == 0) meets = false;
      vmask |= pair;
    }
    if (!meets) continue;
    bool sealed = true;  // no edges from V(M) into I off V(M)
    const std::uint64_t outside = imask & ~vmask;
    for (std::uint64_t rest = vmask; rest && sealed;) {
      const int v = __builtin_ctzll(rest);
      rest &= rest - 1;
      if (g[v] & outside) sealed = false;
    }
    if (!sealed) continue;
    auto ids = matching_ids(c, m);
    if (!have || m.edges.size() > best_size ||
        (m.edges.size() == best_size && ids < best_ids)) {
      have = true;
      best_size = m.edges.size();
      best_ids = std::move(ids);
      best = m;
    }
  }
  return best;  // the empty matching always qualifies
}

}  // namespace miscube
