#include "miscube/projection.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace miscube {
namespace {

Vertex remap_vertex(Vertex v, int n, const std::vector<int>& dir_map) {
  Vertex out = 0;
  for (int d = 1; d <= n; ++d)
    if ((v >> (d - 1)) & 1) out |= Vertex{1} << (dir_map[d] - 1);
  return out;
}

bool contains_edge(const Matching& m, const Edge& e) {
  return std::binary_search(m.edges.begin(), m.edges.end(), e,
                            [](const Edge& a, const Edge& b) { return a < b; });
}

// Directions of the matching edges meeting each fiber, one entry per edge.
std::vector<std::vector<int>> edges_per_fiber(int n, const Matching& m) {
  Vertex base_mask = (Vertex{1} << (n - 2)) - 1;
  std::vector<std::vector<int>> hits(std::size_t{1} << (n - 2));
  for (const Edge& e : m.edges) {
    Vertex bu = e.lo & base_mask;
    Vertex bv = e.hi() & base_mask;
    hits[bu].push_back(e.dir);
    if (bv != bu) hits[bv].push_back(e.dir);
  }
  return hits;
}

}  // namespace

ProjectionAnalysis analyze(const Cube& c, const Matching& m) {
  int n = c.n();
  if (n < 3) throw std::invalid_argument("analyze: need n >= 3");
  if (!is_induced_matching(c, VertexSet::full(c), m))
    throw std::invalid_argument("analyze: matching is not induced");

  ProjectionAnalysis p;
  p.n = n;
  p.original = m;

  std::vector<std::uint64_t> usage(std::size_t(n) + 1, 0);
  for (const Edge& e : m.edges) ++usage[std::size_t(e.dir)];
  std::vector<int> order(std::size_t(n), 0);
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return usage[std::size_t(a)] < usage[std::size_t(b)];
  });

  p.dir_map.assign(std::size_t(n) + 1, 0);
  p.dir_map[std::size_t(order[0])] = n - 1;
  p.dir_map[std::size_t(order[1])] = n;
  int next = 1;
  for (int d = 1; d <= n; ++d)
    if (d != order[0] && d != order[1]) p.dir_map[std::size_t(d)] = next++;

  std::vector<Edge> remapped;
  remapped.reserve(m.size());
  for (const Edge& e : m.edges)
    remapped.push_back(Edge::from_endpoints(remap_vertex(e.lo, n, p.dir_map),
                                            remap_vertex(e.hi(), n, p.dir_map)));
  p.reordered = make_matching(c, std::move(remapped));
  if (!is_induced_matching(c, VertexSet::full(c), p.reordered))
    throw std::logic_error("analyze: relabeling broke inducedness");

  Cube base(n - 2);
  VertexSet vm = matching_vertices(c, p.reordered);
  Vertex hi1 = Vertex{1} << (n - 2);
  Vertex hi2 = Vertex{1} << (n - 1);

  std::uint64_t base_count = base.N();
  p.classes.assign(base_count, FiberClass{});
  p.good = VertexSet(base);
  p.bad = VertexSet(base);

  // First pass: colors plus the two uncolored tallies.
  std::vector<std::uint8_t> has_internal(base_count, 0);
  std::vector<std::uint8_t> cover(base_count, 0);
  for (Vertex v = 0; v < base_count; ++v) {
    Vertex f00 = v, f10 = v | hi1, f01 = v | hi2, f11 = v | hi1 | hi2;
    bool c00 = vm.contains(f00), c10 = vm.contains(f10);
    bool c01 = vm.contains(f01), c11 = vm.contains(f11);
    cover[v] = std::uint8_t(int(c00) + int(c10) + int(c01) + int(c11));
    has_internal[v] = contains_edge(p.reordered, Edge(f00, n - 1)) ||
                      contains_edge(p.reordered, Edge(f00, n)) ||
                      contains_edge(p.reordered, Edge(f10, n)) ||
                      contains_edge(p.reordered, Edge(f01, n - 1));
    FiberClass& fc = p.classes[v];
    if (c00 && c11 && !c10 && !c01)
      fc.color = FiberColor::Red;
    else if (c10 && c01 && !c00 && !c11)
      fc.color = FiberColor::Blue;
    if (fc.color == FiberColor::Uncolored) {
      ++(has_internal[v] ? p.bad_internal_edge : p.bad_sparse);
      p.bad.insert(v);
    }
  }

  // Second pass: partners.  A colored vertex can have at most one same-color
  // neighbor: a shared color across a base edge forces the lifted edge into
  // the matching, pinning the direction of the fiber's matching edges.
  std::vector<Edge> t_edges;
  for (Vertex v = 0; v < base_count; ++v) {
    FiberClass& fc = p.classes[v];
    if (fc.color == FiberColor::Uncolored) continue;
    for (int j = 1; j <= n - 2; ++j) {
      Vertex u = v ^ (Vertex{1} << (j - 1));
      if (p.classes[u].color != fc.color) continue;
      if (fc.partner) throw std::logic_error("analyze: same-color neighbor not unique");
      fc.partner = u;
    }
    if (fc.partner) {
      fc.good = true;
      p.good.insert(v);
      if (v < *fc.partner) t_edges.push_back(Edge(v, __builtin_ctz(v ^ *fc.partner) + 1));
    } else {
      ++p.bad_lonely_colored;
      p.bad.insert(v);
    }
  }
  p.t = make_matching(base, std::move(t_edges));
  if (!(matching_vertices(base, p.t) == p.good))
    throw std::logic_error("analyze: T is not a perfect matching on the good set");

  // Gamma components, BFS seeded in ascending vertex order.
  std::vector<std::uint8_t> seen(base_count, 0);
  for (Vertex s = 0; s < base_count; ++s) {
    if (!p.good.contains(s) || seen[s]) continue;
    VertexSet comp(base);
    std::vector<Vertex> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      Vertex v = queue.back();
      queue.pop_back();
      comp.insert(v);
      for (int j = 1; j <= n - 2; ++j) {
        Vertex u = v ^ (Vertex{1} << (j - 1));
        if (!p.good.contains(u) || seen[u]) continue;
        if (u == *p.classes[v].partner) continue;
        seen[u] = 1;
        queue.push_back(u);
      }
    }
    p.gamma_components.push_back(std::move(comp));
  }
  return p;
}

ProjectionReport check_structure(const ProjectionAnalysis& p) {
  int n = p.n;
  Cube c(n), base(n - 2);
  Vertex hi1 = Vertex{1} << (n - 2);
  Vertex hi2 = Vertex{1} << (n - 1);
  std::uint64_t base_count = base.N();
  VertexSet vm = matching_vertices(c, p.reordered);
  ProjectionReport r;
  auto fail = [&r](bool& flag) {
    flag = false;
    ++r.violations;
  };

  // Adjacent good pairs share a color exactly when they are each other's
  // partner.
  for (Vertex v = 0; v < base_count; ++v) {
    if (!p.classes[v].good) continue;
    for (int j = 1; j <= n - 2; ++j) {
      Vertex u = v ^ (Vertex{1} << (j - 1));
      if (u < v || !p.classes[u].good) continue;
      bool same = p.classes[v].color == p.classes[u].color;
      bool partnered = p.classes[v].partner == std::optional<Vertex>(u) &&
                       p.classes[u].partner == std::optional<Vertex>(v);
      if (same != partnered) fail(r.color_adjacency);
    }
  }

  // Good iff the fiber meets exactly two matching edges of equal direction;
  // uncolored iff the fiber holds a matching edge or meets V(M) at most once.
  std::vector<std::vector<int>> hits = edges_per_fiber(n, p.reordered);
  for (Vertex v = 0; v < base_count; ++v) {
    const FiberClass& fc = p.classes[v];
    bool two_same = hits[v].size() == 2 && hits[v][0] == hits[v][1];
    if (fc.good != two_same) fail(r.good_two_edges);

    Vertex f00 = v, f10 = v | hi1, f01 = v | hi2, f11 = v | hi1 | hi2;
    int cover = int(vm.contains(f00)) + int(vm.contains(f10)) +
                int(vm.contains(f01)) + int(vm.contains(f11));
    bool internal = contains_edge(p.reordered, Edge(f00, n - 1)) ||
                    contains_edge(p.reordered, Edge(f00, n)) ||
                    contains_edge(p.reordered, Edge(f10, n)) ||
                    contains_edge(p.reordered, Edge(f01, n - 1));
    bool uncolored = fc.color == FiberColor::Uncolored;
    if (uncolored != (internal || cover <= 1)) fail(r.uncolored_cases);

    if (fc.good) {
      int same_color = 0;
      for (int j = 1; j <= n - 2; ++j)
        if (p.classes[v ^ (Vertex{1} << (j - 1))].color == fc.color) ++same_color;
      if (same_color != 1) fail(r.partner_unique);
    }
  }

  // Each T edge lifts to two matching edges: at fiber offsets (0,0) and (1,1)
  // on Red, (1,0) and (0,1) on Blue.  The Red lifts keep the T edge's parity,
  // the Blue lifts flip it.
  for (const Edge& e : p.t.edges) {
    Vertex v = e.lo, w = e.hi();
    FiberColor color = p.classes[v].color;
    Vertex offs[2];
    if (color == FiberColor::Red) {
      offs[0] = 0;
      offs[1] = hi1 | hi2;
    } else {
      offs[0] = hi1;
      offs[1] = hi2;
    }
    for (Vertex o : offs) {
      Edge lifted = Edge::from_endpoints(v | o, w | o);
      if (!contains_edge(p.reordered, lifted)) fail(r.t_edges_realized);
      bool keeps = edge_parity_even(lifted) == edge_parity_even(e);
      if (keeps != (color == FiberColor::Red)) fail(r.t_parity);
    }
  }

  // Component membership, for separation and coherence.
  std::vector<int> comp_of(base_count, -1);
  for (std::size_t i = 0; i < p.gamma_components.size(); ++i)
    for (Vertex v : p.gamma_components[i].to_vector()) comp_of[v] = int(i);

  for (const Edge& e : p.t.edges)
    if (comp_of[e.lo] == comp_of[e.hi()]) fail(r.t_separates);

  for (const VertexSet& comp : p.gamma_components) {
    std::vector<Vertex> verts = comp.to_vector();
    Vertex ref = verts.front();
    for (Vertex v : verts) {
      bool same_color = p.classes[v].color == p.classes[ref].color;
      bool same_parity = vertex_parity_even(v) == vertex_parity_even(ref);
      if (same_color != same_parity) fail(r.coherence);
    }
  }

  if (p.t.size() > 0)
    for (const VertexSet& comp : p.gamma_components)
      if (comp.count() * 2 > base_count) fail(r.half_measure);

  return r;
}

MeasureReport component_measures(const ProjectionAnalysis& p) {
  MeasureReport r;
  BigInt denom = pow2(p.n - 2);
  std::vector<std::uint64_t> sizes;
  sizes.reserve(p.gamma_components.size());
  for (const VertexSet& comp : p.gamma_components) sizes.push_back(comp.count());
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  for (std::uint64_t s : sizes) r.components.emplace_back(BigInt(s), denom);
  r.bad = Rational(BigInt(p.bad.count()), denom);
  return r;
}

}  // namespace miscube
