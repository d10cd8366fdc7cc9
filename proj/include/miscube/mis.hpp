#pragma once
// Maximal independent sets: a pivoted search engine, an exhaustive subset
// oracle kept deliberately independent of it, unique-extension, and the
// triangle-free count bound. Graphs at this scale (<= 64 vertices) live in
// one adjacency bitmask row per vertex.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "miscube/cube.hpp"
#include "miscube/executor.hpp"
#include "miscube/rational.hpp"

namespace miscube {

struct budget_exhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Row v = neighbors of v. Vertices are bit positions; rows beyond the
// universe of interest are ignored by the algorithms.
using MaskGraph = std::vector<std::uint64_t>;

MaskGraph cube_mask_graph(const Cube& c);  // n <= 6

bool is_independent_mask(const MaskGraph& g, std::uint64_t s);
// Maximal within the subgraph induced on `universe`; requires s subset of it.
bool is_mis_mask(const MaskGraph& g, std::uint64_t universe, std::uint64_t s);

// Reference route: tests every subset of `universe` (popcount <= 24 guard).
// Ascending masks.
std::vector<std::uint64_t> mis_by_subsets(const MaskGraph& g, std::uint64_t universe);

// Search route, serial: recursive extension with a pivot (maximal cliques of
// the complement). Ascending masks.
std::vector<std::uint64_t> enumerate_mis_masks(const MaskGraph& g, std::uint64_t universe);
std::uint64_t count_mis_masks(const MaskGraph& g, std::uint64_t universe);

struct MisReport {
  int n = 0;
  BigInt count = 0;  // lower bound when partial
  bool partial = false;
  double elapsed_ms = 0;
  int workers = 1;
};

// Whole-cube count with a deterministic two-level presplit of the search
// tree; task results land in fixed slots, so the count never depends on the
// worker count. budget_ms < 0 means unlimited; an exhausted budget returns
// partial = true. Throws cap_exceeded when n > enum_cap (or past the 6-dim
// single-word limit).
MisReport count_cube_mis(const Cube& c, Executor& ex, long long budget_ms = -1,
                         int enum_cap = 6);

// Full stream, strictly ascending, merged from the same presplit. Unbudgeted.
std::vector<std::uint64_t> enumerate_cube_mis(const Cube& c, Executor& ex, int enum_cap = 6);

// VertexSet bridges (n <= 6 where masks are involved).
VertexSet mask_to_set(const Cube& c, std::uint64_t mask);

// Independence / maximality inside the subgraph induced on `verts`, any n.
bool is_independent(const Cube& c, const VertexSet& verts, const VertexSet& s);
bool is_mis(const Cube& c, const VertexSet& verts, const VertexSet& s);

struct ExtendResult {
  bool unique = false;
  VertexSet mis;                // the unique completion, when unique
  std::optional<Edge> witness;  // an undominated edge otherwise
};

// The unique MIS of cube[verts] containing independent s, if it exists: the
// remainder r = verts minus (s and its neighbors) must be edgeless, and then
// s union r is the answer. An edge inside r gives two distinct completions
// and is returned as the witness (lowest edge id). Throws when s is not an
// independent subset of verts.
ExtendResult extend_to_mis(const Cube& c, const VertexSet& verts, const VertexSet& s);

// External graph for the triangle-free bound: m vertices 0..m-1, undirected
// edge list, loops and duplicates rejected.
struct HtReport {
  std::uint64_t count = 0;      // mis(G)
  int m = 0;                    // vertex count
  bool perfect_matching = false;
  bool bound_holds = false;     // count^2 <= 2^m, exactly
  bool equality = false;        // count^2 == 2^m
};

// Asserts the count bound for triangle-free G and that equality happens
// exactly on perfect matchings. Throws std::invalid_argument on a triangle
// (checked here because these inputs are external) or a malformed edge list.
HtReport ht_bound_check(int m, const std::vector<std::pair<int, int>>& edges);

}  // namespace miscube
