#pragma once
// Induced matchings: canonical matchings (one direction, one edge parity),
// the largest-IM search, the MIS-to-matching assignment map with its fixed
// total order on matchings, and the endpoint-choice families canonical
// matchings generate.

#include <cstdint>
#include <utility>
#include <vector>

#include "miscube/cube.hpp"
#include "miscube/mis.hpp"

namespace miscube {

// Edges kept sorted by canonical id and pairwise vertex-disjoint.
struct Matching {
  std::vector<Edge> edges;

  std::size_t size() const { return edges.size(); }
  bool operator==(const Matching&) const = default;
};

// Validates disjointness, sorts by id.
Matching make_matching(const Cube& c, std::vector<Edge> edges);

std::vector<std::uint64_t> matching_ids(const Cube& c, const Matching& m);
VertexSet matching_vertices(const Cube& c, const Matching& m);

// The bookkeeping order: sorted id lists compared lexicographically, a strict
// prefix preceding every extension.
bool matching_precedes(const Cube& c, const Matching& a, const Matching& b);

// |a delta b| as edge sets.
int matching_distance(const Cube& c, const Matching& a, const Matching& b);

// True iff the endpoint set of m induces exactly m inside cube[verts].
bool is_induced_matching(const Cube& c, const VertexSet& verts, const Matching& m);

struct CanonicalMatching {
  int dir = 1;
  int eps = 0;
  bool operator==(const CanonicalMatching&) const = default;
};

// All 2n, ordered by (dir, eps). Size N/4 forces n >= 2.
std::vector<CanonicalMatching> canonical_matchings(const Cube& c);
Matching canonical_edges(const Cube& c, const CanonicalMatching& cm);

// Distance-minimizing canonical matching, ties by (dir, eps); m must be an IM.
std::pair<CanonicalMatching, int> nearest_canonical(const Cube& c, const Matching& m);

// The 2^{N/4} MIS's obtained by picking one endpoint per edge of cm (bit k of
// the choice index selects the high endpoint of edge k) and extending to the
// unique completion. Ascending, verified distinct.
std::vector<VertexSet> canonical_family(const Cube& c, const CanonicalMatching& cm);

// |family(a) ∩ family(b)| for distinct canonical matchings.
std::uint64_t family_overlap(const Cube& c, const CanonicalMatching& a,
                             const CanonicalMatching& b);

struct LargestIm {
  int size = 0;
  Matching witness;  // the order-first matching of maximum size
};

// Branch and bound over edges in id order inside cube[verts]; n <= 6.
LargestIm largest_im(const Cube& c, const VertexSet& verts);

// Every induced matching of cube[verts] including the empty one; |verts| <= 16.
std::vector<Matching> all_induced_matchings(const Cube& c, const VertexSet& verts);

// The order-first largest IM M with every edge meeting I and no edges between
// V(M) and I\V(M). I must be an MIS of cube[verts]; n <= 6. The search prunes
// on the second constraint as soon as it is violated, which is exact: a
// violating I-vertex is adjacent to V(M), so no later edge can ever absorb it
// without breaking inducedness.
Matching assignment_matching(const Cube& c, const VertexSet& verts, const VertexSet& I);

// Independent route: filter all_induced_matchings by both constraints
// checked on the final state, take the order-first largest. |verts| <= 16.
Matching assignment_matching_oracle(const Cube& c, const VertexSet& verts, const VertexSet& I);

}  // namespace miscube
