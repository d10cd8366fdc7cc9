#pragma once
// MIS <-> labeling correspondence across one fiber direction, plus the
// occupied-structure machinery built on it: closures, k-linked components,
// the per-component decomposition of the occupied even vertices, and the
// container-witness checks.
//
// Fiber convention: an MIS I of Q_n is encoded as a labeling of Q_{n-1} by
// dropping the LAST coordinate.  For a base vertex v of Q_{n-1} the fiber is
// {v_0, v_1} with v_eps = v | (eps << (n-1)); the label is eps when v_eps is
// in I and Lambda when the fiber misses I entirely.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "miscube/cube.hpp"
#include "miscube/matching.hpp"
#include "miscube/rational.hpp"

namespace miscube {

enum class Label : std::uint8_t { Zero = 0, One = 1, Lambda = 2 };

// A labeling of the base cube Q_{base_n}; fibers lift to Q_{base_n + 1}.
struct Labeling {
  int base_n = 0;
  std::vector<Label> values;  // indexed by base-cube vertex

  Label at(Vertex v) const { return values.at(v); }

  // "{0,1,L}" characters in vertex-index order.
  std::string str() const;
  static Labeling parse(const std::string& s);

  bool operator==(const Labeling&) const = default;
};

// Legality: no two adjacent base vertices share a label from {0,1}, and every
// Lambda vertex sees both a 0 and a 1 among its base-cube neighbors.
bool is_legal(const Cube& base, const Labeling& sigma);

// The two directions of the bijection.  `c` is the ambient cube Q_n (n >= 2);
// the labeling lives on Q_{n-1}.  from_labeling validates legality up front
// and asserts that the reconstructed set is a maximal independent set.
Labeling to_labeling(const Cube& c, const VertexSet& I);
VertexSet from_labeling(const Labeling& sigma);

// All legal labelings of the base cube, in lexicographic order of str().
// Exponential scan (3^(2^base_n)); guarded to base_n <= 4.
std::vector<Labeling> enumerate_legal_labelings(const Cube& base);

// Closure [A] = {x : N_x subseteq N(A)}.  Always contains A; idempotent.
VertexSet closure(const Cube& c, const VertexSet& A);

// Partition of A into maximal k-linked subsets (union-find over pairs at cube
// distance <= k), ordered by smallest member.  k >= 1.
std::vector<VertexSet> k_components(const Cube& c, const VertexSet& A, int k);

// True when every edge of m has an endpoint in I; with the 2n canonical
// matchings this picks out the MIS's belonging to some canonical family.
bool meets_every_edge(const Cube& c, const VertexSet& I, const Matching& m);

// One non-singleton 2-component of the occupied even vertices, with its
// neighborhood and closure in the base cube.
struct OccupiedComponent {
  VertexSet verts;   // A_i
  VertexSet nbrs;    // N(A_i)
  VertexSet closed;  // [A_i]
  std::uint64_t a = 0;  // |[A_i]|
  std::uint64_t g = 0;  // |N(A_i)|
  std::int64_t t = 0;   // g - a
  bool small = true;    // g < threshold
};

struct OccupiedDecomposition {
  int base_n = 0;
  VertexSet estar;  // occupied even vertices of the base cube
  std::vector<OccupiedComponent> components;
  VertexSet a_union;  // union of the A_i
  VertexSet g_union;  // N(a_union)
  VertexSet closed;   // [a_union]
  std::uint64_t a = 0;  // |[a_union]|
  std::uint64_t g = 0;  // |g_union|
  std::int64_t t = 0;   // g - a; at most the sum of the per-component t
  std::uint64_t small_threshold = 0;
};

// Decomposition of the occupied even structure of an MIS I of Q_n, n >= 2.
// `small_threshold` classifies components by |N(A_i)|; the default is n^4,
// under which every component at enumeration scale is small, so tests pass a
// tiny threshold when they need the large branch.
OccupiedDecomposition decompose(const Cube& c, const VertexSet& I,
                                std::uint64_t small_threshold);
OccupiedDecomposition decompose(const Cube& c, const VertexSet& I);

struct OccupancyReport {
  bool odd_outside_g_occupied = false;   // every odd base vertex outside g_union is occupied
  bool lifted_edges_guarded = false;     // every edge inside the lift of N(A_i) has a
                                         // neighbor in I intersected with the lift of A_i
  bool lifted_matching_induced = false;  // the fiber edges over each N(A_i) form an
                                         // induced matching of the ambient cube
  std::optional<Vertex> bad_odd_vertex;  // base vertex witnessing a first-fact failure
  std::optional<Edge> bad_edge;          // ambient edge witnessing a second-fact failure
};

// Checks the occupancy facts for D == decompose(I) (recomputed and compared;
// mismatched inputs are rejected).
OccupancyReport check_occupancy_facts(const Cube& c, const VertexSet& I,
                                      const OccupiedDecomposition& D);

// Candidate container pair for a closed 2-linked A inside the even class:
// S approximates A from above on the even side, F approximates N(A) from
// below on the odd side, and c3 is the explicit constant for the size bound.
struct ContainerWitness {
  VertexSet S;
  VertexSet F;
  Rational c3;
};

struct ContainerReport {
  bool covers = false;      // S contains A and F is inside N(A)
  bool degrees = false;     // every u in S has at least `degree_threshold` F-neighbors
  bool size_bound = false;  // (|S| - |F|) * sqrt(n) * log2(n) <= c3 * t
  int degree_threshold = 0;
  std::int64_t min_f_degree = -1;  // smallest F-degree over S; -1 when S is empty
};

// Evaluates the three container properties for witness W against A with slack
// parameter t.  Preconditions: dim >= 2, A nonempty, closed, 2-linked, inside
// the even class; S and F on the even/odd sides.  The degree cut is the exact
// ceiling of n - sqrt(n)/log2(n); the size bound is decided with certified
// interval arithmetic (exact when sqrt(n)*log2(n) is rational).
ContainerReport check_container(const Cube& c, const VertexSet& A,
                                const ContainerWitness& W, std::int64_t t);

struct TightSlackPartition {
  std::vector<std::size_t> tight;  // indices into D.components
  std::vector<std::size_t> slack;
};

// Classifies every large component: tight iff g_i - |F_i| <= eps * t_i
// (inclusive), slack otherwise.  Witnesses are keyed by component index; a
// missing witness for a large component is an error.  Small components are
// ignored.
TightSlackPartition tight_slack_classify(
    const OccupiedDecomposition& D,
    const std::map<std::size_t, ContainerWitness>& witnesses,
    const Rational& eps);

}  // namespace miscube
