#pragma once

// Fiber analysis of an induced matching under the projection that drops the
// last two coordinates.  Directions are first relabeled so the two least-used
// ones (ties broken by ascending index) land in slots n-1 and n; the base cube
// is then Q_{n-2} on slots 1..n-2 and the fiber over base vertex v is the
// 4-set {v | (a << (n-2)) | (b << (n-1))}, written (v, a, b).
//
// A base vertex is Red when the matching covers exactly (v,0,0) and (v,1,1),
// Blue when it covers exactly (v,1,0) and (v,0,1), and Uncolored otherwise.
// A colored vertex is good when some base neighbor has the same color; that
// neighbor is provably unique and is recorded as the partner.  T pairs each
// good vertex with its partner and Gamma is the induced subgraph on the good
// set minus the T edges.

#include <cstdint>
#include <optional>
#include <vector>

#include "miscube/cube.hpp"
#include "miscube/matching.hpp"
#include "miscube/rational.hpp"

namespace miscube {

enum class FiberColor : std::uint8_t { Uncolored = 0, Red = 1, Blue = 2 };

struct FiberClass {
  FiberColor color = FiberColor::Uncolored;
  bool good = false;
  // Set iff good; always adjacent in the base cube and of the same color.
  std::optional<Vertex> partner;
  bool operator==(const FiberClass&) const = default;
};

struct ProjectionAnalysis {
  int n = 0;  // ambient dimension, >= 3
  Matching original;
  // dir_map[d] is the slot direction d was sent to; index 0 unused.
  std::vector<int> dir_map;
  Matching reordered;  // original pushed through the coordinate relabeling
  // Indexed by base vertex of Q_{n-2}.
  std::vector<FiberClass> classes;
  VertexSet good;  // X
  VertexSet bad;   // W, the complement
  // W split by cause; the three counts partition bad.count().
  std::uint64_t bad_internal_edge = 0;   // fiber contains a matching edge
  std::uint64_t bad_sparse = 0;          // fiber meets V(M) at most once
  std::uint64_t bad_lonely_colored = 0;  // colored, no same-color neighbor
  // Perfect matching on the good set, edges in the base cube.
  Matching t;
  // Components of Gamma, ordered by smallest member.
  std::vector<VertexSet> gamma_components;
};

// Pre: m is an induced matching of the full cube, c.n() >= 3.
ProjectionAnalysis analyze(const Cube& c, const Matching& m);

// Each bool is one structural rule over the whole analysis; violations counts
// failing instances across all of them.  half_measure holds vacuously when T
// is empty.
struct ProjectionReport {
  bool color_adjacency = true;   // adjacent good pair same color iff partners
  bool good_two_edges = true;    // good iff fiber meets two same-dir M-edges
  bool uncolored_cases = true;   // uncolored iff internal edge or sparse fiber
  bool partner_unique = true;    // good vertices have exactly one candidate
  bool t_edges_realized = true;  // both lifted copies of each T edge are in M
  bool t_parity = true;          // lifts match T-edge parity on Red, flip on Blue
  bool t_separates = true;       // T edges end in distinct Gamma components
  bool coherence = true;         // per component: color agrees iff parity does
  bool half_measure = true;      // no component exceeds half the base cube
  std::uint64_t violations = 0;
  bool all_hold() const {
    return color_adjacency && good_two_edges && uncolored_cases &&
           partner_unique && t_edges_realized && t_parity && t_separates &&
           coherence && half_measure;
  }
};

ProjectionReport check_structure(const ProjectionAnalysis& p);

// Exact fiber-measure summary: component sizes over 2^{n-2}, descending, and
// the measure of the bad set.  Component measures sum to mu(good).
struct MeasureReport {
  std::vector<Rational> components;
  Rational bad;
};

MeasureReport component_measures(const ProjectionAnalysis& p);

}  // namespace miscube
