#pragma once
// Counting and isoperimetric helpers: compositions with their binomial and
// entropy caps, k-linked subset counts against the rooted-tree bound, the
// certified beta-exponent boundary functionals, vertex expansion inside one
// parity class, and nearest codimension-1 subcube fits.

#include <cstdint>
#include <vector>

#include "miscube/cube.hpp"
#include "miscube/interval.hpp"
#include "miscube/mis.hpp"

namespace miscube {

// Number of compositions of m >= 1, by the first-part recurrence (the closed
// form 2^{m-1} is a test, not an input).
BigInt compositions_count(unsigned m);

// Every composition of m in lexicographic order of part lists; m <= 16.
std::vector<std::vector<unsigned>> enumerate_compositions(unsigned m);

struct CompositionsAtMost {
  BigInt exact;        // compositions of m with at most b parts
  BigInt wide_bound;  // sum_{i<=b} C(m-1, i), one index wider than exact
};

// Requires 1 <= b <= m/2. Certifies exact <= wide_bound <= (e*m/b)^b before
// returning.
CompositionsAtMost compositions_at_most(unsigned m, unsigned b);

struct KlinkedCount {
  std::uint64_t count;       // k-linked x-subsets containing v
  std::uint64_t aux_degree;  // degree of the distance-<=k auxiliary graph
  bool bound_holds;          // count <= (e * aux_degree)^{x-1}, certified
};

// Connected-subset enumeration in the auxiliary graph where u ~ w iff
// 1 <= dist(u, w) <= k. Caps: x <= 6, n <= 5.
KlinkedCount count_klinked(const Cube& c, Vertex v, int x, int k);

// Certified enclosures of d^beta, d = 0..dmax, beta = log2(3/2). Build once
// outside any parallel region; lookups afterwards are const.
class BetaBasis {
 public:
  BetaBasis(int dmax, mpfr_prec_t prec);
  const Interval& pow(int d) const { return pows_.at(std::size_t(d)); }
  int dmax() const { return int(pows_.size()) - 1; }
  mpfr_prec_t prec() const { return prec_; }

 private:
  std::vector<Interval> pows_;
  mpfr_prec_t prec_;
};

// Sign of N * sum_{x in A} deg_out(x)^beta - 2|A|(N-|A|), the boundary
// functional margin cleared of denominators. Result -1/0/+1 when the basis
// precision decides it, 2 when undecided (escalate or fall back to the exact
// route). Nonnegative sign is the inequality.
int beta_margin_sign(const Cube& c, const MaskGraph& g, std::uint64_t A, const BetaBasis& basis);

// Same margin decided exactly: power-of-two degrees collapse to rationals,
// the rest goes through the escalating certified ladder. Never undecided.
int beta_margin_sign_exact(const Cube& c, const MaskGraph& g, std::uint64_t A);

// Enclosure of (1/N) * sum_{x in A} deg_out(x)^beta itself.
Interval beta_functional(const Cube& c, const VertexSet& A);
int beta_bound_sign(const Cube& c, const VertexSet& A);

// Partition form: R, S, U partition V; margin of
// (1/N) sum_{x in R} deg_S(x)^beta >= 2a(1-a) - n^beta |U|/N, a = (|R|+|U|)/N,
// again cleared of denominators. Exact; never undecided.
Interval partition_functional(const Cube& c, const VertexSet& R, const VertexSet& S,
                              const VertexSet& U);
int partition_bound_sign(const Cube& c, const VertexSet& R, const VertexSet& S,
                         const VertexSet& U);
int partition_margin_sign_exact(const Cube& c, const MaskGraph& g, std::uint64_t R,
                                std::uint64_t S, std::uint64_t U);

// Exponent-1/2 variant of the margin, exact via squarefree decomposition.
// Trend probe only: the inequality genuinely fails for some sets.
int sqrt_margin_sign(const Cube& c, const MaskGraph& g, std::uint64_t A);

// (|N(A)| - |A|) / |N(A)| for A inside the even class, 1 <= |A| <= N/4.
Rational vertex_expansion(const Cube& c, const VertexSet& A);

struct GrowthReport {
  std::uint64_t size_a;
  std::uint64_t size_na;
  double k;          // log_n |A|
  double reference;  // |A| * n / k
};

// Trend probe, no pass/fail: |A| >= 2, A inside one parity class.
GrowthReport neighborhood_growth(const Cube& c, const VertexSet& A);

struct SubcubeFit {
  int dir;
  int eps;
  Rational distance;  // |C delta A| / N
};

// Closest of the 2n codimension-1 subcubes {x: coord dir = eps}; ties go to
// the smallest (dir, eps).
SubcubeFit min_subcube_distance(const Cube& c, const VertexSet& A);

}  // namespace miscube
