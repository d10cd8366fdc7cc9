#pragma once
// Max-degree-first peeling of a vertex set against a fixed MIS: repeatedly
// remove the first maximum-degree vertex x of the surviving set X, and when
// x lies in the MIS also remove N(x) ∩ X. The bit sequence xi (membership of
// each removed x in the MIS) together with the start set and stopping rule
// replays the whole run, which is the basis of the trace checks here.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "miscube/cube.hpp"
#include "miscube/rational.hpp"

namespace miscube {

struct StopAtom {
  enum class Kind { Empty, SupportAtLeast, MaxDegAtMost, SizeAtMost };
  Kind kind = Kind::Empty;
  std::uint64_t param = 0;
  bool operator==(const StopAtom&) const = default;
};

// Atoms are checked in listed order at every loop entry (a rule true at entry
// yields a zero-iteration run); the X-empty stop is always active afterwards.
struct StopRule {
  std::vector<StopAtom> atoms;

  static StopRule empty_only();
  static StopRule support_at_least(std::uint64_t r);
  static StopRule max_deg_at_most(std::uint64_t d);
  static StopRule size_at_most(std::uint64_t s);

  // "empty" | "support:r" | "maxdeg:d" | "size:s", comma-joined in check
  // order; str() and parse() round-trip.
  std::string str() const;
  static StopRule parse(const std::string& s);

  bool operator==(const StopRule&) const = default;
};

// Concatenation in check order.
StopRule first_of(const std::vector<StopRule>& rules);

struct PeelTrace {
  VertexSet w0;
  StopRule rule;
  std::vector<std::uint8_t> xi;  // xi[i] = 1 iff the i-th removed vertex was in the MIS
  std::vector<Vertex> xs;        // the removed vertices, in removal order
};

struct PeelResult {
  PeelTrace trace;
  VertexSet X;             // survivors
  VertexSet removed_in_I;  // MIS vertices peeled out, (I ∩ W) \ X
  int fired_atom = -1;     // index into rule.atoms; -1 when X ran empty instead
};

// I must be an MIS of the whole cube; W is any start set.
PeelResult peel(const Cube& c, const VertexSet& W, const VertexSet& I, const StopRule& rule);

struct ReplayOutcome {
  VertexSet X;
  VertexSet removed_in_I;
  int fired_atom = -1;
};

// Called after each removal with the step index, the removed vertex, its MIS
// membership bit, its degree inside X at removal time, and the surviving set.
using StepVisitor =
    std::function<void(int i, Vertex x, bool xi, int deg, const VertexSet& X_after)>;

// Reconstructs the run from w0, rule and xi alone; the recorded xs entries
// are cross-checked and any mismatch (or a length that disagrees with where
// the rule fires) throws std::invalid_argument.
ReplayOutcome replay(const Cube& c, const PeelTrace& t, const StepVisitor& visit = {});

struct AlphaReport {
  std::vector<Rational> alphas;        // alpha_i = 2|X_i|/N - 1, alpha_0 first
  bool max_deg_bound = true;           // 2n|X_i| <= (n + maxdeg(X_i)) N at every state
  bool support_contraction = true;     // alpha_i < (1 - 2n/N) alpha_{i-1} at xi=1 steps
  bool support_stop_applicable = false;
  bool support_stop_bound = true;      // 2n|X| < (n+1)N when applicable
};

// Requires a run started from W = V. The stop bound is checked when the run
// was ended by a SupportAtLeast atom with threshold >= support_stop_threshold
// and X stayed nonempty.
AlphaReport alpha_trajectory(const Cube& c, const PeelResult& r);

struct SupportSizeBound {
  bool hypothesis;  // every xi=1 removal had degree >= d at removal time
  bool bound;       // |supp(xi)| * d < |W| + d
};

// The preview bound for degree-threshold runs: each xi=1 step removes more
// than d vertices, so supp(xi) < |W|/d + 1. Requires d >= 1.
SupportSizeBound support_size_bound(const Cube& c, const PeelResult& r, std::uint64_t d);

// (n|W| + L) / (2n - d); requires 0 <= d < 2n.
Rational pz_bound(const Cube& c, const VertexSet& W, std::uint64_t d, std::uint64_t L);

// Exhaustively confirms |Z| <= pz_bound(W, d, |∇W|) for every Z ⊆ W whose
// internal degree stays <= d; |W| <= 16.
bool pz_check(const Cube& c, const VertexSet& W, std::uint64_t d);

struct SupportCountBound {
  BigInt exact;            // binary strings of length <= l with at most r ones
  Rational entropy_bound;  // (l+1) * (l/r)^r * (l/(l-r))^{l-r}
};

// Requires 0 < r <= l/2; certifies exact <= entropy_bound before returning.
SupportCountBound support_count_bound(unsigned l, unsigned r);

// Least t with t^den >= n^num, i.e. ceil(n^{num/den}); the degree thresholds
// of the two-stage runs are ceil_frac_pow(n, 2, 3) and ceil_frac_pow(n, 1, 3).
std::uint64_t ceil_frac_pow(std::uint64_t n, unsigned num, unsigned den);

}  // namespace miscube
