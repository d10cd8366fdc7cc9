#include "miscube/peeling.hpp"

#include <sstream>
#include <stdexcept>

#include "miscube/combinatorics.hpp"
#include "miscube/interval.hpp"
#include "miscube/mis.hpp"

namespace miscube {

StopRule StopRule::empty_only() { return {{StopAtom{StopAtom::Kind::Empty, 0}}}; }
StopRule StopRule::support_at_least(std::uint64_t r) {
  return {{StopAtom{StopAtom::Kind::SupportAtLeast, r}}};
}
StopRule StopRule::max_deg_at_most(std::uint64_t d) {
  return {{StopAtom{StopAtom::Kind::MaxDegAtMost, d}}};
}
StopRule StopRule::size_at_most(std::uint64_t s) {
  return {{StopAtom{StopAtom::Kind::SizeAtMost, s}}};
}

std::string StopRule::str() const {
  if (atoms.empty()) return "empty";
  std::string out;
  for (const auto& a : atoms) {
    if (!out.empty()) out += ',';
    switch (a.kind) {
      case StopAtom::Kind::Empty: out += "empty"; break;
      case StopAtom::Kind::SupportAtLeast: out += "support:" + std::to_string(a.param); break;
      case StopAtom::Kind::MaxDegAtMost: out += "maxdeg:" + std::to_string(a.param); break;
      case StopAtom::Kind::SizeAtMost: out += "size:" + std::to_string(a.param); break;
    }
  }
  return out;
}

StopRule StopRule::parse(const std::string& s) {
  StopRule rule;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok == "empty") {
      rule.atoms.push_back({StopAtom::Kind::Empty, 0});
      continue;
    }
    const auto colon = tok.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("stop rule: bad token " + tok);
    const std::string head = tok.substr(0, colon);
    std::uint64_t param = 0;
    try {
      std::size_t used = 0;
      param = std::stoull(tok.substr(colon + 1), &used);
      if (colon + 1 + used != tok.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument("stop rule: bad parameter in " + tok);
    }
    if (head == "support")
      rule.atoms.push_back({StopAtom::Kind::SupportAtLeast, param});
    else if (head == "maxdeg")
      rule.atoms.push_back({StopAtom::Kind::MaxDegAtMost, param});
    else if (head == "size")
      rule.atoms.push_back({StopAtom::Kind::SizeAtMost, param});
    else
      throw std::invalid_argument("stop rule: bad token " + tok);
  }
  if (rule.atoms.empty()) throw std::invalid_argument("stop rule: empty spec");
  return rule;
}

StopRule first_of(const std::vector<StopRule>& rules) {
  StopRule out;
  for (const auto& r : rules) out.atoms.insert(out.atoms.end(), r.atoms.begin(), r.atoms.end());
  return out;
}

namespace {

int fired_index(const Cube& c, const StopRule& rule, const VertexSet& X, std::uint64_t support) {
  for (std::size_t i = 0; i < rule.atoms.size(); ++i) {
    const auto& a = rule.atoms[i];
    bool fires = false;
    switch (a.kind) {
      case StopAtom::Kind::Empty: fires = X.count() == 0; break;
      case StopAtom::Kind::SupportAtLeast: fires = support >= a.param; break;
      case StopAtom::Kind::MaxDegAtMost: fires = std::uint64_t(max_internal_degree(c, X)) <= a.param; break;
      case StopAtom::Kind::SizeAtMost: fires = X.count() <= a.param; break;
    }
    if (fires) return int(i);
  }
  return -1;
}

// The shared loop. decide(i, x, deg) supplies xi (and may throw for replay
// inconsistency); returns the fired atom index or -1 for the X-empty stop.
int simulate(const Cube& c, const VertexSet& w0, const StopRule& rule,
             const std::function<bool(int, Vertex, int)>& decide, const StepVisitor& visit,
             VertexSet& X, VertexSet& removed, std::vector<std::uint8_t>* xi_out,
             std::vector<Vertex>* xs_out, int* steps_out) {
  X = w0;
  removed = VertexSet::empty(c);
  std::uint64_t support = 0;
  int i = 0;
  for (;;) {
    const int fired = fired_index(c, rule, X, support);
    if (fired >= 0 || X.count() == 0) {
      if (steps_out) *steps_out = i;
      return fired;
    }
    int best_deg = -1;
    Vertex x = 0;
    X.for_each([&](Vertex v) {
      const int d = degree_in(c, X, v);
      if (d > best_deg) {
        best_deg = d;
        x = v;
      }
    });
    const bool xi = decide(i, x, best_deg);
    VertexSet gone = VertexSet::single(c, x);
    if (xi) {
      for (int b = 1; b <= c.n(); ++b) gone.insert(c.flip(x, b));
      removed |= VertexSet::single(c, x);
      ++support;
    }
    X -= gone;
    if (xi_out) xi_out->push_back(xi ? 1 : 0);
    if (xs_out) xs_out->push_back(x);
    if (visit) visit(i, x, xi, best_deg, X);
    ++i;
  }
}

}  // namespace

PeelResult peel(const Cube& c, const VertexSet& W, const VertexSet& I, const StopRule& rule) {
  if (!is_mis(c, VertexSet::full(c), I))
    throw std::invalid_argument("peel: I must be an MIS of the cube");
  PeelResult r;
  r.trace.w0 = W;
  r.trace.rule = rule;
  r.fired_atom = simulate(
      c, W, rule, [&](int, Vertex x, int) { return I.contains(x); }, {}, r.X, r.removed_in_I,
      &r.trace.xi, &r.trace.xs, nullptr);
  return r;
}

ReplayOutcome replay(const Cube& c, const PeelTrace& t, const StepVisitor& visit) {
  if (t.xi.size() != t.xs.size()) throw std::invalid_argument("replay: xi/xs lengths differ");
  ReplayOutcome out{VertexSet::empty(c), VertexSet::empty(c), -1};
  int steps = 0;
  out.fired_atom = simulate(
      c, t.w0, t.rule,
      [&](int i, Vertex x, int) {
        if (std::size_t(i) >= t.xi.size())
          throw std::invalid_argument("replay: trace ended before the rule fired");
        if (t.xs[std::size_t(i)] != x)
          throw std::invalid_argument("replay: recorded vertex is not the max-degree-first pick");
        return t.xi[std::size_t(i)] != 0;
      },
      visit, out.X, out.removed_in_I, nullptr, nullptr, &steps);
  if (std::size_t(steps) != t.xi.size())
    throw std::invalid_argument("replay: trace has entries past the stop");
  return out;
}

AlphaReport alpha_trajectory(const Cube& c, const PeelResult& r) {
  if (!(r.trace.w0 == VertexSet::full(c)))
    throw std::invalid_argument("alpha_trajectory: run must start from the full cube");
  const BigInt N = BigInt(c.N());
  const long n = c.n();
  AlphaReport rep;

  std::vector<VertexSet> states{r.trace.w0};
  replay(c, r.trace, [&](int, Vertex, bool, int, const VertexSet& X) { states.push_back(X); });

  const Rational contraction = Rational(1) - Rational(BigInt(2 * n), N);
  for (std::size_t i = 0; i < states.size(); ++i) {
    const BigInt sz = BigInt(states[i].count());
    rep.alphas.push_back(Rational(2 * sz, N) - 1);
    if (BigInt(2 * n) * sz > (BigInt(n) + max_internal_degree(c, states[i])) * N)
      rep.max_deg_bound = false;
    if (i > 0 && r.trace.xi[i - 1] &&
        !(rep.alphas[i] < contraction * rep.alphas[i - 1]))
      rep.support_contraction = false;
  }

  const bool support_fired =
      r.fired_atom >= 0 &&
      r.trace.rule.atoms[std::size_t(r.fired_atom)].kind == StopAtom::Kind::SupportAtLeast &&
      r.trace.rule.atoms[std::size_t(r.fired_atom)].param >=
          std::uint64_t(support_stop_threshold(c.n()));
  if (support_fired && r.X.count() > 0) {
    rep.support_stop_applicable = true;
    rep.support_stop_bound = BigInt(2 * n) * BigInt(r.X.count()) < BigInt(n + 1) * N;
  }
  return rep;
}

SupportSizeBound support_size_bound(const Cube& c, const PeelResult& r, std::uint64_t d) {
  if (d < 1) throw std::invalid_argument("support_size_bound: d >= 1 required");
  SupportSizeBound out{true, true};
  std::uint64_t supp = 0;
  replay(c, r.trace, [&](int, Vertex, bool xi, int deg, const VertexSet&) {
    if (!xi) return;
    ++supp;
    if (std::uint64_t(deg) < d) out.hypothesis = false;
  });
  out.bound = supp * d < r.trace.w0.count() + d;
  return out;
}

Rational pz_bound(const Cube& c, const VertexSet& W, std::uint64_t d, std::uint64_t L) {
  if (d >= 2 * std::uint64_t(c.n())) throw std::invalid_argument("pz_bound: d < 2n required");
  return Rational(BigInt(c.n()) * BigInt(W.count()) + BigInt(L),
                  BigInt(2 * std::uint64_t(c.n())) - BigInt(d));
}

bool pz_check(const Cube& c, const VertexSet& W, std::uint64_t d) {
  const auto verts = W.to_vector();
  if (verts.size() > 16) throw std::invalid_argument("pz_check: |W| <= 16 required");
  const Rational bound = pz_bound(c, W, d, boundary_size(c, W));
  for (std::uint64_t zmask = 0; zmask < (std::uint64_t{1} << verts.size()); ++zmask) {
    VertexSet Z = VertexSet::empty(c);
    for (std::size_t j = 0; j < verts.size(); ++j)
      if (zmask >> j & 1) Z.insert(verts[j]);
    if (std::uint64_t(max_internal_degree(c, Z)) > d) continue;
    if (Rational(Z.count()) > bound) return false;
  }
  return true;
}

SupportCountBound support_count_bound(unsigned l, unsigned r) {
  if (r < 1 || 2 * r > l) throw std::invalid_argument("support_count_bound: need 0 < r <= l/2");
  SupportCountBound out;
  for (unsigned j = 0; j <= l; ++j)
    for (unsigned t = 0; t <= std::min(j, r); ++t) out.exact += binomial(long(j), long(t));
  out.entropy_bound =
      Rational(l + 1) * rat_pow(Rational(l, r), r) * rat_pow(Rational(l, l - r), l - r);
  if (Rational(out.exact) > out.entropy_bound)
    throw std::logic_error("support_count_bound: entropy bound broke");
  return out;
}

std::uint64_t ceil_frac_pow(std::uint64_t n, unsigned num, unsigned den) {
  if (den == 0) throw std::invalid_argument("ceil_frac_pow: den >= 1 required");
  if (n == 0) return 0;
  BigInt target = 1;
  for (unsigned i = 0; i < num; ++i) target *= n;
  std::uint64_t lo = 0, hi = n;  // n^{num/den} <= n when num <= den
  if (num > den) hi = std::uint64_t(1) << 63;
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    BigInt p = 1;
    for (unsigned i = 0; i < den; ++i) p *= mid;
    if (p >= target)
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

}  // namespace miscube
