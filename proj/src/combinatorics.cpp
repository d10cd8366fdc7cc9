#include "miscube/combinatorics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <stdexcept>

namespace miscube {

namespace {

constexpr mpfr_prec_t kLadder[] = {128, 256, 512, 1024, 2048};

}  // namespace

BigInt compositions_count(unsigned m) {
  if (m < 1) throw std::invalid_argument("compositions_count: m >= 1 required");
  std::vector<BigInt> c(m + 1);
  c[0] = 1;
  for (unsigned j = 1; j <= m; ++j)
    for (unsigned p = 1; p <= j; ++p) c[j] += c[j - p];
  return c[m];
}

std::vector<std::vector<unsigned>> enumerate_compositions(unsigned m) {
  if (m < 1 || m > 16) throw std::invalid_argument("enumerate_compositions: m in [1,16]");
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  auto rec = [&](auto&& self, unsigned left) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (unsigned p = 1; p <= left; ++p) {
      cur.push_back(p);
      self(self, left - p);
      cur.pop_back();
    }
  };
  rec(rec, m);
  return out;
}

CompositionsAtMost compositions_at_most(unsigned m, unsigned b) {
  if (m < 1) throw std::invalid_argument("compositions_at_most: m >= 1 required");
  if (b < 1 || 2 * b > m) throw std::invalid_argument("compositions_at_most: need 1 <= b <= m/2");
  CompositionsAtMost r;
  for (unsigned k = 1; k <= b; ++k) r.exact += binomial(long(m) - 1, long(k) - 1);
  for (unsigned i = 0; i <= b; ++i) r.wide_bound += binomial(long(m) - 1, long(i));
  if (r.exact > r.wide_bound) throw std::logic_error("compositions_at_most: bound ordering broke");
  // wide_bound <= (e*m/b)^b, certified.
  for (mpfr_prec_t prec : kLadder) {
    Interval cap = Interval::exp1(prec);
    cap.scale(Rational(m, b));
    cap = cap.pow_ui(b);
    const Interval pb = Interval::exact(Rational(r.wide_bound), prec);
    if (pb.definitely_le(cap)) return r;
    if (cap.definitely_lt(pb)) throw std::logic_error("compositions_at_most: entropy cap broke");
  }
  throw std::logic_error("compositions_at_most: cap comparison undecided");
}

KlinkedCount count_klinked(const Cube& c, Vertex v, int x, int k) {
  if (c.n() > 5) throw std::invalid_argument("count_klinked: dimension cap is 5");
  if (x < 1 || x > 6) throw std::invalid_argument("count_klinked: x in [1,6]");
  if (k < 1) throw std::invalid_argument("count_klinked: k >= 1 required");
  const std::uint64_t N = c.N();
  if (v >= N) throw std::invalid_argument("count_klinked: vertex out of range");

  std::vector<std::uint64_t> adj(N, 0);
  for (std::uint64_t u = 0; u < N; ++u)
    for (std::uint64_t w = 0; w < N; ++w)
      if (u != w && cube_distance(Vertex(u), Vertex(w)) <= k) adj[u] |= std::uint64_t{1} << w;

  KlinkedCount r{0, std::uint64_t(__builtin_popcountll(adj[v])), true};
  // Branch-and-forbid: pop candidates in ascending order, recurse with the
  // popped vertex included, then forbid it for the remaining branches.
  auto rec = [&](auto&& self, std::uint64_t cur, std::uint64_t ext, std::uint64_t forb) -> void {
    if (__builtin_popcountll(cur) == x) {
      ++r.count;
      return;
    }
    while (ext) {
      const std::uint64_t ub = ext & (~ext + 1);
      ext ^= ub;
      const int u = __builtin_ctzll(ub);
      self(self, cur | ub, (ext | (adj[u] & ~forb)) & ~(cur | ub), forb);
      forb |= ub;
    }
  };
  rec(rec, std::uint64_t{1} << v, adj[v], 0);

  if (x == 1) {
    r.bound_holds = r.count == 1;  // (e*deg)^0 = 1 exactly
    return r;
  }
  for (mpfr_prec_t prec : kLadder) {
    Interval bound = Interval::exp1(prec);
    bound.scale_si(long(r.aux_degree));
    bound = bound.pow_ui(unsigned(x - 1));
    const Interval cnt = Interval::exact(Rational(r.count), prec);
    if (cnt.definitely_le(bound)) return r;
    if (bound.definitely_lt(cnt)) {
      r.bound_holds = false;
      return r;
    }
  }
  throw std::logic_error("count_klinked: tree bound comparison undecided");
}

BetaBasis::BetaBasis(int dmax, mpfr_prec_t prec) : prec_(prec) {
  if (dmax < 0) throw std::invalid_argument("BetaBasis: dmax >= 0");
  pows_.reserve(std::size_t(dmax) + 1);
  pows_.push_back(Interval::exact(Rational(0), prec));
  for (int d = 1; d <= dmax; ++d) pows_.push_back(Interval::pow_beta((unsigned long)d, prec));
}

namespace {

std::uint64_t universe_mask(const Cube& c) {
  const std::uint64_t N = c.N();
  return N == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << N) - 1;
}

// Out-degree histogram of A: counts[d] = |{x in A: |N(x) \ A| = d}|.
std::array<std::uint64_t, 31> out_degree_counts(const MaskGraph& g, std::uint64_t A) {
  std::array<std::uint64_t, 31> counts{};
  std::uint64_t rest = A;
  while (rest) {
    const int v = __builtin_ctzll(rest);
    rest &= rest - 1;
    ++counts[std::size_t(__builtin_popcountll(g[std::size_t(v)] & ~A))];
  }
  return counts;
}

BigInt margin_constant(std::uint64_t a, std::uint64_t N) {
  return BigInt(-2) * BigInt(a) * BigInt(N - a);
}

}  // namespace

int beta_margin_sign(const Cube& c, const MaskGraph& g, std::uint64_t A, const BetaBasis& basis) {
  const std::uint64_t N = c.N();
  const std::uint64_t a = std::uint64_t(__builtin_popcountll(A));
  const auto counts = out_degree_counts(g, A);
  Interval acc = Interval::exact(Rational(margin_constant(a, N)), basis.prec());
  for (int d = 1; d <= c.n(); ++d) {
    if (!counts[std::size_t(d)]) continue;
    Interval t = basis.pow(d);
    t.scale_si(long(counts[std::size_t(d)] * N));
    acc += t;
  }
  return acc.sign_or_undecided();
}

int beta_margin_sign_exact(const Cube& c, const MaskGraph& g, std::uint64_t A) {
  const std::uint64_t N = c.N();
  const std::uint64_t a = std::uint64_t(__builtin_popcountll(A));
  const auto counts = out_degree_counts(g, A);
  BetaCombo combo;
  combo.add_rational(Rational(margin_constant(a, N)));
  for (int d = 1; d <= c.n(); ++d)
    if (counts[std::size_t(d)]) combo.add_pow_beta(d, Rational(counts[std::size_t(d)] * N));
  return combo.sign();
}

namespace {

// Coefficients of the cleared-denominator functional margin as a BetaCombo;
// shared by the set and partition forms.
BetaCombo functional_combo(const Cube& c, const std::map<int, BigInt>& degree_counts,
                           const BigInt& constant, const BigInt& top_coeff) {
  BetaCombo combo;
  combo.add_rational(Rational(constant));
  for (const auto& [d, cnt] : degree_counts)
    if (d > 0 && cnt != 0) combo.add_pow_beta(d, Rational(cnt));
  if (top_coeff != 0) combo.add_pow_beta(c.n(), Rational(top_coeff));
  return combo;
}

}  // namespace

Interval beta_functional(const Cube& c, const VertexSet& A) {
  const BigInt N = BigInt(c.N());
  std::map<int, BigInt> counts;
  A.for_each([&](Vertex v) { ++counts[c.n() - degree_in(c, A, v)]; });
  BetaCombo combo;
  for (const auto& [d, cnt] : counts)
    if (d > 0) combo.add_pow_beta(d, Rational(cnt, N));
  return combo.evaluate(128);
}

int beta_bound_sign(const Cube& c, const VertexSet& A) {
  const BigInt N = BigInt(c.N());
  const BigInt a = BigInt(A.count());
  std::map<int, BigInt> counts;
  A.for_each([&](Vertex v) { counts[c.n() - degree_in(c, A, v)] += N; });
  return functional_combo(c, counts, BigInt(-2) * a * (N - a), 0).sign();
}

namespace {

void require_partition(const Cube& c, const VertexSet& R, const VertexSet& S, const VertexSet& U) {
  if (R.intersects(S) || R.intersects(U) || S.intersects(U))
    throw std::invalid_argument("partition parts overlap");
  VertexSet all = R;
  all |= S;
  all |= U;
  if (!(all == VertexSet::full(c))) throw std::invalid_argument("partition does not cover V");
}

}  // namespace

Interval partition_functional(const Cube& c, const VertexSet& R, const VertexSet& S,
                              const VertexSet& U) {
  require_partition(c, R, S, U);
  const BigInt N = BigInt(c.N());
  std::map<int, BigInt> counts;
  R.for_each([&](Vertex v) { ++counts[degree_in(c, S, v)]; });
  BetaCombo combo;
  for (const auto& [d, cnt] : counts)
    if (d > 0) combo.add_pow_beta(d, Rational(cnt, N));
  return combo.evaluate(128);
}

int partition_bound_sign(const Cube& c, const VertexSet& R, const VertexSet& S,
                         const VertexSet& U) {
  require_partition(c, R, S, U);
  const BigInt N = BigInt(c.N());
  const BigInt rv = BigInt(R.count()) + BigInt(U.count());
  std::map<int, BigInt> counts;
  R.for_each([&](Vertex v) { counts[degree_in(c, S, v)] += N; });
  return functional_combo(c, counts, BigInt(-2) * rv * (N - rv), BigInt(U.count()) * N).sign();
}

int partition_margin_sign_exact(const Cube& c, const MaskGraph& g, std::uint64_t R,
                                std::uint64_t S, std::uint64_t U) {
  if ((R & S) || (R & U) || (S & U) || (R | S | U) != universe_mask(c))
    throw std::invalid_argument("partition masks must partition the cube");
  const BigInt N = BigInt(c.N());
  const BigInt rv = BigInt(__builtin_popcountll(R)) + BigInt(__builtin_popcountll(U));
  std::map<int, BigInt> counts;
  std::uint64_t rest = R;
  while (rest) {
    const int v = __builtin_ctzll(rest);
    rest &= rest - 1;
    counts[__builtin_popcountll(g[std::size_t(v)] & S)] += N;
  }
  return functional_combo(c, counts, BigInt(-2) * rv * (N - rv),
                          BigInt(__builtin_popcountll(U)) * N)
      .sign();
}

int sqrt_margin_sign(const Cube& c, const MaskGraph& g, std::uint64_t A) {
  const std::uint64_t N = c.N();
  const std::uint64_t a = std::uint64_t(__builtin_popcountll(A));
  const auto counts = out_degree_counts(g, A);
  // sqrt(d) = s * sqrt(f) with f squarefree; distinct squarefree kernels are
  // linearly independent over Q, so "all kernel coefficients zero" is the
  // exact equality test and otherwise the ladder terminates.
  BigInt rational_part = margin_constant(a, N);
  std::map<int, BigInt> kernels;
  for (int d = 1; d <= c.n(); ++d) {
    if (!counts[std::size_t(d)]) continue;
    int s = 1;
    while ((s + 1) * (s + 1) <= d) ++s;
    while (d % (s * s) != 0) --s;
    const int f = d / (s * s);
    const BigInt coeff = BigInt(counts[std::size_t(d)] * N) * s;
    if (f == 1)
      rational_part += coeff;
    else
      kernels[f] += coeff;
  }
  for (auto it = kernels.begin(); it != kernels.end();)
    it = it->second == 0 ? kernels.erase(it) : std::next(it);
  if (kernels.empty()) {
    const int cmp = rational_part.compare(0);
    return cmp < 0 ? -1 : cmp > 0 ? 1 : 0;
  }
  for (mpfr_prec_t prec : kLadder) {
    Interval acc = Interval::exact(Rational(rational_part), prec);
    for (const auto& [f, coeff] : kernels) {
      Interval t = Interval::sqrt_of((unsigned long)f, prec);
      t.scale(Rational(coeff));
      acc += t;
    }
    const int s = acc.sign_or_undecided();
    if (s != 2) return s;
  }
  throw std::logic_error("sqrt_margin_sign: undecided after ladder");
}

Rational vertex_expansion(const Cube& c, const VertexSet& A) {
  if (!A.subset_of(VertexSet::even_class(c)))
    throw std::invalid_argument("vertex_expansion: A must sit inside the even class");
  const std::uint64_t a = A.count();
  if (a < 1 || a > c.N() / 4)
    throw std::invalid_argument("vertex_expansion: need 1 <= |A| <= N/4");
  const BigInt nb = BigInt(neighborhood(c, A).count());
  return Rational(nb - BigInt(a), nb);
}

GrowthReport neighborhood_growth(const Cube& c, const VertexSet& A) {
  const std::uint64_t a = A.count();
  if (a < 2) throw std::invalid_argument("neighborhood_growth: |A| >= 2 required");
  if (!A.subset_of(VertexSet::even_class(c)) && !A.subset_of(VertexSet::odd_class(c)))
    throw std::invalid_argument("neighborhood_growth: A must sit inside one parity class");
  GrowthReport r;
  r.size_a = a;
  r.size_na = neighborhood(c, A).count();
  r.k = std::log(double(a)) / std::log(double(c.n()));
  r.reference = double(a) * double(c.n()) / r.k;
  return r;
}

SubcubeFit min_subcube_distance(const Cube& c, const VertexSet& A) {
  const int n = c.n();
  std::vector<std::array<std::uint64_t, 2>> cnt(std::size_t(n), {0, 0});
  A.for_each([&](Vertex v) {
    for (int j = 0; j < n; ++j) ++cnt[std::size_t(j)][(v >> j) & 1];
  });
  const std::uint64_t a = A.count();
  SubcubeFit best{0, 0, Rational(0)};
  bool have = false;
  for (int dir = 1; dir <= n; ++dir)
    for (int eps = 0; eps <= 1; ++eps) {
      const std::uint64_t delta = c.N() / 2 + a - 2 * cnt[std::size_t(dir - 1)][eps];
      const Rational dist(BigInt(delta), BigInt(c.N()));
      if (!have || dist < best.distance) {
        best = {dir, eps, dist};
        have = true;
      }
    }
  return best;
}

}  // namespace miscube
