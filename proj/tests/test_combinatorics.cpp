#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "miscube/combinatorics.hpp"
#include "miscube/rng.hpp"

using namespace miscube;

TEST_CASE("binomials and integer powers", "[combinatorics]") {
  REQUIRE(binomial(4, 2) == 6);
  REQUIRE(binomial(10, 5) == 252);
  REQUIRE(binomial(3, 7) == 0);
  REQUIRE(binomial(-1, 0) == 0);
  REQUIRE(binomial(52, 26) == BigInt("495918532948104"));
  REQUIRE(int_pow(3, 7) == 2187);
  REQUIRE(pow2(20) == 1048576);
}

TEST_CASE("composition counts by two routes", "[combinatorics]") {
  REQUIRE(compositions_count(3) == 4);
  const auto three = enumerate_compositions(3);
  REQUIRE(three == std::vector<std::vector<unsigned>>{{1, 1, 1}, {1, 2}, {2, 1}, {3}});
  for (unsigned m = 1; m <= 20; ++m) REQUIRE(compositions_count(m) == pow2(m - 1));
  for (unsigned m = 1; m <= 12; ++m) {
    const auto all = enumerate_compositions(m);
    REQUIRE(BigInt(all.size()) == compositions_count(m));
    for (const auto& parts : all) {
      unsigned sum = 0;
      for (unsigned p : parts) sum += p;
      REQUIRE(sum == m);
    }
    // at-most-b closed form against the enumeration
    for (unsigned b = 1; 2 * b <= m; ++b) {
      const auto r = compositions_at_most(m, b);
      BigInt direct = 0;
      for (const auto& parts : all)
        if (parts.size() <= b) ++direct;
      REQUIRE(r.exact == direct);
      REQUIRE(r.exact <= r.wide_bound);
    }
  }
  const auto r52 = compositions_at_most(5, 2);
  REQUIRE(r52.exact == 5);
  REQUIRE(r52.wide_bound == 11);

  REQUIRE_THROWS_AS(compositions_count(0), std::invalid_argument);
  REQUIRE_THROWS_AS(compositions_at_most(5, 0), std::invalid_argument);
  REQUIRE_THROWS_AS(compositions_at_most(5, 3), std::invalid_argument);
  REQUIRE_THROWS_AS(enumerate_compositions(17), std::invalid_argument);
}

namespace {

bool aux_connected(std::uint64_t set, const std::vector<std::uint64_t>& adj) {
  const int start = __builtin_ctzll(set);
  std::uint64_t seen = std::uint64_t{1} << start, frontier = seen;
  while (frontier) {
    std::uint64_t next = 0;
    while (frontier) {
      const int v = __builtin_ctzll(frontier);
      frontier &= frontier - 1;
      next |= adj[std::size_t(v)] & set & ~seen;
    }
    seen |= next;
    frontier = next;
  }
  return seen == set;
}

}  // namespace

TEST_CASE("k-linked subset counts match subset enumeration", "[combinatorics]") {
  {
    Cube c(3);
    const std::uint64_t k1[] = {1, 3, 9, 19};
    const std::uint64_t k2[] = {1, 6, 21, 35};
    for (int x = 1; x <= 4; ++x) {
      REQUIRE(count_klinked(c, 0, x, 1).count == k1[x - 1]);
      REQUIRE(count_klinked(c, 0, x, 2).count == k2[x - 1]);
    }
    REQUIRE(count_klinked(c, 0, 2, 1).aux_degree == 3);
    REQUIRE(count_klinked(c, 0, 2, 2).aux_degree == 6);
  }
  for (int n = 2; n <= 4; ++n) {
    Cube c(n);
    const std::uint64_t N = c.N();
    for (int k = 1; k <= 2; ++k) {
      std::vector<std::uint64_t> adj(N, 0);
      for (std::uint64_t u = 0; u < N; ++u)
        for (std::uint64_t w = 0; w < N; ++w)
          if (u != w && cube_distance(Vertex(u), Vertex(w)) <= k) adj[u] |= std::uint64_t{1} << w;
      for (Vertex v = 0; v < N; ++v)
        for (int x = 1; x <= 4; ++x) {
          std::uint64_t direct = 0;
          for (std::uint64_t set = 0; set < (std::uint64_t{1} << N); ++set)
            if (__builtin_popcountll(set) == x && (set >> v & 1) && aux_connected(set, adj))
              ++direct;
          const auto r = count_klinked(c, v, x, k);
          REQUIRE(r.count == direct);
          REQUIRE(r.bound_holds);
        }
    }
  }
  Cube c5(5);
  REQUIRE(count_klinked(c5, 0, 1, 3).count == 1);
  REQUIRE_THROWS_AS(count_klinked(Cube(6), 0, 2, 1), std::invalid_argument);
  REQUIRE_THROWS_AS(count_klinked(c5, 0, 0, 1), std::invalid_argument);
  REQUIRE_THROWS_AS(count_klinked(c5, 0, 7, 1), std::invalid_argument);
  REQUIRE_THROWS_AS(count_klinked(c5, 0, 2, 0), std::invalid_argument);
  REQUIRE_THROWS_AS(count_klinked(c5, 32, 2, 1), std::invalid_argument);
}

TEST_CASE("boundary functional margins, exhaustive small cubes", "[combinatorics]") {
  // sign histogram of N*sum d_out^beta - 2|A|(N-|A|): never negative, frozen
  // zero counts.
  {
    Cube c(3);
    const auto g = cube_mask_graph(c);
    BetaBasis basis(3, 128);
    std::map<int, int> hist;
    for (std::uint64_t A = 0; A < 256; ++A) {
      int s = beta_margin_sign(c, g, A, basis);
      if (s == 2) s = beta_margin_sign_exact(c, g, A);
      REQUIRE(s == beta_margin_sign_exact(c, g, A));
      ++hist[s];
    }
    REQUIRE(hist == std::map<int, int>{{0, 20}, {1, 236}});
  }
  {
    Cube c(4);
    const auto g = cube_mask_graph(c);
    BetaBasis basis(4, 128);
    std::map<int, int> hist;
    for (std::uint64_t A = 0; A < 65536; ++A) {
      int s = beta_margin_sign(c, g, A, basis);
      if (s == 2) s = beta_margin_sign_exact(c, g, A);
      ++hist[s];
    }
    REQUIRE(hist == std::map<int, int>{{0, 34}, {1, 65502}});
  }

  Cube c(3);
  const auto g = cube_mask_graph(c);
  REQUIRE(beta_margin_sign_exact(c, g, 0) == 0);                   // empty set
  REQUIRE(beta_margin_sign_exact(c, g, 0xff) == 0);                // whole cube
  REQUIRE(beta_margin_sign_exact(c, g, 0x55) == 0);                // half-cube, equality
  REQUIRE(beta_margin_sign_exact(c, g, 1) == 1);                   // singleton clears it
  REQUIRE(beta_bound_sign(c, VertexSet::single(c, 0)) == 1);
  REQUIRE(beta_bound_sign(c, VertexSet::empty(c)) == 0);
  REQUIRE(beta_functional(c, VertexSet::empty(c)).sign_or_undecided() == 0);

  // exponent 1/2 genuinely fails: frozen n=3 histogram.
  std::map<int, int> hs;
  for (std::uint64_t A = 0; A < 256; ++A) ++hs[sqrt_margin_sign(c, g, A)];
  REQUIRE(hs == std::map<int, int>{{-1, 20}, {0, 8}, {1, 228}});
  REQUIRE(sqrt_margin_sign(c, g, 1) == -1);  // 8*sqrt(3) < 14
}

TEST_CASE("partition functional margin", "[combinatorics]") {
  Cube c(4);
  const auto g = cube_mask_graph(c);
  // alpha = 1 edge case: both sides zero.
  REQUIRE(partition_margin_sign_exact(c, g, 0xffff, 0, 0) == 0);
  REQUIRE(partition_bound_sign(c, VertexSet::full(c), VertexSet::empty(c), VertexSet::empty(c)) ==
          0);

  // U = empty reduces to the plain set margin with A = R.
  auto rng = SplitMix64::substream(77, 4);
  for (int rep = 0; rep < 300; ++rep) {
    const std::uint64_t R = rng.next() & 0xffff;
    REQUIRE(partition_margin_sign_exact(c, g, R, 0xffff & ~R, 0) ==
            beta_margin_sign_exact(c, g, R));
  }

  // random three-way partitions never go negative
  for (int rep = 0; rep < 2000; ++rep) {
    std::uint64_t r = 0, s = 0, u = 0;
    for (std::uint64_t v = 0; v < 16; ++v) {
      switch (rng.below(3)) {
        case 0: r |= std::uint64_t{1} << v; break;
        case 1: s |= std::uint64_t{1} << v; break;
        default: u |= std::uint64_t{1} << v; break;
      }
    }
    REQUIRE(partition_margin_sign_exact(c, g, r, s, u) >= 0);
  }

  REQUIRE_THROWS_AS(partition_margin_sign_exact(c, g, 3, 3, 0), std::invalid_argument);
  REQUIRE_THROWS_AS(partition_margin_sign_exact(c, g, 1, 2, 4), std::invalid_argument);
  REQUIRE_THROWS_AS(
      partition_bound_sign(c, VertexSet::full(c), VertexSet::full(c), VertexSet::empty(c)),
      std::invalid_argument);
  REQUIRE(partition_functional(c, VertexSet::empty(c), VertexSet::full(c), VertexSet::empty(c))
              .sign_or_undecided() == 0);
}

TEST_CASE("vertex expansion inside the even class", "[combinatorics]") {
  for (int n = 2; n <= 5; ++n) {
    Cube c(n);
    REQUIRE(vertex_expansion(c, VertexSet::single(c, 0)) == Rational(n - 1, n));
  }

  const Rational expected_min[] = {Rational(1, 2), Rational(3, 7)};
  const std::uint64_t expected_sets[] = {10, 162};
  for (int n = 3; n <= 4; ++n) {
    Cube c(n);
    const auto evens = VertexSet::even_class(c).to_vector();
    Rational best = 1;
    std::uint64_t sets = 0;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << evens.size()); ++m) {
      if (std::uint64_t(__builtin_popcountll(m)) > c.N() / 4) continue;
      VertexSet A = VertexSet::empty(c);
      for (std::size_t j = 0; j < evens.size(); ++j)
        if (m >> j & 1) A.insert(evens[j]);
      ++sets;
      const Rational r = vertex_expansion(c, A);
      REQUIRE(r > 0);  // |N(A)| > |A| on every admissible set
      if (r < best) best = r;
    }
    REQUIRE(sets == expected_sets[n - 3]);
    REQUIRE(best == expected_min[n - 3]);
  }

  Cube c(3);
  REQUIRE_THROWS_AS(vertex_expansion(c, VertexSet::single(c, 1)), std::invalid_argument);
  REQUIRE_THROWS_AS(vertex_expansion(c, VertexSet::empty(c)), std::invalid_argument);
  REQUIRE_THROWS_AS(vertex_expansion(c, VertexSet::even_class(c)), std::invalid_argument);
}

TEST_CASE("neighborhood growth probe", "[combinatorics]") {
  Cube c(4);
  const auto rep = neighborhood_growth(c, neighborhood(c, VertexSet::single(c, 1)));
  REQUIRE(rep.size_a == 4);
  REQUIRE(rep.size_na == 7);  // n(n-1)/2 + 1
  REQUIRE(rep.k == Catch::Approx(1.0));
  REQUIRE(rep.reference == Catch::Approx(16.0));

  // |N(A)| is monotone under set inclusion.
  Cube c5(5);
  auto rng = SplitMix64::substream(91, 0);
  const auto evens = VertexSet::even_class(c5).to_vector();
  for (int chain = 0; chain < 100; ++chain) {
    VertexSet A = VertexSet::empty(c5);
    A.insert(evens[std::size_t(rng.below(evens.size()))]);
    A.insert(evens[std::size_t(rng.below(evens.size()))]);
    std::uint64_t last = 0;
    for (int grow = 0; grow < 5; ++grow) {
      A.insert(evens[std::size_t(rng.below(evens.size()))]);
      const std::uint64_t na = neighborhood(c5, A).count();
      REQUIRE(na >= last);
      last = na;
    }
  }

  REQUIRE_THROWS_AS(neighborhood_growth(c, VertexSet::single(c, 0)), std::invalid_argument);
  REQUIRE_THROWS_AS(neighborhood_growth(c, VertexSet::of(c, {0, 1})), std::invalid_argument);
}

TEST_CASE("closest codimension-1 subcube", "[combinatorics]") {
  Cube c(4);
  VertexSet A = VertexSet::empty(c);
  for (Vertex v = 0; v < 16; ++v)
    if (v >> 1 & 1) A.insert(v);
  auto fit = min_subcube_distance(c, A);
  REQUIRE(fit.dir == 2);
  REQUIRE(fit.eps == 1);
  REQUIRE(fit.distance == 0);

  fit = min_subcube_distance(c, VertexSet::empty(c));
  REQUIRE(fit.dir == 1);
  REQUIRE(fit.eps == 0);
  REQUIRE(fit.distance == Rational(1, 2));

  VertexSet H = VertexSet::empty(c);
  for (Vertex v = 0; v < 16; ++v)
    if (!(v & 1)) H.insert(v);
  H -= VertexSet::single(c, 0);
  fit = min_subcube_distance(c, H);
  REQUIRE(fit.dir == 1);
  REQUIRE(fit.eps == 0);
  REQUIRE(fit.distance == Rational(1, 16));

  // parity classes sit at distance 1/2 from every subcube; tie-break first.
  Cube c3(3);
  fit = min_subcube_distance(c3, VertexSet::even_class(c3));
  REQUIRE(fit.dir == 1);
  REQUIRE(fit.eps == 0);
  REQUIRE(fit.distance == Rational(1, 2));
}
