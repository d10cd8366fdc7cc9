#include <catch2/catch_amalgamated.hpp>

#include "miscube/executor.hpp"
#include "miscube/interval.hpp"
#include "miscube/mis.hpp"
#include "miscube/peeling.hpp"
#include "miscube/rng.hpp"

using namespace miscube;

namespace {

std::vector<StopRule> battery(const Cube& c) {
  return {
      StopRule::empty_only(),
      StopRule::support_at_least(std::uint64_t(support_stop_threshold(c.n()))),
      StopRule::max_deg_at_most(ceil_frac_pow(std::uint64_t(c.n()), 2, 3)),
      StopRule::max_deg_at_most(1),
      StopRule::size_at_most(c.N() / 2),
      first_of({StopRule::support_at_least(2), StopRule::size_at_most(3)}),
  };
}

}  // namespace

TEST_CASE("stop rule serialization round trips", "[peeling]") {
  REQUIRE(StopRule::empty_only().str() == "empty");
  REQUIRE(StopRule::support_at_least(3).str() == "support:3");
  const StopRule combo = first_of({StopRule::max_deg_at_most(2), StopRule::size_at_most(5)});
  REQUIRE(combo.str() == "maxdeg:2,size:5");
  for (const auto& r : {StopRule::empty_only(), StopRule::size_at_most(0), combo,
                        first_of({StopRule::support_at_least(1), StopRule::empty_only()})})
    REQUIRE(StopRule::parse(r.str()) == r);

  REQUIRE_THROWS_AS(StopRule::parse(""), std::invalid_argument);
  REQUIRE_THROWS_AS(StopRule::parse("bogus"), std::invalid_argument);
  REQUIRE_THROWS_AS(StopRule::parse("support:"), std::invalid_argument);
  REQUIRE_THROWS_AS(StopRule::parse("support:x"), std::invalid_argument);
  REQUIRE_THROWS_AS(StopRule::parse("size:3x"), std::invalid_argument);
}

TEST_CASE("peel runs, small frozen cases", "[peeling]") {
  {
    Cube c(2);
    const VertexSet I = VertexSet::of(c, {0, 3});
    auto r = peel(c, VertexSet::full(c), I, StopRule::empty_only());
    REQUIRE(r.trace.xi == std::vector<std::uint8_t>{1, 1});
    REQUIRE(r.trace.xs == std::vector<Vertex>{0, 3});
    REQUIRE(r.X.count() == 0);
    REQUIRE(r.removed_in_I == I);
    REQUIRE(r.fired_atom == 0);  // the empty stop is the listed atom
  }
  {
    // stops right after the first MIS removal
    Cube c(3);
    auto r = peel(c, VertexSet::full(c), VertexSet::even_class(c), StopRule::support_at_least(1));
    REQUIRE(r.trace.xi == std::vector<std::uint8_t>{1});
    REQUIRE(r.trace.xs == std::vector<Vertex>{0});
    REQUIRE(r.X == VertexSet::of(c, {3, 5, 6, 7}));
    REQUIRE(r.removed_in_I == VertexSet::single(c, 0));
  }
  {
    // the support-threshold run for n=3, fully pinned down
    Cube c(3);
    REQUIRE(support_stop_threshold(3) == 3);
    auto r = peel(c, VertexSet::full(c), VertexSet::even_class(c), StopRule::support_at_least(3));
    REQUIRE(r.trace.xs == std::vector<Vertex>{0, 7, 3, 5});
    REQUIRE(r.trace.xi == std::vector<std::uint8_t>{1, 0, 1, 1});
    REQUIRE(r.X == VertexSet::single(c, 6));
    REQUIRE(r.removed_in_I == VertexSet::of(c, {0, 3, 5}));
    REQUIRE(r.fired_atom == 0);

    const auto a = alpha_trajectory(c, r);
    const std::vector<Rational> expect{Rational(1), Rational(0), Rational(-1, 4), Rational(-1, 2),
                                       Rational(-3, 4)};
    REQUIRE(a.alphas == expect);
    REQUIRE(a.max_deg_bound);
    REQUIRE(a.support_contraction);
    REQUIRE(a.support_stop_applicable);
    REQUIRE(a.support_stop_bound);
  }
  {
    // W = empty: zero iterations either way
    Cube c(3);
    auto r = peel(c, VertexSet::empty(c), VertexSet::even_class(c), StopRule::empty_only());
    REQUIRE(r.trace.xi.empty());
    REQUIRE(r.fired_atom == 0);
    auto r2 = peel(c, VertexSet::empty(c), VertexSet::even_class(c), StopRule::support_at_least(1));
    REQUIRE(r2.trace.xi.empty());
    REQUIRE(r2.fired_atom == -1);  // ran out of vertices instead
    const auto rp = replay(c, r2.trace);
    REQUIRE(rp.X == VertexSet::empty(c));
    REQUIRE(rp.removed_in_I == VertexSet::empty(c));
  }
  Cube c(3);
  REQUIRE_THROWS_AS(peel(c, VertexSet::full(c), VertexSet::of(c, {0, 1}), StopRule::empty_only()),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(peel(c, VertexSet::full(c), VertexSet::single(c, 0), StopRule::empty_only()),
                    std::invalid_argument);
}

TEST_CASE("surviving intersection stays an MIS and replay agrees", "[peeling]") {
  Executor ex(1);
  for (int n = 3; n <= 4; ++n) {
    Cube c(n);
    int applicable = 0;
    for (auto mask : enumerate_cube_mis(c, ex)) {
      const VertexSet I = mask_to_set(c, mask);
      for (const auto& rule : battery(c)) {
        const auto r = peel(c, VertexSet::full(c), I, rule);

        VertexSet IX = I;
        IX &= r.X;
        REQUIRE(is_mis(c, r.X, IX));

        const auto rp = replay(c, r.trace);
        REQUIRE(rp.X == r.X);
        REQUIRE(rp.removed_in_I == r.removed_in_I);
        REQUIRE(rp.fired_atom == r.fired_atom);

        const auto a = alpha_trajectory(c, r);
        REQUIRE(a.alphas.front() == 1);
        for (std::size_t i = 1; i < a.alphas.size(); ++i)
          REQUIRE(a.alphas[i] <= a.alphas[i - 1]);
        REQUIRE(a.max_deg_bound);
        REQUIRE(a.support_contraction);
        if (a.support_stop_applicable) {
          ++applicable;
          REQUIRE(a.support_stop_bound);
        }
      }
    }
    REQUIRE(applicable == (n == 3 ? 2 : 18));
  }
}

TEST_CASE("tampered traces never pass silently", "[peeling]") {
  Executor ex(1);
  Cube c(3);
  int threw = 0;
  for (auto mask : enumerate_cube_mis(c, ex)) {
    const VertexSet I = mask_to_set(c, mask);
    for (const auto& rule : battery(c)) {
      const auto r = peel(c, VertexSet::full(c), I, rule);
      for (std::size_t b = 0; b < r.trace.xi.size(); ++b) {
        PeelTrace t = r.trace;
        t.xi[b] ^= 1;
        try {
          const auto rr = replay(c, t);
          // The flipped bit must surface in the outcome pair.
          REQUIRE((!(rr.X == r.X) || !(rr.removed_in_I == r.removed_in_I)));
        } catch (const std::invalid_argument&) {
          ++threw;
        }
      }
    }
  }
  REQUIRE(threw > 0);
}

TEST_CASE("replay validates trace shape", "[peeling]") {
  Cube c(3);
  const auto r = peel(c, VertexSet::full(c), VertexSet::even_class(c), StopRule::empty_only());

  PeelTrace lengths = r.trace;
  lengths.xi.pop_back();
  REQUIRE_THROWS_AS(replay(c, lengths), std::invalid_argument);

  PeelTrace wrong_vertex = r.trace;
  wrong_vertex.xs[0] = 5;
  REQUIRE_THROWS_AS(replay(c, wrong_vertex), std::invalid_argument);

  PeelTrace truncated = r.trace;
  truncated.xi.pop_back();
  truncated.xs.pop_back();
  REQUIRE_THROWS_AS(replay(c, truncated), std::invalid_argument);

  PeelTrace padded = r.trace;
  padded.xi.push_back(0);
  padded.xs.push_back(0);
  REQUIRE_THROWS_AS(replay(c, padded), std::invalid_argument);
}

TEST_CASE("two-stage degree-threshold runs", "[peeling]") {
  Executor ex(1);
  REQUIRE(ceil_frac_pow(3, 2, 3) == 3);
  REQUIRE(ceil_frac_pow(4, 2, 3) == 3);
  REQUIRE(ceil_frac_pow(3, 1, 3) == 2);
  REQUIRE(ceil_frac_pow(4, 1, 3) == 2);
  for (int n = 3; n <= 4; ++n) {
    Cube c(n);
    const std::uint64_t d1 = ceil_frac_pow(std::uint64_t(n), 2, 3);
    const std::uint64_t d2 = ceil_frac_pow(std::uint64_t(n), 1, 3);
    for (auto mask : enumerate_cube_mis(c, ex)) {
      const VertexSet I = mask_to_set(c, mask);
      const auto s1 = peel(c, VertexSet::full(c), I, StopRule::max_deg_at_most(d1));
      VertexSet IX1 = I;
      IX1 &= s1.X;
      REQUIRE(is_mis(c, s1.X, IX1));

      const auto s2 = peel(c, s1.X, I, StopRule::max_deg_at_most(d2));
      VertexSet IX2 = I;
      IX2 &= s2.X;
      REQUIRE(is_mis(c, s2.X, IX2));

      const auto sb = support_size_bound(c, s2, d2);
      REQUIRE(sb.hypothesis);
      REQUIRE(sb.bound);
    }
  }
  Cube c(3);
  const auto r = peel(c, VertexSet::full(c), VertexSet::even_class(c), StopRule::empty_only());
  REQUIRE_THROWS_AS(support_size_bound(c, r, 0), std::invalid_argument);
}

TEST_CASE("alpha trajectory needs a full-cube start", "[peeling]") {
  Cube c(3);
  const auto r =
      peel(c, VertexSet::even_class(c), VertexSet::even_class(c), StopRule::empty_only());
  REQUIRE_THROWS_AS(alpha_trajectory(c, r), std::invalid_argument);
}

TEST_CASE("degree-bounded subset size limit", "[peeling]") {
  Cube c(3);
  REQUIRE(pz_bound(c, VertexSet::full(c), 0, 0) == Rational(4));
  REQUIRE(pz_bound(c, VertexSet::full(c), 3, 0) == Rational(8));
  REQUIRE_THROWS_AS(pz_bound(c, VertexSet::full(c), 6, 0), std::invalid_argument);

  auto rng = SplitMix64::substream(23, 0);
  for (int rep = 0; rep < 40; ++rep) {
    const VertexSet W = VertexSet::from_word(c, rng.next() & 0xff);
    for (std::uint64_t d = 0; d < 6; ++d) REQUIRE(pz_check(c, W, d));
  }
  Cube c5(5);
  REQUIRE_THROWS_AS(pz_check(c5, VertexSet::full(c5), 1), std::invalid_argument);
}

TEST_CASE("bounded-support string counts", "[peeling]") {
  const auto r41 = support_count_bound(4, 1);
  REQUIRE(r41.exact == 15);
  REQUIRE(r41.entropy_bound == Rational(1280, 27));
  const auto r21 = support_count_bound(2, 1);
  REQUIRE(r21.exact == 6);
  REQUIRE(r21.entropy_bound == Rational(12));
  for (unsigned l = 2; l <= 20; ++l)
    for (unsigned r = 1; 2 * r <= l; ++r)
      REQUIRE(Rational(support_count_bound(l, r).exact) <= support_count_bound(l, r).entropy_bound);
  REQUIRE_THROWS_AS(support_count_bound(4, 0), std::invalid_argument);
  REQUIRE_THROWS_AS(support_count_bound(4, 3), std::invalid_argument);
}

TEST_CASE("integer fractional-power ceilings", "[peeling]") {
  const std::uint64_t two_thirds[] = {1, 2, 3, 3, 3, 4, 4, 4};
  const std::uint64_t one_third[] = {1, 2, 2, 2, 2, 2, 2, 2};
  for (std::uint64_t n = 1; n <= 8; ++n) {
    REQUIRE(ceil_frac_pow(n, 2, 3) == two_thirds[n - 1]);
    REQUIRE(ceil_frac_pow(n, 1, 3) == one_third[n - 1]);
  }
  REQUIRE(ceil_frac_pow(0, 2, 3) == 0);
  REQUIRE(ceil_frac_pow(4, 3, 2) == 8);
  REQUIRE(ceil_frac_pow(9, 1, 2) == 3);
  REQUIRE_THROWS_AS(ceil_frac_pow(4, 1, 0), std::invalid_argument);
}
