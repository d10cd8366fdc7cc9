#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "miscube/cube.hpp"
#include "miscube/rng.hpp"

using namespace miscube;

TEST_CASE("cube basics", "[cube]") {
  Cube c(3);
  REQUIRE(c.n() == 3);
  REQUIRE(c.N() == 8);
  REQUIRE(c.words() == 1);
  REQUIRE(Cube(7).words() == 2);
  REQUIRE(Cube(8).words() == 4);

  REQUIRE(c.flip(0, 1) == 1);
  REQUIRE(c.flip(0, 3) == 4);
  REQUIRE(c.flip(5, 2) == 7);
  for (Vertex v = 0; v < 8; ++v)
    for (int i = 1; i <= 3; ++i) REQUIRE(c.flip(c.flip(v, i), i) == v);

  REQUIRE_FALSE(c.odd_vertex(0));
  REQUIRE(c.odd_vertex(7));
  REQUIRE(c.odd_vertex(4));
  REQUIRE_FALSE(c.odd_vertex(5));

  REQUIRE_THROWS_AS(c.flip(8, 1), std::out_of_range);
  REQUIRE_THROWS_AS(c.flip(0, 0), std::out_of_range);
  REQUIRE_THROWS_AS(c.flip(0, 4), std::out_of_range);
  REQUIRE_THROWS_AS(Cube(0), std::invalid_argument);
  REQUIRE_THROWS_AS(Cube(25), cap_exceeded);
  REQUIRE_THROWS_AS(Cube(7, 6), cap_exceeded);
  REQUIRE_NOTHROW(Cube(25, 30));
}

TEST_CASE("edge normalization and ids", "[cube]") {
  Cube c(4);
  Edge e(0b0101, 2);
  REQUIRE(e.lo == 5);
  REQUIRE(e.hi() == 7);
  REQUIRE(e.other(5) == 7);
  REQUIRE(e.other(7) == 5);
  REQUIRE_THROWS_AS(e.other(6), std::invalid_argument);
  REQUIRE_THROWS_AS(Edge(0b0111, 2), std::invalid_argument);

  REQUIRE(Edge::from_endpoints(7, 5) == e);
  REQUIRE(Edge::from_endpoints(5, 7) == e);
  REQUIRE_THROWS_AS(Edge::from_endpoints(5, 6), std::invalid_argument);
  REQUIRE_THROWS_AS(Edge::from_endpoints(5, 5), std::invalid_argument);

  REQUIRE(e.str() == "2:5");
  REQUIRE(Edge(0, 1).str() == "1:0");

  // Parity is the coordinate sum of the lower endpoint.
  REQUIRE(Edge(0, 1).odd_parity() == false);
  REQUIRE(Edge(0b0101, 2).odd_parity() == false);
  REQUIRE(Edge(0b0001, 2).odd_parity() == true);
  REQUIRE(edge_parity_even(Edge(0b0001, 2)) == false);

  // Ids hit [0, n*N/2) exactly once and round-trip.
  for (int n = 1; n <= 4; ++n) {
    Cube cn(n);
    std::set<std::uint64_t> seen;
    for (int dir = 1; dir <= n; ++dir)
      for (Vertex v = 0; v < cn.N(); ++v) {
        if ((v >> (dir - 1)) & 1) continue;
        Edge f(v, dir);
        auto id = f.id(cn);
        REQUIRE(id < std::uint64_t(n) * cn.N() / 2);
        REQUIRE(seen.insert(id).second);
        REQUIRE(Edge::from_id(cn, id) == f);
      }
    REQUIRE(seen.size() == std::uint64_t(n) * cn.N() / 2);
  }
  REQUIRE_THROWS_AS(Edge::from_id(c, 32), std::out_of_range);

  // Ordering groups by direction, then lower endpoint.
  REQUIRE(Edge(6, 1) < Edge(0, 2));
  REQUIRE(Edge(0, 2) < Edge(1, 2));
}

TEST_CASE("vertex set membership and algebra", "[cube]") {
  Cube c(3);
  VertexSet a = VertexSet::of(c, {0, 3, 5, 6});
  REQUIRE(a.count() == 4);
  REQUIRE(a.contains(3));
  REQUIRE_FALSE(a.contains(1));
  a.erase(3);
  REQUIRE(a.count() == 3);
  a.insert(3);

  VertexSet b = VertexSet::of(c, {0, 1});
  REQUIRE((a & b) == VertexSet::single(c, 0));
  REQUIRE((a | b).count() == 5);
  REQUIRE((a - b) == VertexSet::of(c, {3, 5, 6}));
  REQUIRE((a ^ b) == VertexSet::of(c, {1, 3, 5, 6}));
  REQUIRE(complement_of(a) == VertexSet::of(c, {1, 2, 4, 7}));
  REQUIRE(VertexSet::single(c, 0).subset_of(a));
  REQUIRE_FALSE(b.subset_of(a));
  REQUIRE(a.intersects(b));
  REQUIRE_FALSE(a.intersects(VertexSet::of(c, {1, 2})));

  REQUIRE(VertexSet::full(c).count() == 8);
  REQUIRE(VertexSet::empty(c).none());
  REQUIRE(VertexSet::even_class(c) == VertexSet::of(c, {0, 3, 5, 6}));
  REQUIRE(VertexSet::odd_class(c) == VertexSet::of(c, {1, 2, 4, 7}));
  REQUIRE(VertexSet::from_word(c, 0x69) == a);
  REQUIRE(a.as_word() == 0x69);
  REQUIRE_THROWS_AS(a.contains(8), std::out_of_range);

  auto v = a.to_vector();
  REQUIRE(v == std::vector<Vertex>{0, 3, 5, 6});
  REQUIRE(a.first() == 0);
  REQUIRE_THROWS_AS(VertexSet::empty(c).first(), std::out_of_range);

  // Numeric order of the packed words.
  REQUIRE(VertexSet::of(c, {1}) < VertexSet::of(c, {2}));
  REQUIRE(VertexSet::of(c, {0, 1}) < VertexSet::of(c, {2}));
  REQUIRE(VertexSet::of(c, {7}) > VertexSet::of(c, {0, 1, 2, 3, 4, 5, 6}));
}

TEST_CASE("flipped matches per-vertex flips across word sizes", "[cube]") {
  for (int n : {1, 2, 3, 5, 6, 7, 8}) {
    Cube c(n);
    SplitMix64 g(0x1234 + n);
    for (int rep = 0; rep < 20; ++rep) {
      VertexSet a(c);
      for (Vertex v = 0; v < c.N(); ++v)
        if (g.next() & 1) a.insert(v);
      for (int i = 1; i <= n; ++i) {
        VertexSet f = a.flipped(i);
        VertexSet naive(c);
        a.for_each([&](Vertex v) { naive.insert(c.flip(v, i)); });
        REQUIRE(f == naive);
        REQUIRE(f.flipped(i) == a);
      }
    }
  }
}

TEST_CASE("neighborhood and boundaries", "[cube]") {
  Cube c(4);
  SplitMix64 g(99);
  for (int rep = 0; rep < 50; ++rep) {
    VertexSet a(c);
    for (Vertex v = 0; v < c.N(); ++v)
      if (g.next() % 3 == 0) a.insert(v);

    VertexSet nb = neighborhood(c, a);
    VertexSet naive(c);
    a.for_each([&](Vertex v) {
      for (int i = 1; i <= c.n(); ++i) naive.insert(c.flip(v, i));
    });
    REQUIRE(nb == naive);

    auto edges = boundary(c, a);
    REQUIRE(boundary_size(c, a) == edges.size());
    // Each vertex of A sends n edges; internal ones are counted twice.
    REQUIRE(edges.size() == c.n() * a.count() - 2 * internal_edge_count(c, a));
    REQUIRE(std::is_sorted(edges.begin(), edges.end(),
                           [&](const Edge& x, const Edge& y) { return x.id(c) < y.id(c); }));
    for (const Edge& e : edges)
      REQUIRE(a.contains(e.lo) != a.contains(e.hi()));

    for (int i = 1; i <= c.n(); ++i) {
      auto ei = boundary_i(c, a, i);
      std::size_t cnt = 0;
      for (const Edge& e : edges)
        if (e.dir == i) ++cnt;
      REQUIRE(ei.size() == cnt);
    }
  }

  VertexSet a = VertexSet::of(c, {0, 1});
  VertexSet b = VertexSet::of(c, {2, 5});
  auto between = boundary_between(c, a, b);
  REQUIRE(between.size() == 2);  // 0-2 (dir 2) and 1-5 (dir 3)
  REQUIRE(between[0] == Edge(0, 2));
  REQUIRE(between[1] == Edge(1, 3));
  REQUIRE_THROWS_AS(boundary_between(c, a, VertexSet::of(c, {1, 2})), std::invalid_argument);
}

TEST_CASE("projection fibers and degrees", "[cube]") {
  Cube c(4);
  REQUIRE(project(c, 0b1011, 1) == 0b011);
  REQUIRE(project(c, 0b1011, 2) == 0b11);
  REQUIRE(fiber(c, 0b011, 1) == VertexSet::of(c, {0b0011, 0b1011}));
  REQUIRE(fiber(c, 0b11, 2) == VertexSet::of(c, {0b0011, 0b0111, 0b1011, 0b1111}));

  VertexSet a = VertexSet::of(c, {0, 1, 2, 4, 8});
  REQUIRE(degree_in(c, a, 0) == 4);
  REQUIRE(degree_in(c, a, 1) == 1);
  REQUIRE(degree_in(c, a, 15) == 0);
  REQUIRE(max_internal_degree(c, a) == 4);
  REQUIRE(max_internal_degree(c, VertexSet::empty(c)) == 0);
  REQUIRE(max_internal_degree(c, VertexSet::even_class(c)) == 0);

  REQUIRE(cube_distance(0b1011, 0b0001) == 2);
}

TEST_CASE("hex serialization", "[cube]") {
  Cube c3(3);
  VertexSet a = VertexSet::of(c3, {0, 3, 5, 6});
  REQUIRE(a.to_hex() == "69");
  REQUIRE(VertexSet::from_hex(c3, "69") == a);
  REQUIRE(VertexSet::empty(c3).to_hex() == "00");
  REQUIRE(VertexSet::full(c3).to_hex() == "ff");

  Cube c1(1);
  REQUIRE(VertexSet::of(c1, {0, 1}).to_hex() == "3");
  REQUIRE(VertexSet::from_hex(c1, "3").count() == 2);
  REQUIRE_THROWS_AS(VertexSet::from_hex(c1, "4"), std::invalid_argument);

  Cube c2(2);
  REQUIRE(VertexSet::of(c2, {1, 3}).to_hex() == "a");

  // Wrong digit count or non-hex characters are rejected.
  REQUIRE_THROWS_AS(VertexSet::from_hex(c3, "069"), std::invalid_argument);
  REQUIRE_THROWS_AS(VertexSet::from_hex(c3, "6"), std::invalid_argument);
  REQUIRE_THROWS_AS(VertexSet::from_hex(c3, "6g"), std::invalid_argument);

  // Multi-word sets: least-significant word first, round trip exact.
  Cube c7(7);
  REQUIRE(VertexSet::single(c7, 0).to_hex() ==
          "0000000000000001" + std::string(16, '0'));
  REQUIRE(VertexSet::single(c7, 64).to_hex() ==
          std::string(16, '0') + "0000000000000001");
  SplitMix64 g(5);
  for (int rep = 0; rep < 20; ++rep) {
    VertexSet s(c7);
    for (Vertex v = 0; v < c7.N(); ++v)
      if (g.next() & 1) s.insert(v);
    std::string h = s.to_hex();
    REQUIRE(h.size() == 32);
    REQUIRE(VertexSet::from_hex(c7, h) == s);
  }
}
