#pragma once
// Hamming cube Q_n and bit-vector vertex sets.
//
// Conventions, used everywhere in this project:
//   * a vertex of Q_n is an integer index in [0, 2^n); bit j-1 of the index is
//     coordinate j, so flipping coordinate i is XOR with 1 << (i-1);
//   * directions are 1-based (i in [1, n]);
//   * a VertexSet is a length-N bit vector packed into 64-bit words, word 0
//     holding vertices 0..63.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace miscube {

using Vertex = std::uint32_t;

struct cap_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Cube {
 public:
  // Graph operations stay tractable well past enumeration scale; the cap is a
  // memory-honesty guard (N words of adjacency-free bitsets only).
  static constexpr int kDefaultDimCap = 24;

  explicit Cube(int n, int dim_cap = kDefaultDimCap) : n_(n) {
    if (n < 1) throw std::invalid_argument("Cube: dimension must be >= 1");
    if (n > dim_cap || dim_cap > 30)
      throw cap_exceeded("Cube: dimension " + std::to_string(n) +
                         " exceeds cap " + std::to_string(std::min(dim_cap, 30)));
  }

  int n() const { return n_; }
  std::uint64_t N() const { return std::uint64_t{1} << n_; }
  std::size_t words() const { return n_ <= 6 ? 1 : (std::size_t{1} << (n_ - 6)); }

  void check_vertex(Vertex v) const {
    if (v >= N()) throw std::out_of_range("vertex index out of range");
  }
  void check_dir(int i) const {
    if (i < 1 || i > n_) throw std::out_of_range("direction out of range");
  }

  Vertex flip(Vertex v, int i) const {
    check_vertex(v);
    check_dir(i);
    return v ^ (Vertex{1} << (i - 1));
  }

  bool odd_vertex(Vertex v) const {
    check_vertex(v);
    return __builtin_popcount(v) & 1;
  }

  bool operator==(const Cube&) const = default;

 private:
  int n_;
};

// An edge of Q_n, normalized so coordinate `dir` of `lo` is 0; the edge joins
// lo and lo ^ (1 << (dir-1)).
struct Edge {
  Vertex lo = 0;
  int dir = 1;

  Edge() = default;
  Edge(Vertex lo_, int dir_) : lo(lo_), dir(dir_) {
    if (dir < 1 || dir > 30 || (lo >> (dir - 1)) & 1)
      throw std::invalid_argument("Edge: lo must have a 0 in coordinate dir");
  }

  static Edge from_endpoints(Vertex u, Vertex v) {
    Vertex x = u ^ v;
    if (x == 0 || (x & (x - 1)) != 0)
      throw std::invalid_argument("Edge: endpoints must differ in exactly one coordinate");
    int dir = __builtin_ctz(x) + 1;
    return Edge(std::min(u, v), dir);
  }

  Vertex hi() const { return lo | (Vertex{1} << (dir - 1)); }
  Vertex other(Vertex v) const {
    if (v == lo) return hi();
    if (v == hi()) return lo;
    throw std::invalid_argument("Edge::other: vertex not on edge");
  }

  // lo is normalized, so the coordinate sum excluding `dir` is just popcount(lo).
  bool odd_parity() const { return __builtin_popcount(lo) & 1; }

  // Canonical id: (dir-1) * N/2 + rank of lo among the dir-low vertices, where
  // the rank drops the (always zero) bit dir-1 of lo. Total order for matchings.
  std::uint64_t id(const Cube& c) const {
    c.check_dir(dir);
    c.check_vertex(hi());
    std::uint64_t m = (std::uint64_t{1} << (dir - 1)) - 1;
    std::uint64_t rank = (lo & m) | ((std::uint64_t{lo} >> 1) & ~m);
    return std::uint64_t(dir - 1) * (c.N() / 2) + rank;
  }

  static Edge from_id(const Cube& c, std::uint64_t id) {
    std::uint64_t half = c.N() / 2;
    if (id >= std::uint64_t(c.n()) * half) throw std::out_of_range("edge id out of range");
    int dir = int(id / half) + 1;
    std::uint64_t r = id % half;
    std::uint64_t m = (std::uint64_t{1} << (dir - 1)) - 1;
    return Edge(Vertex((r & m) | ((r & ~m) << 1)), dir);
  }

  // "dir:loIndex"
  std::string str() const { return std::to_string(dir) + ":" + std::to_string(lo); }

  bool operator==(const Edge&) const = default;
  auto operator<=>(const Edge& o) const {
    if (auto c = dir <=> o.dir; c != 0) return c;
    return lo <=> o.lo;
  }
};

inline bool vertex_parity_even(Vertex v) { return (__builtin_popcount(v) & 1) == 0; }
inline bool edge_parity_even(const Edge& e) { return !e.odd_parity(); }

class VertexSet {
 public:
  VertexSet() : n_(0) {}  // empty sentinel of dimension 0; not tied to a cube

  explicit VertexSet(const Cube& c) : n_(c.n()), w_(c.words(), 0) {}

  static VertexSet empty(const Cube& c) { return VertexSet(c); }

  static VertexSet full(const Cube& c) {
    VertexSet s(c);
    for (auto& w : s.w_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  static VertexSet single(const Cube& c, Vertex v) {
    VertexSet s(c);
    s.insert(v);
    return s;
  }

  static VertexSet of(const Cube& c, std::initializer_list<Vertex> vs) {
    VertexSet s(c);
    for (Vertex v : vs) s.insert(v);
    return s;
  }

  // Vertices of even coordinate-sum parity.
  static VertexSet even_class(const Cube& c) {
    VertexSet s(c);
    for (Vertex v = 0; v < c.N(); ++v)
      if (vertex_parity_even(v)) s.insert(v);
    return s;
  }
  static VertexSet odd_class(const Cube& c) {
    VertexSet s = even_class(c);
    s.complement();
    return s;
  }

  // A single-word set for n <= 6, bit v = vertex v.
  static VertexSet from_word(const Cube& c, std::uint64_t word) {
    if (c.n() > 6) throw std::invalid_argument("from_word: dimension > 6");
    VertexSet s(c);
    s.w_[0] = word;
    s.trim();
    return s;
  }

  int n() const { return n_; }
  std::uint64_t domain_size() const { return std::uint64_t{1} << n_; }
  std::size_t word_count() const { return w_.size(); }
  std::uint64_t word(std::size_t k) const { return w_[k]; }
  std::uint64_t as_word() const {
    if (n_ > 6) throw std::invalid_argument("as_word: dimension > 6");
    return w_[0];
  }

  bool contains(Vertex v) const {
    check(v);
    return (w_[v >> 6] >> (v & 63)) & 1;
  }
  void insert(Vertex v) {
    check(v);
    w_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }
  void erase(Vertex v) {
    check(v);
    w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  std::uint64_t count() const {
    std::uint64_t c = 0;
    for (auto w : w_) c += __builtin_popcountll(w);
    return c;
  }
  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  VertexSet& operator|=(const VertexSet& o) {
    match(o);
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    match(o);
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }
  VertexSet& operator^=(const VertexSet& o) {
    match(o);
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    match(o);
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  void complement() {
    for (auto& w : w_) w = ~w;
    trim();
  }
  friend VertexSet complement_of(VertexSet a) {
    a.complement();
    return a;
  }

  bool subset_of(const VertexSet& o) const {
    match(o);
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }
  bool intersects(const VertexSet& o) const {
    match(o);
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & o.w_[k]) return true;
    return false;
  }

  // Image of the set under the coordinate-i flip (a permutation of V).
  VertexSet flipped(int i) const {
    if (i < 1 || i > n_) throw std::out_of_range("direction out of range");
    VertexSet r = *this;
    int b = i - 1;
    if (b < 6) {
      int s = 1 << b;
      std::uint64_t mlo = intra_mask(b);
      for (auto& w : r.w_) w = ((w & mlo) << s) | ((w >> s) & mlo);
    } else {
      std::size_t d = std::size_t{1} << (b - 6);
      for (std::size_t k = 0; k < r.w_.size(); ++k)
        if (!(k & d)) std::swap(r.w_[k], r.w_[k + d]);
    }
    return r;
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(count());
    for (std::size_t k = 0; k < w_.size(); ++k) {
      std::uint64_t w = w_[k];
      while (w) {
        out.push_back(Vertex(k * 64 + __builtin_ctzll(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < w_.size(); ++k) {
      std::uint64_t w = w_[k];
      while (w) {
        f(Vertex(k * 64 + __builtin_ctzll(w)));
        w &= w - 1;
      }
    }
  }

  Vertex first() const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k]) return Vertex(k * 64 + __builtin_ctzll(w_[k]));
    throw std::out_of_range("first: empty set");
  }

  // Ascending numeric order of the bit vector read as one big integer.
  std::strong_ordering operator<=>(const VertexSet& o) const {
    match(o);
    for (std::size_t k = w_.size(); k-- > 0;)
      if (w_[k] != o.w_[k]) return w_[k] <=> o.w_[k];
    return std::strong_ordering::equal;
  }
  bool operator==(const VertexSet& o) const { return (*this <=> o) == 0; }

  // Lowercase hex, least-significant word first, each word 16 digits with its
  // most-significant nibble first; exactly ceil(N/4) digits in total.
  std::string to_hex() const;
  static VertexSet from_hex(const Cube& c, const std::string& hex);

 private:
  void check(Vertex v) const {
    if ((v >> 6) >= w_.size() || v >= domain_size())
      throw std::out_of_range("vertex index out of range");
  }
  void match(const VertexSet& o) const {
    if (n_ != o.n_) throw std::invalid_argument("VertexSet dimension mismatch");
  }
  void trim() {
    if (n_ < 6) w_[0] &= (std::uint64_t{1} << (std::uint64_t{1} << n_)) - 1;
  }
  static std::uint64_t intra_mask(int b) {
    static constexpr std::uint64_t kMask[6] = {
        0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
        0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull,
    };
    return kMask[b];
  }

  int n_;
  std::vector<std::uint64_t> w_;
};

// N(A) = union of neighbor sets; may intersect A.
VertexSet neighborhood(const Cube& c, const VertexSet& A);

// Edges from A to B (disjoint), to V \ A, or to V \ A in direction i only.
// Sorted by edge id.
std::vector<Edge> boundary_between(const Cube& c, const VertexSet& A, const VertexSet& B);
std::vector<Edge> boundary(const Cube& c, const VertexSet& A);
std::vector<Edge> boundary_i(const Cube& c, const VertexSet& A, int i);
std::uint64_t boundary_size(const Cube& c, const VertexSet& A);

// Number of Q_n edges with both endpoints in A.
std::uint64_t internal_edge_count(const Cube& c, const VertexSet& A);

// Drop the last k coordinates / list the 2^k preimages.
Vertex project(const Cube& c, Vertex v, int k);
VertexSet fiber(const Cube& c, Vertex w, int k);

// Max degree into A over vertices of A (0 for empty A), and per-vertex variant.
int degree_in(const Cube& c, const VertexSet& A, Vertex v);
int max_internal_degree(const Cube& c, const VertexSet& A);

// Hamming distance between vertex indices.
inline int cube_distance(Vertex u, Vertex v) { return __builtin_popcount(u ^ v); }

}  // namespace miscube
