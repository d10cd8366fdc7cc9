#include "miscube/cube.hpp"

#include <array>

namespace miscube {

VertexSet neighborhood(const Cube& c, const VertexSet& A) {
  VertexSet r(c);
  for (int i = 1; i <= c.n(); ++i) r |= A.flipped(i);
  return r;
}

std::vector<Edge> boundary_between(const Cube& c, const VertexSet& A, const VertexSet& B) {
  if (A.intersects(B)) throw std::invalid_argument("boundary_between: sets overlap");
  std::vector<Edge> out;
  for (int i = 1; i <= c.n(); ++i) {
    // endpoints of A whose i-flip lands in B
    VertexSet hits = A & B.flipped(i);
    hits.for_each([&](Vertex v) { out.push_back(Edge(std::min(v, c.flip(v, i)), i)); });
  }
  std::sort(out.begin(), out.end(), [&](const Edge& a, const Edge& b) { return a.id(c) < b.id(c); });
  return out;
}

std::vector<Edge> boundary(const Cube& c, const VertexSet& A) {
  return boundary_between(c, A, complement_of(A));
}

std::vector<Edge> boundary_i(const Cube& c, const VertexSet& A, int i) {
  c.check_dir(i);
  VertexSet comp = complement_of(A);
  std::vector<Edge> out;
  VertexSet hits = A & comp.flipped(i);
  hits.for_each([&](Vertex v) { out.push_back(Edge(std::min(v, c.flip(v, i)), i)); });
  std::sort(out.begin(), out.end(), [&](const Edge& a, const Edge& b) { return a.id(c) < b.id(c); });
  return out;
}

std::uint64_t boundary_size(const Cube& c, const VertexSet& A) {
  VertexSet comp = complement_of(A);
  std::uint64_t total = 0;
  for (int i = 1; i <= c.n(); ++i) total += (A & comp.flipped(i)).count();
  return total;
}

std::uint64_t internal_edge_count(const Cube& c, const VertexSet& A) {
  std::uint64_t twice = 0;
  for (int i = 1; i <= c.n(); ++i) twice += (A & A.flipped(i)).count();
  return twice / 2;  // each internal edge counted from both endpoints
}

Vertex project(const Cube& c, Vertex v, int k) {
  c.check_vertex(v);
  if (k < 1 || k >= c.n()) throw std::out_of_range("project: k out of range");
  return v & ((Vertex{1} << (c.n() - k)) - 1);
}

VertexSet fiber(const Cube& c, Vertex w, int k) {
  if (k < 1 || k >= c.n()) throw std::out_of_range("fiber: k out of range");
  if (w >= (Vertex{1} << (c.n() - k))) throw std::out_of_range("fiber: base vertex out of range");
  VertexSet r(c);
  for (Vertex hi = 0; hi < (Vertex{1} << k); ++hi) r.insert(w | (hi << (c.n() - k)));
  return r;
}

int degree_in(const Cube& c, const VertexSet& A, Vertex v) {
  c.check_vertex(v);
  int d = 0;
  for (int i = 1; i <= c.n(); ++i) d += A.contains(c.flip(v, i));
  return d;
}

int max_internal_degree(const Cube& c, const VertexSet& A) {
  // degree(v in A) summed word-parallel: count, per vertex of A, the flipped
  // images that stay in A
  int best = 0;
  std::vector<VertexSet> hits;
  hits.reserve(c.n());
  for (int i = 1; i <= c.n(); ++i) hits.push_back(A & A.flipped(i));
  A.for_each([&](Vertex v) {
    int d = 0;
    for (auto& h : hits) d += h.contains(v);
    if (d > best) best = d;
  });
  return best;
}

std::string VertexSet::to_hex() const {
  std::size_t digits = (domain_size() + 3) / 4;
  std::string out;
  out.reserve(digits);
  static const char* kHex = "0123456789abcdef";
  for (std::size_t k = 0; k < w_.size(); ++k) {
    std::size_t word_digits = std::min<std::size_t>(16, digits - out.size());
    // most-significant nibble of the (possibly truncated) word first
    for (std::size_t d = word_digits; d-- > 0;) out.push_back(kHex[(w_[k] >> (4 * d)) & 15]);
  }
  return out;
}

VertexSet VertexSet::from_hex(const Cube& c, const std::string& hex) {
  VertexSet s(c);
  std::size_t digits = (s.domain_size() + 3) / 4;
  if (hex.size() != digits)
    throw std::invalid_argument("from_hex: expected exactly " + std::to_string(digits) + " hex digits");
  std::size_t pos = 0;
  for (std::size_t k = 0; k < s.w_.size(); ++k) {
    std::size_t word_digits = std::min<std::size_t>(16, digits - pos);
    std::uint64_t w = 0;
    for (std::size_t d = 0; d < word_digits; ++d) {
      char ch = hex[pos + d];
      int nib;
      if (ch >= '0' && ch <= '9') nib = ch - '0';
      else if (ch >= 'a' && ch <= 'f') nib = ch - 'a' + 10;
      else throw std::invalid_argument("from_hex: invalid hex digit");
      w = (w << 4) | std::uint64_t(nib);
    }
    s.w_[k] = w;
    pos += word_digits;
  }
  std::uint64_t raw = s.w_[0];
  s.trim();
  if (raw != s.w_[0]) throw std::invalid_argument("from_hex: bit set beyond domain");
  return s;
}

}  // namespace miscube
