#include "miscube/labeling.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

#include "miscube/interval.hpp"
#include "miscube/matching.hpp"
#include "miscube/mis.hpp"

namespace miscube {

namespace {

// Both fiber vertices over every member of a base-cube set.
VertexSet lift(const Cube& amb, const VertexSet& base_set) {
  VertexSet s(amb);
  std::uint64_t half = amb.N() / 2;
  base_set.for_each([&](Vertex v) {
    s.insert(v);
    s.insert(Vertex(v | half));
  });
  return s;
}

bool fiber_occupied(const VertexSet& I, Vertex v, std::uint64_t half) {
  return I.contains(v) || I.contains(Vertex(v | half));
}

}  // namespace

std::string Labeling::str() const {
  std::string s;
  s.reserve(values.size());
  for (Label l : values)
    s += l == Label::Zero ? '0' : l == Label::One ? '1' : 'L';
  return s;
}

Labeling Labeling::parse(const std::string& s) {
  std::size_t len = s.size();
  if (len < 2 || (len & (len - 1)) != 0)
    throw std::invalid_argument("Labeling::parse: length must be 2^base_n, base_n >= 1");
  Labeling sigma{int(std::countr_zero(len)), std::vector<Label>(len, Label::Lambda)};
  for (std::size_t i = 0; i < len; ++i) {
    switch (s[i]) {
      case '0': sigma.values[i] = Label::Zero; break;
      case '1': sigma.values[i] = Label::One; break;
      case 'L': sigma.values[i] = Label::Lambda; break;
      default: throw std::invalid_argument("Labeling::parse: characters must be 0, 1 or L");
    }
  }
  return sigma;
}

bool is_legal(const Cube& base, const Labeling& sigma) {
  if (sigma.base_n != base.n() || sigma.values.size() != base.N())
    throw std::invalid_argument("is_legal: labeling does not fit the cube");
  for (Vertex v = 0; v < base.N(); ++v) {
    Label lv = sigma.values[v];
    if (lv != Label::Lambda) {
      for (int j = 1; j <= base.n(); ++j) {
        Vertex u = base.flip(v, j);
        if (u > v && sigma.values[u] == lv) return false;
      }
    } else {
      bool saw0 = false, saw1 = false;
      for (int j = 1; j <= base.n(); ++j) {
        Label lu = sigma.values[base.flip(v, j)];
        saw0 |= lu == Label::Zero;
        saw1 |= lu == Label::One;
      }
      if (!saw0 || !saw1) return false;
    }
  }
  return true;
}

Labeling to_labeling(const Cube& c, const VertexSet& I) {
  if (c.n() < 2)
    throw std::invalid_argument("to_labeling: ambient dimension must be >= 2");
  if (!is_mis(c, VertexSet::full(c), I))
    throw std::invalid_argument("to_labeling: I is not a maximal independent set");
  std::uint64_t half = c.N() / 2;
  Labeling sigma{c.n() - 1, std::vector<Label>(half, Label::Lambda)};
  for (std::uint64_t v = 0; v < half; ++v) {
    // Independence rules out both fiber vertices at once.
    if (I.contains(Vertex(v)))
      sigma.values[v] = Label::Zero;
    else if (I.contains(Vertex(v | half)))
      sigma.values[v] = Label::One;
  }
  return sigma;
}

VertexSet from_labeling(const Labeling& sigma) {
  if (sigma.base_n < 1)
    throw std::invalid_argument("from_labeling: base dimension must be >= 1");
  Cube base(sigma.base_n);
  if (!is_legal(base, sigma))
    throw std::invalid_argument("from_labeling: labeling is not legal");
  Cube amb(sigma.base_n + 1);
  std::uint64_t half = base.N();
  VertexSet I(amb);
  for (std::uint64_t v = 0; v < half; ++v) {
    Label l = sigma.values[v];
    if (l == Label::Zero)
      I.insert(Vertex(v));
    else if (l == Label::One)
      I.insert(Vertex(v | half));
  }
  if (!is_mis(amb, VertexSet::full(amb), I))
    throw std::logic_error("from_labeling: reconstruction is not a maximal independent set");
  return I;
}

std::vector<Labeling> enumerate_legal_labelings(const Cube& base) {
  if (base.n() > 4)
    throw cap_exceeded("enumerate_legal_labelings: 3^(2^n) scan needs n <= 4");
  std::uint64_t nv = base.N();
  Labeling sigma{base.n(), std::vector<Label>(nv, Label::Zero)};
  std::vector<Labeling> out;
  for (;;) {
    if (is_legal(base, sigma)) out.push_back(sigma);
    // Odometer with the last vertex fastest: output stays sorted by str().
    std::size_t i = nv;
    while (i > 0) {
      Label& d = sigma.values[i - 1];
      if (d != Label::Lambda) {
        d = Label(int(d) + 1);
        break;
      }
      d = Label::Zero;
      --i;
    }
    if (i == 0) break;
  }
  return out;
}

VertexSet closure(const Cube& c, const VertexSet& A) {
  VertexSet na = neighborhood(c, A);
  VertexSet out(c);
  for (Vertex x = 0; x < c.N(); ++x) {
    bool inside = true;
    for (int j = 1; j <= c.n() && inside; ++j) inside = na.contains(c.flip(x, j));
    if (inside) out.insert(x);
  }
  return out;
}

std::vector<VertexSet> k_components(const Cube& c, const VertexSet& A, int k) {
  if (k < 1) throw std::invalid_argument("k_components: k must be >= 1");
  std::vector<Vertex> vs = A.to_vector();
  std::vector<std::size_t> parent(vs.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (cube_distance(vs[i], vs[j]) <= k) parent[find(i)] = find(j);

  // vs is ascending, so first-seen root order sorts blocks by smallest member.
  std::vector<VertexSet> out;
  std::vector<std::size_t> slot(vs.size(), SIZE_MAX);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    std::size_t r = find(i);
    if (slot[r] == SIZE_MAX) {
      slot[r] = out.size();
      out.push_back(VertexSet(c));
    }
    out[slot[r]].insert(vs[i]);
  }
  return out;
}

OccupiedDecomposition decompose(const Cube& c, const VertexSet& I,
                                std::uint64_t small_threshold) {
  if (c.n() < 2)
    throw std::invalid_argument("decompose: ambient dimension must be >= 2");
  if (!is_mis(c, VertexSet::full(c), I))
    throw std::invalid_argument("decompose: I is not a maximal independent set");
  Cube base(c.n() - 1);
  std::uint64_t half = base.N();

  OccupiedDecomposition d;
  d.base_n = base.n();
  d.small_threshold = small_threshold;
  d.estar = VertexSet(base);
  for (Vertex v = 0; v < half; ++v)
    if (vertex_parity_even(v) && fiber_occupied(I, v, half)) d.estar.insert(v);

  d.a_union = VertexSet(base);
  for (VertexSet& blk : k_components(base, d.estar, 2)) {
    if (blk.count() < 2) continue;
    OccupiedComponent comp;
    comp.verts = std::move(blk);
    comp.nbrs = neighborhood(base, comp.verts);
    comp.closed = closure(base, comp.verts);
    comp.a = comp.closed.count();
    comp.g = comp.nbrs.count();
    comp.t = std::int64_t(comp.g) - std::int64_t(comp.a);
    comp.small = comp.g < small_threshold;
    d.a_union |= comp.verts;
    d.components.push_back(std::move(comp));
  }
  d.g_union = neighborhood(base, d.a_union);
  d.closed = closure(base, d.a_union);
  d.a = d.closed.count();
  d.g = d.g_union.count();
  d.t = std::int64_t(d.g) - std::int64_t(d.a);
  return d;
}

OccupiedDecomposition decompose(const Cube& c, const VertexSet& I) {
  std::uint64_t n = std::uint64_t(c.n());
  return decompose(c, I, n * n * n * n);
}

OccupancyReport check_occupancy_facts(const Cube& c, const VertexSet& I,
                                      const OccupiedDecomposition& D) {
  OccupiedDecomposition fresh = decompose(c, I, D.small_threshold);
  bool matches = fresh.base_n == D.base_n && fresh.estar == D.estar &&
                 fresh.components.size() == D.components.size();
  for (std::size_t i = 0; matches && i < D.components.size(); ++i)
    matches = fresh.components[i].verts == D.components[i].verts;
  if (!matches)
    throw std::invalid_argument("check_occupancy_facts: decomposition does not match I");

  Cube base(D.base_n);
  std::uint64_t half = base.N();
  OccupancyReport r;

  r.odd_outside_g_occupied = true;
  for (Vertex v = 0; v < half && r.odd_outside_g_occupied; ++v) {
    if (vertex_parity_even(v) || D.g_union.contains(v)) continue;
    if (!fiber_occupied(I, v, half)) {
      r.odd_outside_g_occupied = false;
      r.bad_odd_vertex = v;
    }
  }

  r.lifted_edges_guarded = true;
  r.lifted_matching_induced = true;
  VertexSet full = VertexSet::full(c);
  for (const OccupiedComponent& comp : D.components) {
    VertexSet ghat = lift(c, comp.nbrs);
    VertexSet guards = lift(c, comp.verts);
    guards &= I;
    ghat.for_each([&](Vertex u) {
      if (!r.lifted_edges_guarded) return;
      for (int j = 1; j <= c.n(); ++j) {
        Vertex w = c.flip(u, j);
        if (w < u || !ghat.contains(w)) continue;
        bool ok = false;
        for (int jj = 1; jj <= c.n() && !ok; ++jj) {
          Vertex z = c.flip(u, jj);
          ok = z != w && guards.contains(z);
        }
        for (int jj = 1; jj <= c.n() && !ok; ++jj) {
          Vertex z = c.flip(w, jj);
          ok = z != u && guards.contains(z);
        }
        if (!ok) {
          r.lifted_edges_guarded = false;
          r.bad_edge = Edge::from_endpoints(u, w);
          return;
        }
      }
    });

    std::vector<Edge> fiber_edges;
    comp.nbrs.for_each([&](Vertex v) { fiber_edges.emplace_back(v, c.n()); });
    if (!is_induced_matching(c, full, make_matching(c, std::move(fiber_edges))))
      r.lifted_matching_induced = false;
  }
  return r;
}

ContainerReport check_container(const Cube& c, const VertexSet& A,
                                const ContainerWitness& W, std::int64_t t) {
  int n = c.n();
  if (n < 2)
    throw std::invalid_argument("check_container: dimension must be >= 2");
  VertexSet even = VertexSet::even_class(c);
  VertexSet odd = VertexSet::odd_class(c);
  if (!A.any()) throw std::invalid_argument("check_container: A is empty");
  if (!A.subset_of(even))
    throw std::invalid_argument("check_container: A is not inside the even class");
  if (!(closure(c, A) == A))
    throw std::invalid_argument("check_container: A is not closed");
  if (k_components(c, A, 2).size() != 1)
    throw std::invalid_argument("check_container: A is not 2-linked");
  if (!W.S.subset_of(even))
    throw std::invalid_argument("check_container: S is not inside the even class");
  if (!W.F.subset_of(odd))
    throw std::invalid_argument("check_container: F is not inside the odd class");

  ContainerReport r;
  r.degree_threshold = int(container_degree_threshold(n));
  r.covers = A.subset_of(W.S) && W.F.subset_of(neighborhood(c, A));

  r.min_f_degree = -1;
  W.S.for_each([&](Vertex u) {
    std::int64_t d = degree_in(c, W.F, u);
    if (r.min_f_degree < 0 || d < r.min_f_degree) r.min_f_degree = d;
  });
  r.degrees = r.min_f_degree < 0 || r.min_f_degree >= r.degree_threshold;

  std::int64_t diff = std::int64_t(W.S.count()) - std::int64_t(W.F.count());
  Rational rhs = W.c3 * Rational(BigInt(t));
  if (diff == 0) {
    r.size_bound = rhs >= 0;
  } else {
    // (|S|-|F|) * sqrt(n) * log2(n) vs c3 * t.  The left side is exact when
    // sqrt(n)*log2(n) is rational (n a power of 4), so ties still resolve.
    bool decided = false;
    for (mpfr_prec_t prec : {128, 512, 2048, 8192, 16384}) {
      Interval lhs = Interval::sqrt_of(unsigned(n), prec) *
                     Interval::log2_of(unsigned(n), prec);
      lhs.scale_si(long(diff));
      Interval bound = Interval::exact(rhs, prec);
      if (lhs.definitely_le(bound)) {
        r.size_bound = true;
        decided = true;
        break;
      }
      if (bound.definitely_lt(lhs)) {
        r.size_bound = false;
        decided = true;
        break;
      }
    }
    if (!decided)
      throw std::runtime_error("check_container: size bound comparison undecided");
  }
  return r;
}

TightSlackPartition tight_slack_classify(
    const OccupiedDecomposition& D,
    const std::map<std::size_t, ContainerWitness>& witnesses,
    const Rational& eps) {
  TightSlackPartition out;
  for (std::size_t i = 0; i < D.components.size(); ++i) {
    const OccupiedComponent& comp = D.components[i];
    if (comp.small) continue;
    auto it = witnesses.find(i);
    if (it == witnesses.end())
      throw std::invalid_argument("tight_slack_classify: no witness for large component " +
                                  std::to_string(i));
    Rational gap(BigInt(comp.g) - BigInt(it->second.F.count()));
    if (gap <= eps * Rational(BigInt(comp.t)))
      out.tight.push_back(i);
    else
      out.slack.push_back(i);
  }
  return out;
}

bool meets_every_edge(const Cube& c, const VertexSet& I, const Matching& m) {
  for (const Edge& e : m.edges) {
    c.check_vertex(e.hi());
    if (!I.contains(e.lo) && !I.contains(e.hi())) return false;
  }
  return true;
}

}  // namespace miscube
