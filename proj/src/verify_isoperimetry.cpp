#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "miscube/combinatorics.hpp"
#include "miscube/cube.hpp"
#include "miscube/mis.hpp"
#include "miscube/rational.hpp"
#include "miscube/rng.hpp"
#include "miscube/verify.hpp"

namespace miscube {
namespace {

std::string hist_str(const std::map<int, std::uint64_t>& h) {
  std::string s;
  for (const auto& [sign, cnt] : h) {
    if (!s.empty()) s += " ";
    s += (sign > 0 ? "+" : "") + std::to_string(sign) + ":" + std::to_string(cnt);
  }
  return s;
}

// Interval route first, exact route on the undecided leftovers.
int decided_sign(const Cube& c, const MaskGraph& g, std::uint64_t A, const BetaBasis& basis,
                 std::uint64_t& escalated) {
  int s = beta_margin_sign(c, g, A, basis);
  if (s == 2) {
    ++escalated;
    s = beta_margin_sign_exact(c, g, A);
  }
  return s;
}

ClaimResult functional_exhaustive() {
  std::string detail;
  for (int n = 3; n <= 4; ++n) {
    Cube c(n);
    const MaskGraph g = cube_mask_graph(c);
    const BetaBasis basis(n, 128);
    std::map<int, std::uint64_t> hist;
    std::uint64_t escalated = 0;
    const std::uint64_t total = std::uint64_t{1} << c.N();
    for (std::uint64_t A = 0; A < total; ++A)
      ++hist[decided_sign(c, g, A, basis, escalated)];
    const std::map<int, std::uint64_t> expect =
        n == 3 ? std::map<int, std::uint64_t>{{0, 20}, {1, 236}}
               : std::map<int, std::uint64_t>{{0, 34}, {1, 65502}};
    if (hist != expect)
      return {"isoperimetry.functional-exhaustive", false,
              "n=" + std::to_string(n) + " hist={" + hist_str(hist) + "}"};
    detail += (n > 3 ? " " : "") + std::to_string(n) + ":{" + hist_str(hist) + "}";
  }
  return {"isoperimetry.functional-exhaustive", true, detail};
}

ClaimResult functional_random(const VerifyOptions& opts) {
  std::string detail;
  for (int n = 5; n <= 6; ++n) {
    Cube c(n);
    const MaskGraph g = cube_mask_graph(c);
    const BetaBasis basis(n, 128);
    const std::uint64_t mask =
        c.N() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << c.N()) - 1;
    auto rng = SplitMix64::substream(opts.seed, std::uint64_t(600 + n));
    std::map<int, std::uint64_t> hist;
    std::uint64_t escalated = 0;
    for (int rep = 0; rep < 1000000; ++rep) {
      const int s = decided_sign(c, g, rng.next() & mask, basis, escalated);
      ++hist[s];
      if (s < 0)
        return {"isoperimetry.functional-random", false,
                "n=" + std::to_string(n) + " rep=" + std::to_string(rep) + " negative margin"};
    }
    detail += (n > 5 ? " " : "") + std::to_string(n) + ":{" + hist_str(hist) +
              "} escalated=" + std::to_string(escalated);
  }
  return {"isoperimetry.functional-random", true, detail};
}

ClaimResult expansion_positive(const VerifyOptions& opts) {
  const bool sabotage = opts.inject_fault == "isoperimetry.expansion-positive";
  const Rational cut = sabotage ? Rational(1, 2) : Rational(0);
  std::string detail;
  for (int n = 3; n <= 5; ++n) {
    Cube c(n);
    const std::vector<Vertex> evens = VertexSet::even_class(c).to_vector();
    const std::uint64_t subsets = std::uint64_t{1} << evens.size();
    std::uint64_t swept = 0;
    Rational min_ratio;
    bool first = true;
    for (std::uint64_t s = 1; s < subsets; ++s) {
      if (std::uint64_t(__builtin_popcountll(s)) > c.N() / 4) continue;
      VertexSet A(c);
      for (std::uint64_t w = s; w; w &= w - 1)
        A.insert(evens[std::size_t(__builtin_ctzll(w))]);
      const Rational r = vertex_expansion(c, A);
      ++swept;
      if (first || r < min_ratio) {
        min_ratio = r;
        first = false;
      }
      if (!(r > cut))
        return {"isoperimetry.expansion-positive", false,
                "n=" + std::to_string(n) + " A=" + A.to_hex() + " ratio=" +
                    rational_string(r)};
    }
    detail += (n > 3 ? " " : "") + std::to_string(n) + ":min=" + rational_string(min_ratio) +
              "/" + std::to_string(swept);
  }
  return {"isoperimetry.expansion-positive", true, detail};
}

ClaimResult partition_random(const VerifyOptions& opts) {
  std::string detail;
  for (int n = 4; n <= 5; ++n) {
    Cube c(n);
    const MaskGraph g = cube_mask_graph(c);
    const std::uint64_t full = (std::uint64_t{1} << c.N()) - 1;
    auto rng = SplitMix64::substream(opts.seed, std::uint64_t(700 + n));
    std::map<int, std::uint64_t> hist;
    for (int rep = 0; rep < 50000; ++rep) {
      const std::uint64_t R = rng.next() & full;
      const std::uint64_t U = rng.next() & full & ~R;
      const std::uint64_t S = full & ~R & ~U;
      const int s = partition_margin_sign_exact(c, g, R, S, U);
      ++hist[s];
      if (s < 0)
        return {"isoperimetry.partition-random", false,
                "n=" + std::to_string(n) + " rep=" + std::to_string(rep) + " negative margin"};
    }
    detail += (n > 4 ? " " : "") + std::to_string(n) + ":{" + hist_str(hist) + "}";
  }
  return {"isoperimetry.partition-random", true, detail};
}

// The exponent-1/2 variant is a deliberate control: it must keep failing, or
// the margin machinery has gone soft.
ClaimResult sqrt_probe() {
  Cube c(3);
  const MaskGraph g = cube_mask_graph(c);
  std::map<int, std::uint64_t> hist;
  for (std::uint64_t A = 0; A < 256; ++A) ++hist[sqrt_margin_sign(c, g, A)];
  const std::map<int, std::uint64_t> expect{{-1, 20}, {0, 8}, {1, 228}};
  if (hist != expect)
    return {"isoperimetry.sqrt-probe-still-fails", false, "hist={" + hist_str(hist) + "}"};
  return {"isoperimetry.sqrt-probe-still-fails", true, "3:{" + hist_str(hist) + "}"};
}

}  // namespace

SuiteReport verify_isoperimetry(const VerifyOptions& opts) {
  SuiteReport r;
  r.suite = "isoperimetry";
  r.claims.push_back(functional_exhaustive());
  r.claims.push_back(functional_random(opts));
  r.claims.push_back(expansion_positive(opts));
  r.claims.push_back(partition_random(opts));
  r.claims.push_back(sqrt_probe());
  return r;
}

}  // namespace miscube
