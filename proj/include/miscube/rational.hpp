#pragma once
// Exact arithmetic aliases and small helpers. All counts that can leave the
// 64-bit range are BigInt; every asserted inequality that involves a ratio is
// evaluated in Rational, never in floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace miscube {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt pow2(unsigned e) { return BigInt(1) << e; }

// C(n, k) with C(n, k) = 0 outside 0 <= k <= n.
inline BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r is C(n-k+i, i) after this step
  }
  return r;
}

inline BigInt int_pow(BigInt base, unsigned e) {
  BigInt r = 1;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

inline Rational rat_pow(const Rational& base, unsigned e) {
  Rational r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

// "p/q" in lowest terms; integers render without the "/q" part.
inline std::string rational_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace miscube
