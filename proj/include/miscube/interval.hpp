#pragma once
// Certified real arithmetic for the handful of irrational comparisons in the
// verification suites (thresholds with log2/sqrt, the exponent beta =
// log2(3/2), the constant e). Every Interval [lo, hi] encloses the exact
// value; operations round lo toward -inf and hi toward +inf, so a comparison
// that the interval decides is a proof, and an undecided comparison escalates
// precision instead of guessing.

#include <mpfr.h>

#include <map>
#include <optional>

#include "miscube/rational.hpp"

namespace miscube {

class Interval {
 public:
  explicit Interval(mpfr_prec_t prec);
  Interval(const Interval& o);
  Interval(Interval&& o) noexcept;
  Interval& operator=(const Interval& o);
  Interval& operator=(Interval&& o) noexcept;
  ~Interval();

  mpfr_prec_t prec() const { return mpfr_get_prec(lo_); }

  static Interval exact(const Rational& q, mpfr_prec_t prec);
  static Interval from_ui(unsigned long v, mpfr_prec_t prec);
  // m^beta with beta = log2(3/2), for m >= 1.
  static Interval pow_beta(unsigned long m, mpfr_prec_t prec);
  static Interval sqrt_of(unsigned long v, mpfr_prec_t prec);
  static Interval log2_of(unsigned long v, mpfr_prec_t prec);  // v >= 1
  static Interval exp1(mpfr_prec_t prec);                      // Euler's e

  Interval& operator+=(const Interval& o);
  Interval& operator-=(const Interval& o);
  Interval operator+(const Interval& o) const;
  Interval operator-(const Interval& o) const;
  Interval operator*(const Interval& o) const;

  Interval& scale(const Rational& q);
  Interval& scale_si(long v);
  // Requires lo >= 0.
  Interval pow_ui(unsigned long k) const;
  // *this / o for o strictly positive.
  Interval div_pos(const Interval& o) const;

  // -1 / 0 / +1 when the interval pins the sign down, 2 when it straddles 0.
  int sign_or_undecided() const;

  // True when every point of *this relates to every point of o.
  bool definitely_lt(const Interval& o) const;
  bool definitely_le(const Interval& o) const;

  // Smallest integer >= the enclosed value, when the interval determines it.
  std::optional<long> ceil_if_certain() const;

  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }

 private:
  mpfr_t lo_;
  mpfr_t hi_;
};

// constant + sum_m coeffs[m] * m^beta with beta = log2(3/2), every key m odd
// and >= 3. Powers of two inside a degree factor out exactly:
// (2^a * m)^beta = (3/2)^a * m^beta, so combinations whose degrees are all
// powers of two collapse to a pure rational and get an exact sign.
class BetaCombo {
 public:
  void add_pow_beta(const BigInt& d, const Rational& coeff);  // d >= 1
  void add_rational(const Rational& q) { constant_ += q; }

  bool rational_only() const;
  const Rational& constant() const { return constant_; }
  const std::map<unsigned long, Rational>& coeffs() const { return coeffs_; }

  Interval evaluate(mpfr_prec_t prec) const;

  // Certified sign: exact when rational_only(), otherwise interval evaluation
  // at escalating precision. Throws if 16384 bits cannot separate the value
  // from zero (a rational relation among m^beta values; not expected to
  // exist).
  int sign() const;

 private:
  std::map<unsigned long, Rational> coeffs_;
  Rational constant_ = 0;
};

// ceil((log2 n / (2n)) * 2^n) for n >= 1; exact when n is a power of two,
// certified interval ceiling otherwise (the value is then irrational).
long support_stop_threshold(int n);

// ceil(n - sqrt(n)/log2 n) for n >= 2; exact when n is a power of four.
long container_degree_threshold(int n);

}  // namespace miscube
