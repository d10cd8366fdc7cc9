#include "miscube/interval.hpp"

#include <gmp.h>

#include <array>
#include <stdexcept>
#include <string>

namespace miscube {

namespace {

constexpr std::array<mpfr_prec_t, 8> kLadder = {128, 256, 512, 1024, 2048, 4096, 8192, 16384};

// Bridge an exact cpp_rational into mpfr with one directed rounding.
void set_from_rational(mpfr_ptr out, const Rational& q, mpfr_rnd_t rnd) {
  mpq_t tmp;
  mpq_init(tmp);
  const std::string s = rational_string(q);
  if (mpq_set_str(tmp, s.c_str(), 10) != 0) {
    mpq_clear(tmp);
    throw std::runtime_error("set_from_rational: unparsable rational");
  }
  mpq_canonicalize(tmp);
  mpfr_set_q(out, tmp, rnd);
  mpq_clear(tmp);
}

}  // namespace

Interval::Interval(mpfr_prec_t prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& o) {
  mpfr_init2(lo_, mpfr_get_prec(o.lo_));
  mpfr_init2(hi_, mpfr_get_prec(o.hi_));
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept {
  mpfr_init2(lo_, mpfr_get_prec(o.lo_));
  mpfr_init2(hi_, mpfr_get_prec(o.hi_));
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(const Interval& o) {
  if (this != &o) {
    mpfr_set_prec(lo_, mpfr_get_prec(o.lo_));
    mpfr_set_prec(hi_, mpfr_get_prec(o.hi_));
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept {
  if (this != &o) {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
  }
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::exact(const Rational& q, mpfr_prec_t prec) {
  Interval r(prec);
  set_from_rational(r.lo_, q, MPFR_RNDD);
  set_from_rational(r.hi_, q, MPFR_RNDU);
  return r;
}

Interval Interval::from_ui(unsigned long v, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_ui(r.lo_, v, MPFR_RNDD);
  mpfr_set_ui(r.hi_, v, MPFR_RNDU);
  return r;
}

Interval Interval::pow_beta(unsigned long m, mpfr_prec_t prec) {
  if (m == 0) throw std::invalid_argument("pow_beta: m must be >= 1");
  Interval r(prec);
  if (m == 1) {
    mpfr_set_ui(r.lo_, 1, MPFR_RNDD);
    mpfr_set_ui(r.hi_, 1, MPFR_RNDU);
    return r;
  }
  // m^beta = exp2(beta * log2 m), beta = log2 3 - 1. All factors positive.
  mpfr_t beta, lm, prod;
  mpfr_inits2(prec + 16, beta, lm, prod, static_cast<mpfr_ptr>(nullptr));

  mpfr_set_ui(beta, 3, MPFR_RNDD);
  mpfr_log2(beta, beta, MPFR_RNDD);
  mpfr_sub_ui(beta, beta, 1, MPFR_RNDD);
  mpfr_set_ui(lm, m, MPFR_RNDD);
  mpfr_log2(lm, lm, MPFR_RNDD);
  mpfr_mul(prod, beta, lm, MPFR_RNDD);
  mpfr_exp2(r.lo_, prod, MPFR_RNDD);

  mpfr_set_ui(beta, 3, MPFR_RNDU);
  mpfr_log2(beta, beta, MPFR_RNDU);
  mpfr_sub_ui(beta, beta, 1, MPFR_RNDU);
  mpfr_set_ui(lm, m, MPFR_RNDU);
  mpfr_log2(lm, lm, MPFR_RNDU);
  mpfr_mul(prod, beta, lm, MPFR_RNDU);
  mpfr_exp2(r.hi_, prod, MPFR_RNDU);

  mpfr_clears(beta, lm, prod, static_cast<mpfr_ptr>(nullptr));
  return r;
}

Interval Interval::sqrt_of(unsigned long v, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_sqrt_ui(r.lo_, v, MPFR_RNDD);
  mpfr_sqrt_ui(r.hi_, v, MPFR_RNDU);
  return r;
}

Interval Interval::log2_of(unsigned long v, mpfr_prec_t prec) {
  if (v == 0) throw std::invalid_argument("log2_of: v must be >= 1");
  Interval r(prec);
  mpfr_set_ui(r.lo_, v, MPFR_RNDD);
  mpfr_log2(r.lo_, r.lo_, MPFR_RNDD);
  mpfr_set_ui(r.hi_, v, MPFR_RNDU);
  mpfr_log2(r.hi_, r.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::exp1(mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_t one;
  mpfr_init2(one, prec);
  mpfr_set_ui(one, 1, MPFR_RNDN);
  mpfr_exp(r.lo_, one, MPFR_RNDD);
  mpfr_exp(r.hi_, one, MPFR_RNDU);
  mpfr_clear(one);
  return r;
}

Interval& Interval::operator+=(const Interval& o) {
  mpfr_add(lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_add(hi_, hi_, o.hi_, MPFR_RNDU);
  return *this;
}

Interval& Interval::operator-=(const Interval& o) {
  mpfr_sub(lo_, lo_, o.hi_, MPFR_RNDD);
  mpfr_sub(hi_, hi_, o.lo_, MPFR_RNDU);
  return *this;
}

Interval Interval::operator+(const Interval& o) const {
  Interval r(*this);
  r += o;
  return r;
}

Interval Interval::operator-(const Interval& o) const {
  Interval r(*this);
  r -= o;
  return r;
}

Interval Interval::operator*(const Interval& o) const {
  const mpfr_prec_t p = std::max(prec(), o.prec());
  Interval r(p);
  mpfr_t t;
  mpfr_init2(t, p);
  // lo = min of the four products rounded down, hi = max rounded up.
  mpfr_mul(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_mul(t, lo_, o.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_mul(t, hi_, o.lo_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_mul(t, hi_, o.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);

  mpfr_mul(r.hi_, lo_, o.lo_, MPFR_RNDU);
  mpfr_mul(t, lo_, o.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_mul(t, hi_, o.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_mul(t, hi_, o.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

Interval& Interval::scale(const Rational& q) {
  mpq_t mq;
  mpq_init(mq);
  const std::string s = rational_string(q);
  mpq_set_str(mq, s.c_str(), 10);
  mpq_canonicalize(mq);
  mpfr_t nlo, nhi;
  mpfr_init2(nlo, prec());
  mpfr_init2(nhi, prec());
  if (q >= 0) {
    mpfr_mul_q(nlo, lo_, mq, MPFR_RNDD);
    mpfr_mul_q(nhi, hi_, mq, MPFR_RNDU);
  } else {
    mpfr_mul_q(nlo, hi_, mq, MPFR_RNDD);
    mpfr_mul_q(nhi, lo_, mq, MPFR_RNDU);
  }
  mpfr_swap(lo_, nlo);
  mpfr_swap(hi_, nhi);
  mpfr_clears(nlo, nhi, static_cast<mpfr_ptr>(nullptr));
  mpq_clear(mq);
  return *this;
}

Interval& Interval::scale_si(long v) {
  mpfr_t nlo, nhi;
  mpfr_init2(nlo, prec());
  mpfr_init2(nhi, prec());
  if (v >= 0) {
    mpfr_mul_si(nlo, lo_, v, MPFR_RNDD);
    mpfr_mul_si(nhi, hi_, v, MPFR_RNDU);
  } else {
    mpfr_mul_si(nlo, hi_, v, MPFR_RNDD);
    mpfr_mul_si(nhi, lo_, v, MPFR_RNDU);
  }
  mpfr_swap(lo_, nlo);
  mpfr_swap(hi_, nhi);
  mpfr_clears(nlo, nhi, static_cast<mpfr_ptr>(nullptr));
  return *this;
}

Interval Interval::div_pos(const Interval& o) const {
  if (mpfr_sgn(o.lo_) <= 0) throw std::invalid_argument("div_pos: divisor must be positive");
  const mpfr_prec_t p = std::max(prec(), o.prec());
  Interval r(p);
  if (mpfr_sgn(lo_) >= 0) {
    mpfr_div(r.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_div(r.hi_, hi_, o.lo_, MPFR_RNDU);
  } else if (mpfr_sgn(hi_) <= 0) {
    mpfr_div(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_div(r.hi_, hi_, o.hi_, MPFR_RNDU);
  } else {
    mpfr_div(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_div(r.hi_, hi_, o.lo_, MPFR_RNDU);
  }
  return r;
}

Interval Interval::pow_ui(unsigned long k) const {
  if (mpfr_sgn(lo_) < 0) throw std::invalid_argument("pow_ui: base interval must be >= 0");
  Interval r(prec());
  mpfr_pow_ui(r.lo_, lo_, k, MPFR_RNDD);
  mpfr_pow_ui(r.hi_, hi_, k, MPFR_RNDU);
  return r;
}

int Interval::sign_or_undecided() const {
  if (mpfr_sgn(lo_) > 0) return 1;
  if (mpfr_sgn(hi_) < 0) return -1;
  if (mpfr_zero_p(lo_) && mpfr_zero_p(hi_)) return 0;
  return 2;
}

bool Interval::definitely_lt(const Interval& o) const { return mpfr_cmp(hi_, o.lo_) < 0; }

bool Interval::definitely_le(const Interval& o) const { return mpfr_cmp(hi_, o.lo_) <= 0; }

std::optional<long> Interval::ceil_if_certain() const {
  mpfr_t cl, ch;
  mpfr_init2(cl, prec());
  mpfr_init2(ch, prec());
  mpfr_ceil(cl, lo_);
  mpfr_ceil(ch, hi_);
  std::optional<long> out;
  if (mpfr_cmp(cl, ch) == 0 && mpfr_fits_slong_p(cl, MPFR_RNDN)) {
    out = mpfr_get_si(cl, MPFR_RNDN);
  }
  mpfr_clears(cl, ch, static_cast<mpfr_ptr>(nullptr));
  return out;
}

void BetaCombo::add_pow_beta(const BigInt& d, const Rational& coeff) {
  if (d <= 0) throw std::invalid_argument("add_pow_beta: d must be >= 1");
  if (coeff == 0) return;
  BigInt m = d;
  unsigned a = 0;
  while ((m & 1) == 0) {
    m >>= 1;
    ++a;
  }
  const Rational factor = coeff * rat_pow(Rational(3, 2), a);
  if (m == 1) {
    constant_ += factor;
    return;
  }
  const unsigned long key = m.convert_to<unsigned long>();
  auto it = coeffs_.find(key);
  if (it == coeffs_.end()) {
    coeffs_.emplace(key, factor);
  } else {
    it->second += factor;
    if (it->second == 0) coeffs_.erase(it);
  }
}

bool BetaCombo::rational_only() const { return coeffs_.empty(); }

Interval BetaCombo::evaluate(mpfr_prec_t prec) const {
  Interval acc = Interval::exact(constant_, prec);
  for (const auto& [m, q] : coeffs_) {
    Interval t = Interval::pow_beta(m, prec);
    t.scale(q);
    acc += t;
  }
  return acc;
}

int BetaCombo::sign() const {
  if (coeffs_.empty()) {
    if (constant_ > 0) return 1;
    if (constant_ < 0) return -1;
    return 0;
  }
  for (mpfr_prec_t p : kLadder) {
    const int s = evaluate(p).sign_or_undecided();
    if (s != 2) return s;
  }
  throw std::runtime_error("BetaCombo::sign: undecided at 16384 bits");
}

long support_stop_threshold(int n) {
  if (n < 1) throw std::invalid_argument("support_stop_threshold: n must be >= 1");
  if ((n & (n - 1)) == 0) {
    int k = 0;
    while ((1 << k) < n) ++k;
    // log2 n = k exactly; value = k * 2^n / (2n), an exact rational.
    const Rational v = Rational(BigInt(k) * pow2(static_cast<unsigned>(n)), 2 * n);
    const BigInt num = numerator(v), den = denominator(v);
    BigInt c = num / den;
    if (c * den < num) c += 1;
    return c.convert_to<long>();
  }
  // Irrational value: the interval eventually excludes every integer.
  for (mpfr_prec_t p : kLadder) {
    Interval v = Interval::log2_of(static_cast<unsigned long>(n), p);
    v.scale(Rational(pow2(static_cast<unsigned>(n)), 2 * n));
    if (auto c = v.ceil_if_certain()) return *c;
  }
  throw std::runtime_error("support_stop_threshold: undecided at 16384 bits");
}

long container_degree_threshold(int n) {
  if (n < 2) throw std::invalid_argument("container_degree_threshold: n must be >= 2");
  // n = 4^k: sqrt n = 2^k and log2 n = 2k are both exact.
  {
    int k = 0, v = 1;
    while (v < n) {
      v *= 4;
      ++k;
    }
    if (v == n) {
      const Rational x = Rational(n) - Rational(BigInt(1) << k, 2 * k);
      const BigInt num = numerator(x), den = denominator(x);
      BigInt c = num / den;
      if (c * den < num) c += 1;
      return c.convert_to<long>();
    }
  }
  for (mpfr_prec_t p : kLadder) {
    const Interval psi = Interval::sqrt_of(static_cast<unsigned long>(n), p)
                             .div_pos(Interval::log2_of(static_cast<unsigned long>(n), p));
    Interval v = Interval::from_ui(static_cast<unsigned long>(n), p);
    v -= psi;
    if (auto c = v.ceil_if_certain()) return *c;
  }
  throw std::runtime_error("container_degree_threshold: undecided at 16384 bits");
}

}  // namespace miscube
