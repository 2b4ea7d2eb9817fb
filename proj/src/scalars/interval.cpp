#include "coxom/scalars/interval.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

#include "coxom/error.hpp"

namespace coxom {
namespace {

thread_local mpfr_prec_t g_working_precision = 64;

Rational mpfr_to_rational(mpfr_srcptr x) {
  if (mpfr_zero_p(x)) return Rational(0);
  if (!mpfr_number_p(x)) throw Error("Interval: non-finite endpoint");
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), x);
  return Rational(q);
}

void set_from_rational(mpfr_ptr dst, const Rational& q, mpfr_rnd_t rnd) {
  if (q.is_small() && q.is_integer()) {
    mpz_class z = q.numerator();
    mpfr_set_z(dst, z.get_mpz_t(), rnd);
    return;
  }
  mpq_class v = q.to_mpq();
  mpfr_set_q(dst, v.get_mpq_t(), rnd);
}

}  // namespace

Interval::Interval(mpfr_prec_t bits) {
  mpfr_init2(lo_, bits);
  mpfr_init2(hi_, bits);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval() : Interval(g_working_precision) {}

Interval::Interval(const Rational& q) : Interval(g_working_precision) {
  set_from_rational(lo_, q, MPFR_RNDD);
  set_from_rational(hi_, q, MPFR_RNDU);
}

Interval::Interval(const Rational& lo, const Rational& hi) : Interval(g_working_precision) {
  if (lo > hi) throw Error("Interval: lower endpoint exceeds upper endpoint");
  set_from_rational(lo_, lo, MPFR_RNDD);
  set_from_rational(hi_, hi, MPFR_RNDU);
}

Interval::Interval(const Interval& other) : Interval(other.precision()) {
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : Interval(other.precision()) {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(const Interval& other) {
  if (this != &other) {
    mpfr_set_prec(lo_, other.precision());
    mpfr_set_prec(hi_, other.precision());
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

mpfr_prec_t Interval::working_precision() { return g_working_precision; }

void Interval::set_working_precision(mpfr_prec_t bits) {
  if (bits < MPFR_PREC_MIN || bits > MPFR_PREC_MAX) throw Error("Interval: precision out of range");
  g_working_precision = bits;
}

Interval Interval::pi() {
  Interval r(g_working_precision);
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::cos_pi_over(int m) {
  if (m < 1) throw Error("cos_pi_over: m must be positive");
  if (m == 1) return Interval(-1);
  if (m == 2) return Interval(0);
  if (m == 3) return Interval(Rational(1, 2));
  Interval p = pi();
  Interval r(g_working_precision);
  mpfr_t x;
  mpfr_init2(x, g_working_precision + 8);
  // cos is decreasing on [0, pi/2]: lower end from the upper pi bound.
  mpfr_div_si(x, p.hi_, m, MPFR_RNDU);
  mpfr_cos(r.lo_, x, MPFR_RNDD);
  mpfr_div_si(x, p.lo_, m, MPFR_RNDD);
  mpfr_cos(r.hi_, x, MPFR_RNDU);
  mpfr_clear(x);
  return r;
}

Rational Interval::lo_rational() const { return mpfr_to_rational(lo_); }
Rational Interval::hi_rational() const { return mpfr_to_rational(hi_); }

double Interval::mid() const {
  return 0.5 * (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN));
}

double Interval::width() const {
  mpfr_t w;
  mpfr_init2(w, precision());
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  double d = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  return d;
}

int Interval::sign() const {
  if (mpfr_sgn(lo_) > 0) return 1;
  if (mpfr_sgn(hi_) < 0) return -1;
  if (is_exact_zero()) return 0;
  throw UncertainSign("Interval: sign not certified for " + str());
}

int Interval::sign_or_zero() const {
  if (mpfr_sgn(lo_) > 0) return 1;
  if (mpfr_sgn(hi_) < 0) return -1;
  return 0;
}

Interval Interval::abs() const {
  if (mpfr_sgn(lo_) >= 0) return *this;
  if (mpfr_sgn(hi_) <= 0) return -*this;
  Interval r(precision());
  mpfr_set_zero(r.lo_, 1);
  if (mpfr_cmpabs(lo_, hi_) > 0) {
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  } else {
    mpfr_set(r.hi_, hi_, MPFR_RNDU);
  }
  return r;
}

Interval Interval::sqrt() const {
  if (mpfr_sgn(hi_) < 0) throw Error("Interval::sqrt: negative argument " + str());
  Interval r(precision());
  if (mpfr_sgn(lo_) <= 0) {
    mpfr_set_zero(r.lo_, 1);
  } else {
    mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
  }
  mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::pow(const Rational& t) const {
  if (mpfr_sgn(lo_) <= 0) throw Error("Interval::pow: base must be positive, got " + str());
  if (t.is_zero()) return Interval(1);
  if (t.is_one()) return *this;
  mpfr_prec_t p = precision();
  mpfr_t tl;
  mpfr_t th;
  mpfr_init2(tl, p);
  mpfr_init2(th, p);
  set_from_rational(tl, t, MPFR_RNDD);
  set_from_rational(th, t, MPFR_RNDU);
  // x^t is monotone in x for fixed t and in t for fixed x, so the extremes
  // sit at the corners of the box.
  Interval r(p);
  mpfr_t c;
  mpfr_init2(c, p);
  bool first = true;
  for (mpfr_srcptr x : {static_cast<mpfr_srcptr>(lo_), static_cast<mpfr_srcptr>(hi_)}) {
    for (mpfr_srcptr e : {static_cast<mpfr_srcptr>(tl), static_cast<mpfr_srcptr>(th)}) {
      mpfr_pow(c, x, e, MPFR_RNDD);
      if (first || mpfr_less_p(c, r.lo_)) mpfr_set(r.lo_, c, MPFR_RNDD);
      mpfr_pow(c, x, e, MPFR_RNDU);
      if (first || mpfr_greater_p(c, r.hi_)) mpfr_set(r.hi_, c, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(c);
  mpfr_clear(tl);
  mpfr_clear(th);
  return r;
}

Interval Interval::hull(const Interval& other) const {
  Interval r(std::max(precision(), other.precision()));
  mpfr_min(r.lo_, lo_, other.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, hi_, other.hi_, MPFR_RNDU);
  return r;
}

std::string Interval::str() const {
  char buf[128];
  mpfr_snprintf(buf, sizeof buf, "[%.17RDg, %.17RUg]", lo_, hi_);
  return buf;
}

Interval Interval::operator-() const {
  Interval r(precision());
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(std::max(a.precision(), b.precision()));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(std::max(a.precision(), b.precision()));
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  mpfr_prec_t p = std::max(a.precision(), b.precision());
  Interval r(p);
  mpfr_t c;
  mpfr_init2(c, p);
  bool first = true;
  for (mpfr_srcptr x : {a.lo_, a.hi_}) {
    for (mpfr_srcptr y : {b.lo_, b.hi_}) {
      mpfr_mul(c, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(c, r.lo_)) mpfr_set(r.lo_, c, MPFR_RNDD);
      mpfr_mul(c, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(c, r.hi_)) mpfr_set(r.hi_, c, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(c);
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw UncertainSign("Interval: divisor " + b.str() + " contains zero");
  mpfr_prec_t p = std::max(a.precision(), b.precision());
  Interval inv(p);
  mpfr_ui_div(inv.lo_, 1, b.hi_, MPFR_RNDD);
  mpfr_ui_div(inv.hi_, 1, b.lo_, MPFR_RNDU);
  return a * inv;
}

Interval& Interval::operator+=(const Interval& rhs) { return *this = *this + rhs; }
Interval& Interval::operator-=(const Interval& rhs) { return *this = *this - rhs; }
Interval& Interval::operator*=(const Interval& rhs) { return *this = *this * rhs; }
Interval& Interval::operator/=(const Interval& rhs) { return *this = *this / rhs; }

bool operator==(const Interval& a, const Interval& b) {
  return mpfr_equal_p(a.lo_, b.lo_) && mpfr_equal_p(a.hi_, b.hi_);
}

PrecisionScope::PrecisionScope(mpfr_prec_t bits) : saved_(Interval::working_precision()) {
  Interval::set_working_precision(bits);
}

PrecisionScope::~PrecisionScope() { Interval::set_working_precision(saved_); }

}  // namespace coxom
