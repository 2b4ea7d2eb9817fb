#pragma once

#include <mpfr.h>

#include <concepts>
#include <string>

#include "coxom/scalars/rational.hpp"

namespace coxom {

// Closed interval [lo, hi] with MPFR endpoints and outward rounding.
//
// Fresh intervals take the thread's working precision; arithmetic results
// use the larger precision of the operands. Callers that need a certified
// sign rerun the computation under a PrecisionScope with more bits.
class Interval {
 public:
  Interval();
  Interval(const Rational& q);  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  Interval(I value) : Interval(Rational(value)) {}  // NOLINT(google-explicit-constructor)
  Interval(const Rational& lo, const Rational& hi);
  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(const Interval& other);
  Interval& operator=(Interval&& other) noexcept;
  ~Interval();

  static mpfr_prec_t working_precision();
  static void set_working_precision(mpfr_prec_t bits);

  // cos(pi/m), m >= 1.
  static Interval cos_pi_over(int m);
  static Interval pi();

  mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }
  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }
  Rational lo_rational() const;
  Rational hi_rational() const;
  double mid() const;
  double width() const;

  bool is_exact_zero() const { return mpfr_zero_p(lo_) && mpfr_zero_p(hi_); }
  bool contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }
  // Sign when certified; throws UncertainSign when the interval straddles 0
  // without being exactly 0.
  int sign() const;
  // +1/-1 when certified, 0 when the interval contains zero.
  int sign_or_zero() const;

  Interval abs() const;
  Interval sqrt() const;
  // x^t for x > 0 and rational t.
  Interval pow(const Rational& t) const;
  Interval hull(const Interval& other) const;

  std::string str() const;

  Interval operator-() const;
  Interval& operator+=(const Interval& rhs);
  Interval& operator-=(const Interval& rhs);
  Interval& operator*=(const Interval& rhs);
  Interval& operator/=(const Interval& rhs);

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);
  // Set equality of the endpoints (used for bookkeeping, not for proofs).
  friend bool operator==(const Interval& a, const Interval& b);

 private:
  explicit Interval(mpfr_prec_t bits);

  mpfr_t lo_;
  mpfr_t hi_;
};

// Raises the thread's working precision for the lifetime of the object.
class PrecisionScope {
 public:
  explicit PrecisionScope(mpfr_prec_t bits);
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;
  ~PrecisionScope();

 private:
  mpfr_prec_t saved_;
};

inline bool is_zero(const Interval& x) { return x.is_exact_zero(); }
inline int sign(const Interval& x) { return x.sign(); }
inline std::string to_string(const Interval& x) { return x.str(); }

}  // namespace coxom
