#pragma once

#include <concepts>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coxom/scalars/rational.hpp"

namespace coxom {

// Finitely supported Laurent polynomial in one indeterminate v over Q.
// Terms are kept sorted by exponent with no zero coefficients.
class LaurentPoly {
 public:
  using Term = std::pair<int, Rational>;

  LaurentPoly() = default;
  LaurentPoly(Rational c);  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  LaurentPoly(I c) : LaurentPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(Rational c, int exponent);
  static LaurentPoly v() { return monomial(1, 1); }
  static LaurentPoly v_inv() { return monomial(1, -1); }
  // v - v^{-1}
  static LaurentPoly v_minus_v_inv();
  static LaurentPoly from_terms(std::vector<Term> terms);

  bool is_zero() const noexcept { return terms_.empty(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  int min_exponent() const;
  int max_exponent() const;
  int span() const { return is_zero() ? 0 : max_exponent() - min_exponent(); }
  Rational coeff(int exponent) const;
  const Rational& leading_coeff() const;
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  // p(v) * v^shift
  LaurentPoly shifted(int shift) const;
  // p(v^{-1})
  LaurentPoly reflected() const;
  LaurentPoly pow(unsigned exponent) const;

  Rational eval(const Rational& q) const;
  // Quotient when this = divisor * quotient exactly in Q[v, v^{-1}].
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& divisor) const;
  std::optional<LaurentPoly> try_sqrt() const;

  std::string str() const;
  std::size_t hash() const noexcept;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) noexcept {
    return a.terms_ == b.terms_;
  }

 private:
  std::vector<Term> terms_;
};

// Exact quotient; throws when the division does not terminate cleanly.
LaurentPoly operator/(const LaurentPoly& a, const LaurentPoly& b);

// Gaussian (quantum) integer c_n = (v^n - v^{-n}) / (v - v^{-1}).
LaurentPoly gauss_c(int n);

// Sign of p(q) for a positive rational q.
int laurent_sign_at(const LaurentPoly& p, const Rational& q);

inline bool is_zero(const LaurentPoly& p) { return p.is_zero(); }
inline std::string to_string(const LaurentPoly& p) { return p.str(); }

// The sign of an expression in v is evaluated either in one of the three
// regimes v<1, v=1, v>1 or at a concrete positive rational.
class SignRegime {
 public:
  enum class Kind { kBelowOne, kOne, kAboveOne, kAt };

  static SignRegime below_one() { return SignRegime(Kind::kBelowOne); }
  static SignRegime one() { return SignRegime(Kind::kOne); }
  static SignRegime above_one() { return SignRegime(Kind::kAboveOne); }
  static SignRegime at(Rational q);

  Kind kind() const noexcept { return kind_; }
  const Rational& value() const noexcept { return value_; }
  // sgn(v - 1) in this regime.
  int side() const;
  std::string str() const;

 private:
  explicit SignRegime(Kind k) : kind_(k), value_(k == Kind::kOne ? 1 : 0) {}
  Kind kind_;
  Rational value_;
};

}  // namespace coxom

template <>
struct std::hash<coxom::LaurentPoly> {
  std::size_t operator()(const coxom::LaurentPoly& p) const noexcept { return p.hash(); }
};
