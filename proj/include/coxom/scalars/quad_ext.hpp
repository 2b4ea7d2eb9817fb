#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>

#include "coxom/scalars/rational.hpp"

namespace coxom {

// Element a + b*sqrt(d) of the real quadratic field Q(sqrt d), d square-free.
//
// Pure rationals carry d == 0 and combine with any field; two irrational
// operands must agree on d.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  QuadExt(I a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadExt(Rational a, Rational b, std::int64_t d);

  // tau = (1 + sqrt 5) / 2 = 2 cos(pi/5).
  static QuadExt golden();
  static QuadExt sqrt_of(std::int64_t d);

  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }
  std::int64_t d() const noexcept { return d_; }
  bool is_rational() const noexcept { return b_.is_zero(); }
  bool is_zero() const noexcept { return a_.is_zero() && b_.is_zero(); }

  QuadExt conjugate() const;
  Rational norm() const;
  QuadExt inverse() const;
  int sign() const;
  double to_double() const;
  std::string str() const;
  std::size_t hash() const noexcept;

  QuadExt operator-() const;
  QuadExt& operator+=(const QuadExt& rhs);
  QuadExt& operator-=(const QuadExt& rhs);
  QuadExt& operator*=(const QuadExt& rhs);
  QuadExt& operator/=(const QuadExt& rhs);

  friend QuadExt operator+(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y);
  friend bool operator==(const QuadExt& x, const QuadExt& y) noexcept {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }

 private:
  static std::int64_t common_field(const QuadExt& x, const QuadExt& y);

  Rational a_;
  Rational b_;
  std::int64_t d_ = 0;
};

bool is_square_free(std::int64_t d);

// Positive square root inside Q(sqrt d) (or a fresh Q(sqrt d') for rational
// input) when one exists.
std::optional<QuadExt> try_sqrt(const QuadExt& x);
std::optional<Rational> try_sqrt(const Rational& x);

inline bool is_zero(const QuadExt& x) { return x.is_zero(); }
inline int sign(const QuadExt& x) { return x.sign(); }
inline std::string to_string(const QuadExt& x) { return x.str(); }

inline bool operator<(const QuadExt& x, const QuadExt& y) { return (y - x).sign() > 0; }
inline bool operator>(const QuadExt& x, const QuadExt& y) { return y < x; }
inline bool operator<=(const QuadExt& x, const QuadExt& y) { return !(y < x); }
inline bool operator>=(const QuadExt& x, const QuadExt& y) { return !(x < y); }

}  // namespace coxom

template <>
struct std::hash<coxom::QuadExt> {
  std::size_t operator()(const coxom::QuadExt& q) const noexcept { return q.hash(); }
};
