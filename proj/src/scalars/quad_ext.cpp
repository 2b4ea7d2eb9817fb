#include "coxom/scalars/quad_ext.hpp"

#include <cmath>

#include "coxom/error.hpp"

namespace coxom {

bool is_square_free(std::int64_t d) {
  if (d < 2) return false;
  for (std::int64_t p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

QuadExt::QuadExt(Rational a, Rational b, std::int64_t d) : a_(std::move(a)), b_(std::move(b)) {
  if (!b_.is_zero()) {
    if (!is_square_free(d)) throw Error("QuadExt: d=" + std::to_string(d) + " is not square-free > 1");
    d_ = d;
  }
}

QuadExt QuadExt::golden() { return {Rational(1, 2), Rational(1, 2), 5}; }

QuadExt QuadExt::sqrt_of(std::int64_t d) { return {Rational(0), Rational(1), d}; }

std::int64_t QuadExt::common_field(const QuadExt& x, const QuadExt& y) {
  if (x.d_ == 0) return y.d_;
  if (y.d_ == 0 || y.d_ == x.d_) return x.d_;
  throw Error("QuadExt: mixing Q(sqrt " + std::to_string(x.d_) + ") and Q(sqrt " + std::to_string(y.d_) + ")");
}

QuadExt QuadExt::conjugate() const {
  QuadExt r(*this);
  r.b_ = -r.b_;
  return r;
}

Rational QuadExt::norm() const { return a_ * a_ - b_ * b_ * Rational(d_); }

QuadExt QuadExt::inverse() const {
  if (is_zero()) throw Error("QuadExt: inverse of zero");
  if (is_rational()) return QuadExt(a_.inverse());
  Rational n = norm();
  return {a_ / n, -b_ / n, d_};
}

int QuadExt::sign() const {
  int sa = a_.sign();
  int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with b^2 d.
  Rational lhs = a_ * a_;
  Rational rhs = b_ * b_ * Rational(d_);
  return lhs > rhs ? sa : sb;
}

double QuadExt::to_double() const {
  return a_.to_double() + b_.to_double() * std::sqrt(static_cast<double>(d_));
}

std::string QuadExt::str() const {
  if (is_rational()) return a_.str();
  std::string s;
  if (!a_.is_zero()) s = a_.str() + (b_.sign() > 0 ? " + " : " - ");
  else if (b_.sign() < 0) s = "-";
  Rational mag = b_.abs();
  if (!mag.is_one()) s += mag.str() + "*";
  s += "sqrt(" + std::to_string(d_) + ")";
  return s;
}

std::size_t QuadExt::hash() const noexcept {
  std::size_t h = a_.hash();
  h ^= b_.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

QuadExt QuadExt::operator-() const {
  QuadExt r;
  r.a_ = -a_;
  r.b_ = -b_;
  r.d_ = d_;
  return r;
}

QuadExt operator+(const QuadExt& x, const QuadExt& y) {
  QuadExt r;
  r.a_ = x.a_ + y.a_;
  if (x.d_ == 0 && y.d_ == 0) return r;
  std::int64_t d = QuadExt::common_field(x, y);
  r.b_ = x.b_ + y.b_;
  if (!r.b_.is_zero()) r.d_ = d;
  return r;
}

QuadExt operator-(const QuadExt& x, const QuadExt& y) {
  QuadExt r;
  r.a_ = x.a_ - y.a_;
  if (x.d_ == 0 && y.d_ == 0) return r;
  std::int64_t d = QuadExt::common_field(x, y);
  r.b_ = x.b_ - y.b_;
  if (!r.b_.is_zero()) r.d_ = d;
  return r;
}

QuadExt operator*(const QuadExt& x, const QuadExt& y) {
  QuadExt r;
  if (x.d_ == 0 && y.d_ == 0) {
    r.a_ = x.a_ * y.a_;
    return r;
  }
  std::int64_t d = QuadExt::common_field(x, y);
  if (x.d_ == 0) {
    r.a_ = x.a_ * y.a_;
    r.b_ = x.a_ * y.b_;
  } else if (y.d_ == 0) {
    r.a_ = x.a_ * y.a_;
    r.b_ = x.b_ * y.a_;
  } else {
    r.a_ = x.a_ * y.a_ + x.b_ * y.b_ * Rational(d);
    r.b_ = x.a_ * y.b_ + x.b_ * y.a_;
  }
  if (!r.b_.is_zero()) r.d_ = d;
  return r;
}

QuadExt operator/(const QuadExt& x, const QuadExt& y) {
  if (y.is_zero()) throw Error("QuadExt: division by zero");
  if (y.d_ == 0) {
    QuadExt r;
    r.a_ = x.a_ / y.a_;
    if (x.d_ != 0) {
      r.b_ = x.b_ / y.a_;
      r.d_ = x.d_;
    }
    return r;
  }
  return x * y.inverse();
}

QuadExt& QuadExt::operator+=(const QuadExt& rhs) { return *this = *this + rhs; }
QuadExt& QuadExt::operator-=(const QuadExt& rhs) { return *this = *this - rhs; }
QuadExt& QuadExt::operator*=(const QuadExt& rhs) { return *this = *this * rhs; }
QuadExt& QuadExt::operator/=(const QuadExt& rhs) { return *this = *this / rhs; }

std::optional<Rational> try_sqrt(const Rational& x) {
  if (x.sign() < 0) return std::nullopt;
  return x.exact_root(2);
}

namespace {

// Largest square factor split: r = s^2 * k with k a square-free integer
// (only attempted for integers that fit in 64 bits).
std::optional<QuadExt> rational_sqrt_in_extension(const Rational& r) {
  // sqrt(p/q) = sqrt(p*q)/q; look for p*q = s^2 * k.
  mpz_class pq = r.numerator() * r.denominator();
  if (!mpz_fits_slong_p(pq.get_mpz_t())) return std::nullopt;
  long n = pq.get_si();
  long square = 1;
  long rest = n;
  for (long p = 2; p * p <= rest; ++p) {
    while (rest % (p * p) == 0) {
      rest /= p * p;
      square *= p;
    }
  }
  if (rest == 1) return std::nullopt;
  Rational coeff = Rational(square) / Rational(r.denominator());
  return QuadExt(Rational(0), coeff, rest);
}

}  // namespace

std::optional<QuadExt> try_sqrt(const QuadExt& x) {
  int s = x.sign();
  if (s < 0) return std::nullopt;
  if (s == 0) return QuadExt(0);
  if (x.is_rational()) {
    if (auto r = try_sqrt(x.a())) return QuadExt(*r);
    auto ext = rational_sqrt_in_extension(x.a());
    return ext;
  }
  // (p + q sqrt d)^2 = p^2 + d q^2 + 2 p q sqrt d.
  auto root_norm = try_sqrt(x.norm());
  if (!root_norm) return std::nullopt;
  for (int branch : {1, -1}) {
    Rational p2 = (x.a() + Rational(branch) * *root_norm) / Rational(2);
    auto p = try_sqrt(p2);
    if (!p || p->is_zero()) continue;
    Rational q = x.b() / (Rational(2) * *p);
    QuadExt cand(*p, q, x.d());
    if (cand.sign() < 0) cand = -cand;
    if (cand * cand == x) return cand;
  }
  // sqrt may also be a pure multiple of sqrt d: (q sqrt d)^2 = q^2 d is rational,
  // already excluded since x is irrational here.
  return std::nullopt;
}

}  // namespace coxom
