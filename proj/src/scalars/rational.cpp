#include "coxom/scalars/rational.hpp"

#include <cctype>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "coxom/error.hpp"

namespace coxom {
namespace {

using u128 = unsigned __int128;

u128 gcd_wide(u128 a, u128 b) {
  if ((a >> 64) == 0 && (b >> 64) == 0) {
    return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
  }
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits_small(__int128 x) { return x > INT64_MIN && x <= INT64_MAX; }

mpz_class mpz_from_wide(__int128 x) {
  bool neg = x < 0;
  u128 u = neg ? static_cast<u128>(-x) : static_cast<u128>(x);
  mpz_class hi = static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64));
  mpz_class lo = static_cast<unsigned long>(static_cast<std::uint64_t>(u));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

bool mpz_fits_small(const mpz_class& z) {
  return mpz_fits_slong_p(z.get_mpz_t()) != 0 && z.get_si() != INT64_MIN;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error("Rational: zero denominator");
  *this = from_wide(num, den);
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error("Rational: zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  *this = from_mpq(std::move(q));
}

Rational::Rational(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  *this = from_mpq(std::move(c));
}

Rational::Rational(const Rational& other)
    : num_(other.num_),
      den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
  if (this != &other) {
    num_ = other.num_;
    den_ = other.den_;
    big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
  }
  return *this;
}

Rational Rational::from_wide(__int128 num, __int128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Rational r;
  if (num == 0) return r;
  u128 g = gcd_wide(num < 0 ? static_cast<u128>(-num) : static_cast<u128>(num),
                    static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<__int128>(g);
    den /= static_cast<__int128>(g);
  }
  if (fits_small(num) && fits_small(den)) {
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }
  r.big_ = std::make_unique<mpq_class>(mpz_from_wide(num), mpz_from_wide(den));
  return r;
}

Rational Rational::from_mpq(mpq_class q) {
  Rational r;
  if (mpz_fits_small(q.get_num()) && mpz_fits_small(q.get_den())) {
    r.num_ = q.get_num().get_si();
    r.den_ = q.get_den().get_si();
    return r;
  }
  r.big_ = std::make_unique<mpq_class>(std::move(q));
  return r;
}

Rational Rational::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw Error("Rational::parse: empty string");
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    if (s.find('/') != std::string::npos) throw Error("Rational::parse: mixed '.' and '/': " + s);
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::size_t frac_len = s.size() - dot - 1;
    mpz_class num;
    if (num.set_str(digits, 10) != 0) throw Error("Rational::parse: bad decimal '" + s + "'");
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
    return Rational(num, den);
  }
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw Error("Rational::parse: bad rational '" + s + "'");
  if (q.get_den() == 0) throw Error("Rational::parse: zero denominator in '" + s + "'");
  q.canonicalize();
  return from_mpq(std::move(q));
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const noexcept {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpz_class Rational::numerator() const {
  return big_ ? big_->get_num() : mpz_class(static_cast<long>(num_));
}

mpz_class Rational::denominator() const {
  return big_ ? big_->get_den() : mpz_class(static_cast<long>(den_));
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

double Rational::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::size_t Rational::hash() const noexcept {
  if (big_) {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    const mpz_srcptr parts[2] = {big_->get_num_mpz_t(), big_->get_den_mpz_t()};
    for (mpz_srcptr z : parts) {
      std::size_t n = mpz_size(z);
      for (std::size_t i = 0; i < n; ++i) {
        h ^= std::hash<mp_limb_t>{}(mpz_getlimbn(z, static_cast<mp_size_t>(i))) + 0x9e3779b97f4a7c15ULL +
             (h << 6) + (h >> 2);
      }
      h ^= static_cast<std::size_t>(mpz_sgn(z) + 7);
    }
    return h;
  }
  std::size_t h = std::hash<std::int64_t>{}(num_);
  return h ^ (std::hash<std::int64_t>{}(den_) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::inverse() const {
  if (is_zero()) throw Error("Rational: inverse of zero");
  if (!big_) return from_wide(den_, num_);
  return from_mpq(mpq_class(1) / *big_);
}

Rational Rational::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Rational result(1);
  Rational base(*this);
  unsigned e = static_cast<unsigned>(exponent);
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

std::optional<Rational> Rational::exact_root(unsigned k) const {
  if (k == 0) throw Error("Rational::exact_root: k must be positive");
  if (sign() < 0) return std::nullopt;
  if (is_zero()) return Rational(0);
  mpz_class num = numerator();
  mpz_class den = denominator();
  mpz_class rn;
  mpz_class rd;
  if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), k) == 0) return std::nullopt;
  if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), k) == 0) return std::nullopt;
  return Rational(rn, rd);
}

Rational Rational::operator-() const {
  if (big_) return from_mpq(-*big_);
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t s;
      if (!__builtin_add_overflow(a.num_, b.num_, &s) && s != INT64_MIN) {
        Rational r;
        r.num_ = s;
        return r;
      }
    }
    if (a.den_ == b.den_) {
      return Rational::from_wide(static_cast<__int128>(a.num_) + b.num_, a.den_);
    }
    __int128 num = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
    __int128 den = static_cast<__int128>(a.den_) * b.den_;
    return Rational::from_wide(num, den);
  }
  return Rational::from_mpq(a.to_mpq() + b.to_mpq());
}

Rational operator-(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t s;
      if (!__builtin_sub_overflow(a.num_, b.num_, &s) && s != INT64_MIN) {
        Rational r;
        r.num_ = s;
        return r;
      }
    }
    if (a.den_ == b.den_) {
      return Rational::from_wide(static_cast<__int128>(a.num_) - b.num_, a.den_);
    }
    __int128 num = static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_;
    __int128 den = static_cast<__int128>(a.den_) * b.den_;
    return Rational::from_wide(num, den);
  }
  return Rational::from_mpq(a.to_mpq() - b.to_mpq());
}

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t p;
      if (!__builtin_mul_overflow(a.num_, b.num_, &p) && p != INT64_MIN) {
        Rational r;
        r.num_ = p;
        return r;
      }
    }
    return Rational::from_wide(static_cast<__int128>(a.num_) * b.num_,
                               static_cast<__int128>(a.den_) * b.den_);
  }
  return Rational::from_mpq(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw Error("Rational: division by zero");
  if (!a.big_ && !b.big_) {
    return Rational::from_wide(static_cast<__int128>(a.num_) * b.den_,
                               static_cast<__int128>(a.den_) * b.num_);
  }
  return Rational::from_mpq(a.to_mpq() / b.to_mpq());
}

Rational& Rational::operator+=(const Rational& rhs) { return *this = *this + rhs; }
Rational& Rational::operator-=(const Rational& rhs) { return *this = *this - rhs; }
Rational& Rational::operator*=(const Rational& rhs) { return *this = *this * rhs; }
Rational& Rational::operator/=(const Rational& rhs) { return *this = *this / rhs; }

bool operator==(const Rational& a, const Rational& b) noexcept {
  if (a.big_ || b.big_) {
    if (!a.big_ || !b.big_) return false;
    return *a.big_ == *b.big_;
  }
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    __int128 l = static_cast<__int128>(a.num_) * b.den_;
    __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return l <=> r;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

}  // namespace coxom
