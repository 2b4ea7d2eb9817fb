#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace coxom {

// Arbitrary precision rational number, always in lowest terms with a
// positive denominator.
//
// Values whose numerator and denominator fit in 64 bits are stored inline;
// everything else lives in a heap allocated mpq_class. The two storage forms
// never represent the same value, so equality and hashing can branch on the
// form first.
class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<I>) {
      if (static_cast<long long>(value) == INT64_MIN) {
        big_ = std::make_unique<mpq_class>(static_cast<long>(value));
        return;
      }
      num_ = static_cast<std::int64_t>(value);
    } else {
      if (static_cast<unsigned long long>(value) > static_cast<unsigned long long>(INT64_MAX)) {
        big_ = std::make_unique<mpq_class>(static_cast<unsigned long>(value));
        return;
      }
      num_ = static_cast<std::int64_t>(value);
    }
  }
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(const mpz_class& num, const mpz_class& den = 1);
  explicit Rational(const mpq_class& q);

  Rational(const Rational& other);
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& other);
  Rational& operator=(Rational&&) noexcept = default;
  ~Rational() = default;

  // Accepts "p", "p/q", "-p/q" and finite decimals such as "-1.25".
  static Rational parse(std::string_view text);

  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const noexcept;

  mpz_class numerator() const;
  mpz_class denominator() const;
  mpq_class to_mpq() const;
  double to_double() const;
  std::string str() const;
  std::size_t hash() const noexcept;
  bool is_small() const noexcept { return !big_; }

  Rational abs() const;
  Rational inverse() const;
  Rational pow(int exponent) const;

  // Exact k-th root of a non-negative rational when it exists.
  std::optional<Rational> exact_root(unsigned k) const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) noexcept;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  static Rational from_wide(__int128 num, __int128 den);
  static Rational from_mpq(mpq_class q);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline int sign(const Rational& x) { return x.sign(); }
inline std::string to_string(const Rational& x) { return x.str(); }

}  // namespace coxom

template <>
struct std::hash<coxom::Rational> {
  std::size_t operator()(const coxom::Rational& q) const noexcept { return q.hash(); }
};
