#include "coxom/scalars/laurent_poly.hpp"

#include <algorithm>

#include "coxom/error.hpp"

namespace coxom {
namespace {

// Dense coefficient buffer helper: index i holds the coefficient of v^(base+i).
LaurentPoly from_dense(int base, std::vector<Rational>& dense) {
  std::vector<LaurentPoly::Term> terms;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (!dense[i].is_zero()) terms.emplace_back(base + static_cast<int>(i), std::move(dense[i]));
  }
  return LaurentPoly::from_terms(std::move(terms));
}

std::vector<Rational> to_dense(const LaurentPoly& p) {
  std::vector<Rational> dense(static_cast<std::size_t>(p.span()) + 1);
  int base = p.min_exponent();
  for (const auto& [e, c] : p.terms()) dense[static_cast<std::size_t>(e - base)] = c;
  return dense;
}

}  // namespace

LaurentPoly::LaurentPoly(Rational c) {
  if (!c.is_zero()) terms_.emplace_back(0, std::move(c));
}

LaurentPoly LaurentPoly::monomial(Rational c, int exponent) {
  LaurentPoly p;
  if (!c.is_zero()) p.terms_.emplace_back(exponent, std::move(c));
  return p;
}

LaurentPoly LaurentPoly::v_minus_v_inv() {
  return from_terms({{-1, Rational(-1)}, {1, Rational(1)}});
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  LaurentPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw Error("LaurentPoly: min_exponent of zero polynomial");
  return terms_.front().first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw Error("LaurentPoly: max_exponent of zero polynomial");
  return terms_.back().first;
}

Rational LaurentPoly::coeff(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return Rational(0);
}

const Rational& LaurentPoly::leading_coeff() const {
  if (terms_.empty()) throw Error("LaurentPoly: leading coefficient of zero polynomial");
  return terms_.back().second;
}

LaurentPoly LaurentPoly::shifted(int shift) const {
  LaurentPoly p(*this);
  for (auto& t : p.terms_) t.first += shift;
  return p;
}

LaurentPoly LaurentPoly::reflected() const {
  LaurentPoly p;
  p.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) p.terms_.emplace_back(-it->first, it->second);
  return p;
}

LaurentPoly LaurentPoly::pow(unsigned exponent) const {
  LaurentPoly result(1);
  LaurentPoly base(*this);
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

Rational LaurentPoly::eval(const Rational& q) const {
  if (terms_.empty()) return Rational(0);
  if (q.is_zero() && min_exponent() < 0) throw Error("LaurentPoly::eval: negative power of zero");
  // Horner on the polynomial q^{-min} p(q).
  int lo = min_exponent();
  Rational acc(0);
  int prev = max_exponent();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    acc = acc * q.pow(prev - it->first) + it->second;
    prev = it->first;
  }
  acc *= q.pow(prev - lo);
  return acc * q.pow(lo);
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw Error("LaurentPoly: division by zero");
  if (is_zero()) return LaurentPoly();
  if (divisor.is_monomial()) {
    const auto& [e, c] = divisor.terms_.front();
    LaurentPoly q;
    q.terms_.reserve(terms_.size());
    for (const auto& [te, tc] : terms_) q.terms_.emplace_back(te - e, tc / c);
    return q;
  }
  if (span() < divisor.span()) return std::nullopt;
  std::vector<Rational> rem = to_dense(*this);
  std::vector<Rational> den = to_dense(divisor);
  const std::size_t dl = den.size();
  const std::size_t ql = rem.size() - dl + 1;
  std::vector<Rational> quot(ql);
  const Rational& lead = den.back();
  for (std::size_t k = ql; k-- > 0;) {
    Rational& top = rem[k + dl - 1];
    if (top.is_zero()) continue;
    Rational f = top / lead;
    for (std::size_t j = 0; j < dl; ++j) {
      if (!den[j].is_zero()) rem[k + j] -= f * den[j];
    }
    quot[k] = std::move(f);
  }
  for (const auto& r : rem) {
    if (!r.is_zero()) return std::nullopt;
  }
  return from_dense(min_exponent() - divisor.min_exponent(), quot);
}

std::optional<LaurentPoly> LaurentPoly::try_sqrt() const {
  if (is_zero()) return LaurentPoly();
  int lo = min_exponent();
  if (lo % 2 != 0 || span() % 2 != 0) return std::nullopt;
  std::vector<Rational> p = to_dense(*this);
  const std::size_t half = p.size() / 2;  // degree of the root
  auto lead = p.back().exact_root(2);
  if (!lead) return std::nullopt;
  std::vector<Rational> r(half + 1);
  r[half] = *lead;
  Rational two_lead = Rational(2) * *lead;
  for (std::size_t k = half; k-- > 0;) {
    // coefficient of v^(half + k) in r^2, excluding the 2 r_half r_k term
    Rational acc = p[half + k];
    for (std::size_t i = k + 1; i < half; ++i) {
      std::size_t j = half + k - i;
      if (j > k && j < half + 1 && j != half) acc -= r[i] * r[j];
    }
    r[k] = acc / two_lead;
  }
  LaurentPoly root = from_dense(lo / 2, r);
  if (root * root != *this) return std::nullopt;
  return root;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) s += "-";
    } else {
      s += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      s += mag.str();
      continue;
    }
    if (!mag.is_one()) s += mag.str() + "*";
    s += "v";
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::size_t LaurentPoly::hash() const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const auto& [e, c] : terms_) {
    h ^= std::hash<int>{}(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= c.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p(*this);
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
      r.terms_.push_back(*ia++);
    } else if (ia == a.terms_.end() || ib->first < ia->first) {
      r.terms_.push_back(*ib++);
    } else {
      Rational s = ia->second + ib->second;
      if (!s.is_zero()) r.terms_.emplace_back(ia->first, std::move(s));
      ++ia;
      ++ib;
    }
  }
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return LaurentPoly();
  if (a.is_monomial() || b.is_monomial()) {
    const LaurentPoly& m = a.is_monomial() ? a : b;
    const LaurentPoly& o = a.is_monomial() ? b : a;
    const auto& [e, c] = m.terms_.front();
    LaurentPoly r;
    r.terms_.reserve(o.terms_.size());
    for (const auto& [oe, oc] : o.terms_) r.terms_.emplace_back(oe + e, oc * c);
    return r;
  }
  int base = a.min_exponent() + b.min_exponent();
  std::vector<Rational> dense(static_cast<std::size_t>(a.span() + b.span()) + 1);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      dense[static_cast<std::size_t>(ea + eb - base)] += ca * cb;
    }
  }
  return from_dense(base, dense);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) { return *this = *this + rhs; }
LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return *this = *this - rhs; }
LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

LaurentPoly operator/(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = a.divide_exact(b);
  if (!q) throw Error("LaurentPoly: inexact division of " + a.str() + " by " + b.str());
  return *q;
}

LaurentPoly gauss_c(int n) {
  if (n == 0) return LaurentPoly();
  if (n < 0) return -gauss_c(-n);
  std::vector<LaurentPoly::Term> terms;
  for (int e = -(n - 1); e <= n - 1; e += 2) terms.emplace_back(e, Rational(1));
  return LaurentPoly::from_terms(std::move(terms));
}

int laurent_sign_at(const LaurentPoly& p, const Rational& q) {
  if (q.sign() <= 0) throw Error("laurent_sign_at: evaluation point must be positive, got " + q.str());
  return p.eval(q).sign();
}

SignRegime SignRegime::at(Rational q) {
  if (q.sign() <= 0) throw Error("SignRegime: v must be positive, got " + q.str());
  SignRegime r(Kind::kAt);
  r.value_ = std::move(q);
  return r;
}

int SignRegime::side() const {
  switch (kind_) {
    case Kind::kBelowOne:
      return -1;
    case Kind::kOne:
      return 0;
    case Kind::kAboveOne:
      return 1;
    case Kind::kAt:
      return (value_ - Rational(1)).sign();
  }
  return 0;
}

std::string SignRegime::str() const {
  switch (kind_) {
    case Kind::kBelowOne:
      return "v<1";
    case Kind::kOne:
      return "v=1";
    case Kind::kAboveOne:
      return "v>1";
    case Kind::kAt:
      return "v=" + value_.str();
  }
  return "?";
}

}  // namespace coxom
