#include "coxom/coxeter.hpp"

#include <numeric>

namespace coxom {

CoxeterMatrix::CoxeterMatrix(std::size_t rank) : rank_(rank), m_(rank * rank, 2) {
  for (std::size_t i = 0; i < rank; ++i) m_[i * rank + i] = 1;
}

CoxeterMatrix CoxeterMatrix::from_labels(const std::vector<std::vector<int>>& labels) {
  CoxeterMatrix m(labels.size());
  for (std::size_t r = 0; r < labels.size(); ++r) {
    if (labels[r].size() != labels.size()) throw Error("CoxeterMatrix: labels must form a square matrix");
    for (std::size_t s = 0; s < labels.size(); ++s) {
      if (r == s) {
        if (labels[r][s] != 1) throw Error("CoxeterMatrix: diagonal labels must be 1");
        continue;
      }
      int v = labels[r][s] <= 0 ? kInfinity : labels[r][s];
      int w = labels[s][r] <= 0 ? kInfinity : labels[s][r];
      if (v != w) throw Error("CoxeterMatrix: labels must be symmetric");
      if (v == 1) throw Error("CoxeterMatrix: off-diagonal label 1");
      m.m_[r * m.rank_ + s] = v;
    }
  }
  return m;
}

void CoxeterMatrix::set(std::size_t r, std::size_t s, int m) {
  if (r == s) throw Error("CoxeterMatrix: cannot relabel the diagonal");
  if (m != kInfinity && m < 2) throw Error("CoxeterMatrix: label must be >= 2 or infinite");
  m_[r * rank_ + s] = m;
  m_[s * rank_ + r] = m;
}

bool CoxeterMatrix::has_edge(std::size_t r, std::size_t s) const {
  if (r == s) return false;
  int m = (*this)(r, s);
  return m == kInfinity || m >= 3;
}

std::vector<std::pair<std::size_t, std::size_t>> CoxeterMatrix::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t r = 0; r < rank_; ++r)
    for (std::size_t s = r + 1; s < rank_; ++s)
      if (has_edge(r, s)) out.emplace_back(r, s);
  return out;
}

bool CoxeterMatrix::is_forest() const {
  std::vector<std::size_t> parent(rank_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [r, s] : edges()) {
    std::size_t a = find(r);
    std::size_t b = find(s);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

bool CoxeterMatrix::has_infinite_bond() const {
  for (std::size_t r = 0; r < rank_; ++r)
    for (std::size_t s = r + 1; s < rank_; ++s)
      if (is_infinite(r, s)) return true;
  return false;
}

std::vector<std::size_t> CoxeterMatrix::components() const {
  std::vector<std::size_t> comp(rank_, rank_);
  for (std::size_t root = 0; root < rank_; ++root) {
    if (comp[root] != rank_) continue;
    comp[root] = root;
    std::vector<std::size_t> stack{root};
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t y = 0; y < rank_; ++y) {
        if (comp[y] == rank_ && has_edge(x, y)) {
          comp[y] = root;
          stack.push_back(y);
        }
      }
    }
  }
  return comp;
}

std::string CoxeterMatrix::label(std::size_t r, std::size_t s) const {
  int m = (*this)(r, s);
  return (r != s && m == kInfinity) ? "inf" : std::to_string(m);
}

std::string CoxeterMatrix::str() const {
  std::string s = "[";
  for (std::size_t r = 0; r < rank_; ++r) {
    s += r ? ", [" : "[";
    for (std::size_t c = 0; c < rank_; ++c) s += (c ? ", " : "") + label(r, c);
    s += "]";
  }
  return s + "]";
}

std::optional<QuadExt> four_cos_sq_exact(int m) {
  switch (m) {
    case 2:
      return QuadExt(0);
    case 3:
      return QuadExt(1);
    case 4:
      return QuadExt(2);
    case 5:
      return QuadExt(Rational(3, 2), Rational(1, 2), 5);
    case 6:
      return QuadExt(3);
    case 8:
      return QuadExt(Rational(2), Rational(1), 2);
    case 10:
      return QuadExt(Rational(5, 2), Rational(1, 2), 5);
    case 12:
      return QuadExt(Rational(2), Rational(1), 3);
    default:
      return std::nullopt;
  }
}

std::optional<QuadExt> two_cos_exact(int m) {
  switch (m) {
    case CoxeterMatrix::kInfinity:
      return QuadExt(2);
    case 2:
      return QuadExt(0);
    case 3:
      return QuadExt(1);
    case 4:
      return QuadExt::sqrt_of(2);
    case 5:
      return QuadExt::golden();
    case 6:
      return QuadExt::sqrt_of(3);
    default:
      return std::nullopt;
  }
}

namespace {

constexpr int kExactLabels[] = {3, 4, 5, 6, 8, 10, 12};

std::string label_str(int m) { return m == CoxeterMatrix::kInfinity ? "inf" : std::to_string(m); }

ProductClass check_expected(int found, std::optional<int> expected) {
  if (expected && *expected != found) {
    return {std::nullopt, "product encodes m=" + label_str(found) + " but m=" + label_str(*expected) + " was expected"};
  }
  return {found, {}};
}

}  // namespace

ProductClass classify_product(const QuadExt& p, std::optional<int> expected) {
  if (p.sign() <= 0) return {std::nullopt, "product " + p.str() + " of off-diagonal entries must be positive"};
  if ((p - QuadExt(4)).sign() >= 0) return check_expected(CoxeterMatrix::kInfinity, expected);
  for (int m : kExactLabels) {
    if (p == *four_cos_sq_exact(m)) return check_expected(m, expected);
  }
  return {std::nullopt, "product " + p.str() + " lies in the forbidden gap (0,4) and is not 4cos^2(pi/m) for any m"};
}

ProductClass classify_product(const Rational& p, std::optional<int> expected) {
  return classify_product(QuadExt(p), expected);
}

ProductClass classify_product(const LaurentPoly& p, std::optional<int> expected) {
  if (p.is_zero() || (p.span() == 0 && p.min_exponent() == 0)) return classify_product(p.coeff(0), expected);
  LaurentPoly q = p - LaurentPoly(4);
  bool ok = true;
  for (const auto& term : q.terms()) ok = ok && term.second.sign() >= 0;
  if (!ok && q.leading_coeff().sign() > 0) {
    LaurentPoly scaled = q * LaurentPoly(q.leading_coeff().inverse());
    ok = scaled.try_sqrt().has_value();
  }
  if (!ok) {
    return {std::nullopt, "cannot certify product " + p.str() + " >= 4 for all v > 0; evaluate at a concrete v"};
  }
  return check_expected(CoxeterMatrix::kInfinity, expected);
}

ProductClass classify_product(const Interval& p, std::optional<int> expected) {
  Interval four(4);
  if (expected) {
    int m = *expected;
    if (m == CoxeterMatrix::kInfinity) {
      if ((p - four).sign_or_zero() >= 0) return {m, {}};
      return {std::nullopt, "product " + p.str() + " is certified < 4 but an infinite bond was expected"};
    }
    if (m == 2) return {std::nullopt, "nonzero product but m=2 expected"};
    Interval target = Interval::cos_pi_over(m);
    target = target * target * four;
    if ((p - target).sign_or_zero() == 0) return {m, {}};
    return {std::nullopt, "product " + p.str() + " excludes 4cos^2(pi/" + std::to_string(m) + ")"};
  }
  if ((p - four).sign_or_zero() > 0) return {CoxeterMatrix::kInfinity, {}};
  if (p.sign_or_zero() < 0) return {std::nullopt, "product " + p.str() + " is negative"};
  std::optional<int> hit;
  for (int m = 3; m <= 4096; ++m) {
    Interval target = Interval::cos_pi_over(m);
    target = target * target * four;
    if ((p - target).sign_or_zero() != 0) continue;
    if (hit) return {std::nullopt, "product " + p.str() + " is ambiguous at this precision"};
    hit = m;
  }
  if ((p - four).sign_or_zero() == 0) {
    if (hit) return {std::nullopt, "product " + p.str() + " is ambiguous at this precision"};
    return {CoxeterMatrix::kInfinity, {}};
  }
  if (!hit) return {std::nullopt, "product " + p.str() + " lies in the forbidden gap"};
  return {hit, {}};
}

int certified_nonpositive(const Rational& x) { return x.sign() <= 0 ? 1 : 0; }
int certified_nonpositive(const QuadExt& x) { return x.sign() <= 0 ? 1 : 0; }

int certified_nonpositive(const LaurentPoly& x) {
  bool all_nonpos = true;
  bool all_nonneg = true;
  for (const auto& term : x.terms()) {
    all_nonpos = all_nonpos && term.second.sign() <= 0;
    all_nonneg = all_nonneg && term.second.sign() >= 0;
  }
  if (all_nonpos) return 1;
  if (all_nonneg) return 0;
  return -1;
}

int certified_nonpositive(const Interval& x) {
  if (mpfr_sgn(x.hi()) <= 0) return 1;
  if (mpfr_sgn(x.lo()) > 0) return 0;
  return -1;
}

bool is_two(const Rational& x) { return x == Rational(2); }
bool is_two(const QuadExt& x) { return x == QuadExt(2); }
bool is_two(const LaurentPoly& x) { return x == LaurentPoly(2); }
bool is_two(const Interval& x) { return (x - Interval(2)).sign_or_zero() == 0; }

std::optional<Rational> exact_sqrt(const Rational& x) { return try_sqrt(x); }
std::optional<QuadExt> exact_sqrt(const QuadExt& x) { return try_sqrt(x); }
std::optional<LaurentPoly> exact_sqrt(const LaurentPoly& x) { return x.try_sqrt(); }

std::optional<Interval> exact_sqrt(const Interval& x) {
  if (mpfr_sgn(x.lo()) < 0) return std::nullopt;
  return x.sqrt();
}

Interval to_interval(const Rational& x) { return Interval(x); }

Interval to_interval(const QuadExt& x) {
  if (x.is_rational()) return Interval(x.a());
  return Interval(x.a()) + Interval(x.b()) * Interval(Rational(x.d())).sqrt();
}

Interval to_interval(const Interval& x) { return x; }

std::string describe(const std::vector<Violation>& violations) {
  std::string s;
  for (const auto& v : violations) {
    if (!s.empty()) s += "; ";
    s += "(" + std::to_string(v.row) + "," + std::to_string(v.col) + "): " + v.message;
  }
  return s;
}

std::optional<Rational> homotopy_entry(const Rational& c, const Rational& c2, const Rational& t) {
  if (c.is_zero() || c2.is_zero()) {
    if (c.is_zero() && c2.is_zero()) return Rational(0);
    return std::nullopt;
  }
  if (t.is_zero()) return c;
  if (t.is_one()) return c2;
  if (!t.numerator().fits_sint_p() || !t.denominator().fits_uint_p()) return std::nullopt;
  int p = static_cast<int>(t.numerator().get_si());
  unsigned q = static_cast<unsigned>(t.denominator().get_ui());
  Rational radicand = c2.abs().pow(p) * c.abs().pow(static_cast<int>(q) - p);
  auto root = radicand.exact_root(q);
  if (!root) return std::nullopt;
  return -*root;
}

std::optional<QuadExt> homotopy_entry(const QuadExt& c, const QuadExt& c2, const Rational& t) {
  if (t.is_zero()) return c;
  if (t.is_one()) return c2;
  if (c.is_rational() && c2.is_rational()) {
    auto r = homotopy_entry(c.a(), c2.a(), t);
    if (r) return QuadExt(*r);
  }
  return std::nullopt;
}

std::optional<LaurentPoly> homotopy_entry(const LaurentPoly& c, const LaurentPoly& c2, const Rational& t) {
  if (t.is_zero()) return c;
  if (t.is_one()) return c2;
  bool c_const = c.is_zero() || (c.is_monomial() && c.min_exponent() == 0);
  bool c2_const = c2.is_zero() || (c2.is_monomial() && c2.min_exponent() == 0);
  if (c_const && c2_const) {
    auto r = homotopy_entry(c.coeff(0), c2.coeff(0), t);
    if (r) return LaurentPoly(*r);
  }
  return std::nullopt;
}

std::optional<Interval> homotopy_entry(const Interval& c, const Interval& c2, const Rational& t) {
  if (c.is_exact_zero() && c2.is_exact_zero()) return Interval(0);
  if (t.is_zero()) return c;
  if (t.is_one()) return c2;
  return -(c2.abs().pow(t) * c.abs().pow(Rational(1) - t));
}

}  // namespace coxom
