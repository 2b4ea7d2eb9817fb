#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coxom/error.hpp"
#include "coxom/linalg.hpp"
#include "coxom/scalars/scalars.hpp"

namespace coxom {

// m(r, s) for r != s is at least 2; kInfinity marks an infinite bond.
class CoxeterMatrix {
 public:
  static constexpr int kInfinity = 0;

  CoxeterMatrix() = default;
  explicit CoxeterMatrix(std::size_t rank);
  // Rows of labels; 0 or a negative value encodes infinity off the diagonal.
  static CoxeterMatrix from_labels(const std::vector<std::vector<int>>& labels);

  std::size_t rank() const noexcept { return rank_; }
  int operator()(std::size_t r, std::size_t s) const { return m_[r * rank_ + s]; }
  void set(std::size_t r, std::size_t s, int m);
  bool is_infinite(std::size_t r, std::size_t s) const { return r != s && (*this)(r, s) == kInfinity; }
  // r != s joined by an edge of the Coxeter graph (m >= 3 or infinite).
  bool has_edge(std::size_t r, std::size_t s) const;

  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  bool is_forest() const;
  bool has_infinite_bond() const;
  // Component index of every vertex; components numbered by lowest member.
  std::vector<std::size_t> components() const;

  std::string label(std::size_t r, std::size_t s) const;
  std::string str() const;

  friend bool operator==(const CoxeterMatrix& a, const CoxeterMatrix& b) = default;

 private:
  std::size_t rank_ = 0;
  std::vector<int> m_;
};

// 4 cos^2(pi/m) as an exact quadratic irrational when it is one
// (m in {2, 3, 4, 5, 6, 8, 10, 12}).
std::optional<QuadExt> four_cos_sq_exact(int m);
// 2 cos(pi/m) exactly for the same set of m; infinity gives 2.
std::optional<QuadExt> two_cos_exact(int m);

struct ProductClass {
  std::optional<int> m;  // Coxeter label, kInfinity for infinite bonds
  std::string problem;
};

// Identify the Coxeter label encoded by the product c[a][b] c[b][a] of a
// pair of nonzero off-diagonal entries. `expected` switches interval input
// to "consistent with" mode.
ProductClass classify_product(const Rational& p, std::optional<int> expected = std::nullopt);
ProductClass classify_product(const QuadExt& p, std::optional<int> expected = std::nullopt);
ProductClass classify_product(const LaurentPoly& p, std::optional<int> expected = std::nullopt);
ProductClass classify_product(const Interval& p, std::optional<int> expected = std::nullopt);

// +1 certified <= 0, 0 certified positive somewhere, -1 undecided.
int certified_nonpositive(const Rational& x);
int certified_nonpositive(const QuadExt& x);
int certified_nonpositive(const LaurentPoly& x);
int certified_nonpositive(const Interval& x);

bool is_two(const Rational& x);
bool is_two(const QuadExt& x);
bool is_two(const LaurentPoly& x);
bool is_two(const Interval& x);

std::optional<Rational> exact_sqrt(const Rational& x);
std::optional<QuadExt> exact_sqrt(const QuadExt& x);
std::optional<LaurentPoly> exact_sqrt(const LaurentPoly& x);
std::optional<Interval> exact_sqrt(const Interval& x);

Interval to_interval(const Rational& x);
Interval to_interval(const QuadExt& x);
Interval to_interval(const Interval& x);

// Non-integral generalized Cartan matrix c[a][b] = (alpha_a, alpha_b^vee)
// together with the Coxeter matrix it determines.
template <class F>
struct NGCM {
  Matrix<F> c;
  CoxeterMatrix coxeter;

  std::size_t rank() const noexcept { return c.rows(); }
};

struct Violation {
  std::size_t row;
  std::size_t col;
  std::string message;
};

template <class F>
struct NgcmValidation {
  std::vector<Violation> violations;
  std::optional<NGCM<F>> ngcm;

  bool ok() const noexcept { return violations.empty(); }
};

std::string describe(const std::vector<Violation>& violations);

template <class F>
NgcmValidation<F> validate_ngcm(const Matrix<F>& c, const std::optional<CoxeterMatrix>& expected = std::nullopt) {
  NgcmValidation<F> out;
  const std::size_t n = c.rows();
  if (n != c.cols()) {
    out.violations.push_back({0, 0, "matrix is not square"});
    return out;
  }
  if (expected && expected->rank() != n) {
    out.violations.push_back({0, 0, "expected Coxeter matrix has a different rank"});
    return out;
  }
  CoxeterMatrix cox(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (!is_two(c(a, a))) out.violations.push_back({a, a, "diagonal entry must be 2, got " + to_string(c(a, a))});
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      int np = certified_nonpositive(c(a, b));
      if (np == 0) out.violations.push_back({a, b, "off-diagonal entry must be <= 0, got " + to_string(c(a, b))});
      if (np < 0) out.violations.push_back({a, b, "sign of off-diagonal entry " + to_string(c(a, b)) + " not certified"});
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      bool za = is_zero(c(a, b));
      bool zb = is_zero(c(b, a));
      if (za != zb) {
        out.violations.push_back({a, b, "zero pattern is not symmetric"});
        continue;
      }
      std::optional<int> want;
      if (expected) want = (*expected)(a, b);
      if (za) {
        if (want && *want != 2) {
          // Interval zeros are exact zeros only; anything else is inconsistent.
          out.violations.push_back({a, b, "zero entries but expected m=" + expected->label(a, b)});
        }
        cox.set(a, b, 2);
        continue;
      }
      ProductClass pc = classify_product(c(a, b) * c(b, a), want);
      if (!pc.m) {
        out.violations.push_back({a, b, pc.problem});
        continue;
      }
      cox.set(a, b, *pc.m);
    }
  }
  if (out.violations.empty()) out.ngcm = NGCM<F>{c, cox};
  return out;
}

// Throws Error listing every violation.
template <class F>
NGCM<F> make_ngcm(const Matrix<F>& c, const std::optional<CoxeterMatrix>& expected = std::nullopt) {
  auto v = validate_ngcm(c, expected);
  if (!v.ok()) throw Error("invalid NGCM: " + describe(v.violations));
  return std::move(*v.ngcm);
}

template <class F>
F ngcm_det(const NGCM<F>& a) {
  return det(a.c);
}

// c'[a][b] = (d_a / d_b) c[a][b].
template <class F>
Matrix<F> rescale(const Matrix<F>& c, const std::vector<F>& d) {
  const std::size_t n = c.rows();
  if (d.size() != n) throw Error("rescale: diagonal has wrong length");
  Matrix<F> out(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) out(a, b) = is_zero(c(a, b)) ? c(a, b) : d[a] * c(a, b) / d[b];
  return out;
}

template <class F>
struct Symmetrization {
  std::vector<F> d;
  Matrix<F> rescaled;
};

// Rescale a forest-shaped NGCM to a symmetric one. Every tree is rooted at
// its lowest index vertex, which keeps d = 1.
template <class F>
Symmetrization<F> symmetrize_forest(const NGCM<F>& a) {
  const CoxeterMatrix& cox = a.coxeter;
  if (!cox.is_forest()) throw Error("symmetrize_forest: Coxeter graph is not a forest");
  const std::size_t n = a.rank();
  std::vector<F> d(n, F(Rational(1)));
  std::vector<bool> seen(n, false);
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::vector<std::size_t> queue{root};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      std::size_t parent = queue[qi];
      for (std::size_t child = 0; child < n; ++child) {
        if (seen[child] || child == parent || is_zero(a.c(parent, child))) continue;
        seen[child] = true;
        F ratio = a.c(parent, child) / a.c(child, parent);
        auto s = exact_sqrt(ratio);
        if (!s) {
          throw TowerError("symmetrize_forest: sqrt(" + to_string(ratio) + ") leaves the " + tower_name<F>() +
                               " tower on edge (" + std::to_string(parent) + "," + std::to_string(child) + ")",
                           to_string(ratio));
        }
        d[child] = d[parent] * *s;
        queue.push_back(child);
      }
    }
  }
  Symmetrization<F> out{d, rescale(a.c, d)};
  return out;
}

// Exact entry of the homotopy path -|c'|^t |c|^(1-t), when it stays in the tower.
std::optional<Rational> homotopy_entry(const Rational& c, const Rational& c2, const Rational& t);
std::optional<QuadExt> homotopy_entry(const QuadExt& c, const QuadExt& c2, const Rational& t);
std::optional<LaurentPoly> homotopy_entry(const LaurentPoly& c, const LaurentPoly& c2, const Rational& t);
std::optional<Interval> homotopy_entry(const Interval& c, const Interval& c2, const Rational& t);

template <class F>
void check_homotopy_input(const NGCM<F>& a, const NGCM<F>& b, const Rational& t) {
  if (a.rank() != b.rank()) throw Error("homotopy: ranks differ");
  if (!(a.coxeter == b.coxeter)) throw Error("homotopy: the NGCMs have different Coxeter matrices");
  if (t.sign() < 0 || t > Rational(1)) throw Error("homotopy: t must lie in [0, 1]");
}

// Exact interpolation; throws TowerError when an entry is irrational.
template <class F>
Matrix<F> ngcm_homotopy(const NGCM<F>& a, const NGCM<F>& b, const Rational& t) {
  check_homotopy_input(a, b, t);
  const std::size_t n = a.rank();
  Matrix<F> out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        out(i, j) = F(Rational(2));
        continue;
      }
      auto e = homotopy_entry(a.c(i, j), b.c(i, j), t);
      if (!e) {
        throw TowerError("homotopy: entry (" + std::to_string(i) + "," + std::to_string(j) + ") at t=" + t.str() +
                             " is not in the " + tower_name<F>() + " tower",
                         to_string(a.c(i, j)) + " ; " + to_string(b.c(i, j)));
      }
      out(i, j) = std::move(*e);
    }
  }
  return out;
}

template <class F>
Matrix<Interval> to_interval(const Matrix<F>& m) {
  Matrix<Interval> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = to_interval(m(i, j));
  return out;
}

// Interval enclosure of the homotopy at the current working precision.
template <class F>
Matrix<Interval> ngcm_homotopy_interval(const NGCM<F>& a, const NGCM<F>& b, const Rational& t) {
  check_homotopy_input(a, b, t);
  const std::size_t n = a.rank();
  Matrix<Interval> out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        out(i, j) = Interval(2);
      } else if (is_zero(a.c(i, j))) {
        out(i, j) = Interval(0);
      } else {
        out(i, j) = *homotopy_entry(to_interval(a.c(i, j)), to_interval(b.c(i, j)), t);
      }
    }
  }
  return out;
}

}  // namespace coxom
