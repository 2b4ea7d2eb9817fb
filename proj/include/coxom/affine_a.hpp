#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coxom/coxeter.hpp"
#include "coxom/linalg.hpp"
#include "coxom/rootsys.hpp"
#include "coxom/scalars/scalars.hpp"

namespace coxom::affine_a {

// Root eta * v^m * (c_{k+1} alpha_{i,j} + c_k alpha'_{i,j}) of type A~_n.
struct RootIndex {
  int eta = 1;
  int m = 0;
  int k = 0;
  int i = 1;
  int j = 1;

  std::string str() const;
  friend bool operator==(const RootIndex&, const RootIndex&) = default;
};

void check_index(const RootIndex& idx, int n);

// Canonical NGCM: (alpha_0, alpha_1^vee) = -v, (alpha_n, alpha_0^vee) = -v,
// the reverse entries -1/v, and -1 along the inner chain. For n = 1 the two
// bonds merge into -(v + 1/v).
Matrix<LaurentPoly> canonical_ngcm(int n);
Matrix<Rational> canonical_ngcm_at(int n, const Rational& v);

// Input matrix with (alpha_i, alpha_{i+1}^vee) = a_i, (alpha_{i+1}, alpha_i^vee) = 1/a_i
// and (alpha_n, alpha_0^vee) = a_n, (alpha_0, alpha_n^vee) = 1/a_n.
template <class F>
Matrix<F> cyclic_ngcm(const std::vector<F>& a) {
  const std::size_t n = a.size() - 1;
  if (a.size() < 3) throw Error("cyclic_ngcm: need a_0..a_n with n >= 2");
  Matrix<F> c(n + 1, n + 1);
  for (std::size_t i = 0; i <= n; ++i) c(i, i) = F(Rational(2));
  for (std::size_t i = 0; i < n; ++i) {
    c(i, i + 1) = a[i];
    c(i + 1, i) = F(Rational(1)) / a[i];
  }
  c(n, 0) = a[n];
  c(0, n) = F(Rational(1)) / a[n];
  return c;
}

template <class F>
struct Canonicalization {
  F v;
  std::vector<F> d;
  Matrix<F> rescaled;
};

// v = sqrt|a_0 ... a_n|; d_1 = 1, d_i = |a_1 ... a_{i-1}|, d_0 = |a_1 ... a_n| / v.
template <class F>
Canonicalization<F> canonicalize(const std::vector<F>& a) {
  if (a.size() < 3) throw Error("canonicalize: need a_0..a_n with n >= 2");
  for (const F& x : a)
    if (sign(x) >= 0) throw Error("canonicalize: every a_i must be negative, got " + to_string(x));
  const std::size_t n = a.size() - 1;
  F prod(Rational(1));
  for (const F& x : a) prod *= -x;
  auto v = exact_sqrt(prod);
  if (!v) throw TowerError("canonicalize: v = sqrt(" + to_string(prod) + ") is not in the tower", to_string(prod));
  std::vector<F> d(n + 1, F(Rational(1)));
  F run(Rational(1));
  for (std::size_t i = 2; i <= n; ++i) {
    run *= -a[i - 1];
    d[i] = run;
  }
  d[0] = run * -a[n] / *v;
  Canonicalization<F> out{*v, d, rescale(cyclic_ngcm(a), d)};
  return out;
}

// Coordinates over alpha_0..alpha_n.
std::vector<LaurentPoly> root_coords(const RootIndex& idx, int n);
std::vector<Rational> root_coords_at(const RootIndex& idx, int n, const Rational& v);

// Index of s_{alpha_p}(root).
RootIndex simple_reflect_index(int p, const RootIndex& idx, int n);
RootIndex apply_word_index(const Word& w, RootIndex idx, int n);

// Index of a symbolic coordinate vector when it is a root.
std::optional<RootIndex> membership(const std::vector<LaurentPoly>& x, int n);

// Cell (i, j) of the maximal dihedral subsystem containing the root.
inline std::pair<int, int> phi_ij_of(const RootIndex& idx) { return {idx.i, idx.j}; }

RootIndex simple_root_index(int p, int n);

Matrix<LaurentPoly> roots_matrix(const std::vector<RootIndex>& tuple, int n);
LaurentPoly det_roots(const std::vector<RootIndex>& tuple, int n);

struct FactoredDet {
  enum class Tag { kZero, kFactored, kNotOfForm };

  Tag tag = Tag::kNotOfForm;
  int mu = 1;
  int l = 0;
  int m = 1;
  std::vector<int> h;  // ascending, size m

  LaurentPoly expand() const;
  std::string str() const;
  friend bool operator==(const FactoredDet&, const FactoredDet&) = default;
};

std::string tag_name(FactoredDet::Tag tag);

// Certificate mu v^l (v - v^{-1})^{m-1} prod c_{h_k}; verified by re-expansion.
FactoredDet factor_det(const LaurentPoly& p);

// Sign of the determinant in a regime; NotOfForm determinants are only
// evaluated at a concrete v.
int chirotope_sign(const FactoredDet& f, const LaurentPoly& p, const SignRegime& regime);
int chirotope_sign(const std::vector<RootIndex>& tuple, int n, const SignRegime& regime);

// The explicit m = 2 family (n >= 3).
std::vector<RootIndex> gamma_family(int n);

}  // namespace coxom::affine_a
