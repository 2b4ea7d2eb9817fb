#include "coxom/affine_a.hpp"

#include <algorithm>

namespace coxom::affine_a {

std::string RootIndex::str() const {
  return "(" + std::string(eta > 0 ? "+" : "-") + "," + std::to_string(m) + "," + std::to_string(k) + "," +
         std::to_string(i) + "," + std::to_string(j) + ")";
}

void check_index(const RootIndex& idx, int n) {
  if (n < 2) throw Error("affine_a: n must be at least 2");
  if (idx.eta != 1 && idx.eta != -1) throw Error("affine_a: eta must be +1 or -1 in " + idx.str());
  if (idx.i < 1 || idx.j > n || idx.i > idx.j) {
    throw Error("affine_a: need 1 <= i <= j <= " + std::to_string(n) + " in " + idx.str());
  }
}

Matrix<LaurentPoly> canonical_ngcm(int n) {
  if (n < 1) throw Error("canonical_ngcm: n must be positive");
  const std::size_t size = static_cast<std::size_t>(n) + 1;
  Matrix<LaurentPoly> c(size, size);
  for (std::size_t i = 0; i < size; ++i) c(i, i) = LaurentPoly(2);
  if (n == 1) {
    LaurentPoly e = -(LaurentPoly::v() + LaurentPoly::v_inv());
    c(0, 1) = e;
    c(1, 0) = e;
    return c;
  }
  for (std::size_t i = 1; i + 1 < size; ++i) {
    c(i, i + 1) = LaurentPoly(-1);
    c(i + 1, i) = LaurentPoly(-1);
  }
  c(0, 1) = -LaurentPoly::v();
  c(1, 0) = -LaurentPoly::v_inv();
  c(size - 1, 0) = -LaurentPoly::v();
  c(0, size - 1) = -LaurentPoly::v_inv();
  return c;
}

Matrix<Rational> canonical_ngcm_at(int n, const Rational& v) {
  if (v.sign() <= 0) throw Error("canonical_ngcm_at: v must be positive");
  Matrix<LaurentPoly> sym = canonical_ngcm(n);
  Matrix<Rational> c(sym.rows(), sym.cols());
  for (std::size_t i = 0; i < sym.rows(); ++i)
    for (std::size_t j = 0; j < sym.cols(); ++j) c(i, j) = sym(i, j).eval(v);
  return c;
}

std::vector<LaurentPoly> root_coords(const RootIndex& idx, int n) {
  check_index(idx, n);
  LaurentPoly scale = LaurentPoly::monomial(Rational(idx.eta), idx.m);
  LaurentPoly ck = gauss_c(idx.k) * scale;
  LaurentPoly ck1 = gauss_c(idx.k + 1) * scale;
  std::vector<LaurentPoly> x(static_cast<std::size_t>(n) + 1);
  x[0] = ck;
  for (int r = 1; r <= n; ++r) {
    if (r < idx.i) x[r] = ck.shifted(1);
    else if (r <= idx.j) x[r] = ck1;
    else x[r] = ck.shifted(-1);
  }
  return x;
}

std::vector<Rational> root_coords_at(const RootIndex& idx, int n, const Rational& v) {
  std::vector<Rational> out;
  for (const auto& p : root_coords(idx, n)) out.push_back(p.eval(v));
  return out;
}

RootIndex simple_reflect_index(int p, const RootIndex& idx, int n) {
  check_index(idx, n);
  if (p < 0 || p > n) throw Error("simple_reflect_index: p out of range");
  RootIndex r = idx;
  const int i = idx.i;
  const int j = idx.j;
  if (p == 0) {
    if (i == 1 && j <= n - 1) return {-idx.eta, idx.m - 1, -idx.k - 1, j + 1, n};
    if (i == 1 && j == n) return {-idx.eta, idx.m, -idx.k - 2, 1, n};
    if (i >= 2 && j == n) return {-idx.eta, idx.m + 1, -idx.k - 1, 1, i - 1};
    return r;
  }
  if (p == i && p == j) return {-idx.eta, idx.m, -idx.k, i, i};
  if (p == i - 1) r.i = i - 1;
  else if (p == i) r.i = i + 1;
  else if (p == j) r.j = j - 1;
  else if (p == j + 1) r.j = j + 1;
  return r;
}

RootIndex apply_word_index(const Word& w, RootIndex idx, int n) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) idx = simple_reflect_index(*it, idx, n);
  return idx;
}

RootIndex simple_root_index(int p, int n) {
  if (p < 0 || p > n) throw Error("simple_root_index: p out of range");
  if (p == 0) return {-1, 0, -1, 1, n};
  return {1, 0, 0, p, p};
}

namespace {

// All (eta, m, k) with eta v^m c_k = y and eta v^m c_{k+1} = x.
std::optional<RootIndex> match_scalars(const LaurentPoly& y, const LaurentPoly& x, int i, int j, int n) {
  std::vector<RootIndex> candidates;
  if (y.is_zero()) {
    if (!x.is_monomial()) return std::nullopt;
    int eta = x.leading_coeff().sign();
    candidates.push_back({eta, x.min_exponent(), 0, i, j});
  } else {
    if ((y.min_exponent() + y.max_exponent()) % 2 != 0) return std::nullopt;
    int centre = (y.min_exponent() + y.max_exponent()) / 2;
    int kabs = y.span() / 2 + 1;
    int lead = y.leading_coeff().sign();
    for (int k : {kabs, -kabs}) {
      int eta = k > 0 ? lead : -lead;
      candidates.push_back({eta, centre, k, i, j});
    }
  }
  for (const auto& c : candidates) {
    LaurentPoly scale = LaurentPoly::monomial(Rational(c.eta), c.m);
    if (gauss_c(c.k) * scale == y && gauss_c(c.k + 1) * scale == x) return c;
  }
  (void)n;
  return std::nullopt;
}

}  // namespace

std::optional<RootIndex> membership(const std::vector<LaurentPoly>& x, int n) {
  if (x.size() != static_cast<std::size_t>(n) + 1) throw Error("membership: wrong vector length");
  std::optional<RootIndex> found;
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      auto idx = match_scalars(x[0], x[i], i, j, n);
      if (!idx) continue;
      if (root_coords(*idx, n) != x) continue;
      if (found && !(*found == *idx)) throw Error("membership: ambiguous index (internal)");
      found = idx;
    }
  }
  return found;
}

Matrix<LaurentPoly> roots_matrix(const std::vector<RootIndex>& tuple, int n) {
  if (tuple.size() != static_cast<std::size_t>(n) + 1) throw Error("det_roots: tuple must have n+1 roots");
  std::vector<std::vector<LaurentPoly>> cols;
  for (const auto& idx : tuple) cols.push_back(root_coords(idx, n));
  return Matrix<LaurentPoly>::from_columns(cols);
}

LaurentPoly det_roots(const std::vector<RootIndex>& tuple, int n) { return det_bareiss(roots_matrix(tuple, n)); }

LaurentPoly FactoredDet::expand() const {
  if (tag == Tag::kZero) return LaurentPoly();
  if (tag == Tag::kNotOfForm) throw Error("FactoredDet::expand: no certificate");
  LaurentPoly p = LaurentPoly::monomial(Rational(mu), l);
  p *= LaurentPoly::v_minus_v_inv().pow(static_cast<unsigned>(m - 1));
  for (int x : h) p *= gauss_c(x);
  return p;
}

std::string tag_name(FactoredDet::Tag tag) {
  switch (tag) {
    case FactoredDet::Tag::kZero:
      return "Zero";
    case FactoredDet::Tag::kFactored:
      return "Factored";
    case FactoredDet::Tag::kNotOfForm:
      return "NotOfForm";
  }
  return "?";
}

std::string FactoredDet::str() const {
  if (tag != Tag::kFactored) return tag_name(tag);
  std::string s = "mu=" + std::to_string(mu) + " l=" + std::to_string(l) + " m=" + std::to_string(m) + " h={";
  for (std::size_t i = 0; i < h.size(); ++i) s += (i ? "," : "") + std::to_string(h[i]);
  return s + "}";
}

namespace {

// Split q into at most `budget` factors c_h with h <= max_h, largest first.
bool split_gauss(const LaurentPoly& q, int max_h, int budget, std::vector<int>& hs) {
  if (q == LaurentPoly(1)) return true;
  if (budget == 0 || q.is_zero()) return false;
  int top = std::min(max_h, q.span() / 2 + 1);
  for (int h = top; h >= 2; --h) {
    auto rest = q.divide_exact(gauss_c(h));
    if (!rest) continue;
    hs.push_back(h);
    if (split_gauss(*rest, h, budget - 1, hs)) return true;
    hs.pop_back();
  }
  return false;
}

}  // namespace

FactoredDet factor_det(const LaurentPoly& p) {
  FactoredDet f;
  if (p.is_zero()) {
    f.tag = FactoredDet::Tag::kZero;
    return f;
  }
  f.tag = FactoredDet::Tag::kNotOfForm;
  int twice_l = p.min_exponent() + p.max_exponent();
  if (twice_l % 2 != 0) return f;
  int l = twice_l / 2;
  LaurentPoly q = p.shifted(-l);
  const Rational& lead = q.leading_coeff();
  if (!(lead == Rational(1) || lead == Rational(-1))) return f;
  int mu = lead.sign();
  if (mu < 0) q = -q;
  int e = 0;
  const LaurentPoly d = LaurentPoly::v_minus_v_inv();
  while (!(q == LaurentPoly(1))) {
    auto r = q.divide_exact(d);
    if (!r) break;
    q = std::move(*r);
    ++e;
  }
  std::vector<int> hs;
  if (!split_gauss(q, q.span() / 2 + 1, e + 1, hs)) return f;
  while (static_cast<int>(hs.size()) < e + 1) hs.push_back(1);
  std::sort(hs.begin(), hs.end());
  FactoredDet cert{FactoredDet::Tag::kFactored, mu, l, e + 1, hs};
  if (!(cert.expand() == p)) return f;
  return cert;
}

int chirotope_sign(const FactoredDet& f, const LaurentPoly& p, const SignRegime& regime) {
  switch (f.tag) {
    case FactoredDet::Tag::kZero:
      return 0;
    case FactoredDet::Tag::kFactored: {
      int s = f.mu;
      if (f.m > 1) {
        int side = regime.side();
        for (int k = 1; k < f.m; ++k) s *= side;
      }
      return s;
    }
    case FactoredDet::Tag::kNotOfForm:
      break;
  }
  if (regime.kind() == SignRegime::Kind::kAt || regime.kind() == SignRegime::Kind::kOne) {
    return laurent_sign_at(p, regime.value());
  }
  throw Error("chirotope_sign: determinant " + p.str() + " has no certificate; a concrete v is required");
}

int chirotope_sign(const std::vector<RootIndex>& tuple, int n, const SignRegime& regime) {
  LaurentPoly p = det_roots(tuple, n);
  return chirotope_sign(factor_det(p), p, regime);
}

std::vector<RootIndex> gamma_family(int n) {
  if (n < 3) throw Error("gamma_family: n must be at least 3");
  std::vector<RootIndex> t;
  t.push_back({1, 0, 1, 1, 1});
  for (int i = 1; i <= n - 2; ++i) t.push_back({1, 0, 0, i, i});
  t.push_back({1, 0, 1, n, n});
  t.push_back({1, 0, 0, n, n});
  return t;
}

}  // namespace coxom::affine_a
