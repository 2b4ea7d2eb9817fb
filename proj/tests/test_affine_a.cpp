#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "coxom/affine_a.hpp"
#include "doctest.h"

using namespace coxom;
using namespace coxom::affine_a;

namespace {

// x_p -= sum_j x_j C[j][p]
std::vector<LaurentPoly> reflect_oracle(const Matrix<LaurentPoly>& c, int p, std::vector<LaurentPoly> x) {
  LaurentPoly s;
  for (std::size_t j = 0; j < x.size(); ++j) s += x[j] * c(j, static_cast<std::size_t>(p));
  x[static_cast<std::size_t>(p)] -= s;
  return x;
}

bool positive(const RootIndex& r) { return r.eta > 0 ? r.k >= 0 : r.k <= -1; }

std::vector<RootIndex> closure(int n, int length) {
  std::vector<RootIndex> out;
  for (int p = 0; p <= n; ++p) out.push_back(simple_root_index(p, n));
  std::size_t begin = 0;
  for (int step = 0; step < length; ++step) {
    std::size_t end = out.size();
    for (std::size_t a = begin; a < end; ++a) {
      for (int p = 0; p <= n; ++p) {
        RootIndex r = simple_reflect_index(p, out[a], n);
        if (!positive(r)) continue;
        if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
      }
    }
    begin = end;
  }
  return out;
}

LaurentPoly brute_expand(int mu, int l, int m, const std::vector<int>& h) {
  LaurentPoly p = LaurentPoly::monomial(Rational(mu), l);
  LaurentPoly d = LaurentPoly::v() - LaurentPoly::v_inv();
  for (int k = 1; k < m; ++k) p = p * d;
  for (int x : h) {
    LaurentPoly c;
    for (int e = -(x - 1); e <= x - 1; e += 2) c += LaurentPoly::monomial(1, e);
    p = p * c;
  }
  return p;
}

// Nondecreasing sequences of length m over 1..top.
std::vector<std::vector<int>> multisets(int m, int top) {
  if (m == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (auto s : multisets(m - 1, top))
    for (int x = s.empty() ? 1 : s.back(); x <= top; ++x) {
      auto t = s;
      t.push_back(x);
      out.push_back(t);
    }
  return out;
}

}  // namespace

TEST_CASE("canonical NGCM") {
  for (int n = 1; n <= 5; ++n) {
    auto c = canonical_ngcm(n);
    auto v = validate_ngcm(c);
    REQUIRE(v.ok());
    for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i)
      for (std::size_t j = 0; j <= static_cast<std::size_t>(n); ++j)
        if (i != j) CHECK(v.ngcm->coxeter(i, j) == (n == 1 ? CoxeterMatrix::kInfinity : (i + 1 == j || j + 1 == i || (std::min(i, j) == 0 && std::max(i, j) == static_cast<std::size_t>(n)) ? 3 : 2)));
    LaurentPoly d = det(c);
    LaurentPoly w = LaurentPoly::v() - LaurentPoly::v_inv();
    if (n >= 2) CHECK(d == -(w * w));
  }
  auto at = canonical_ngcm_at(3, Rational(3));
  CHECK(at(0, 1) == Rational(-3));
  CHECK(at(0, 3) == Rational(-1, 3));
}

TEST_CASE("case table agrees with the reflection action") {
  for (int n = 2; n <= 5; ++n) {
    auto c = canonical_ngcm(n);
    for (int p = 0; p <= n; ++p) CHECK(root_coords(simple_root_index(p, n), n) == reflect_oracle(c, p, reflect_oracle(c, p, root_coords(simple_root_index(p, n), n))));
    for (int eta : {1, -1})
      for (int m = -2; m <= 2; ++m)
        for (int k = -4; k <= 4; ++k)
          for (int i = 1; i <= n; ++i)
            for (int j = i; j <= n; ++j) {
              RootIndex idx{eta, m, k, i, j};
              for (int p = 0; p <= n; ++p) {
                RootIndex r = simple_reflect_index(p, idx, n);
                CHECK_NOTHROW(check_index(r, n));
                CHECK(root_coords(r, n) == reflect_oracle(c, p, root_coords(idx, n)));
                CHECK(simple_reflect_index(p, r, n) == idx);
              }
            }
  }
}

TEST_CASE("simple roots and membership") {
  for (int n = 2; n <= 4; ++n) {
    for (int p = 0; p <= n; ++p) {
      auto x = root_coords(simple_root_index(p, n), n);
      for (int q = 0; q <= n; ++q) CHECK(x[q] == LaurentPoly(p == q ? 1 : 0));
      CHECK(membership(x, n) == simple_root_index(p, n));
    }
    for (const auto& idx : closure(n, 5)) CHECK(membership(root_coords(idx, n), n) == idx);
  }
  CHECK_FALSE(membership({1, 1, 0}, 2).has_value());
  CHECK_FALSE(membership({0, 2, 0}, 2).has_value());
  CHECK_FALSE(membership({0, 0, 0}, 2).has_value());
  CHECK_THROWS_AS(membership({0, 1}, 2), Error);
}

TEST_CASE("index action matches a rational snapshot") {
  const int n = 3;
  Rational v(2);
  RootDatum<Rational> d(make_ngcm(canonical_ngcm_at(n, v)));
  auto s = Snapshot<Rational>::enumerate(d, 6);
  for (std::size_t id = 0; id < s.size(); ++id) {
    RootIndex idx = apply_word_index(s.word(id), simple_root_index(static_cast<int>(s.simple_of(id)), n), n);
    CHECK(positive(idx));
    CHECK(root_coords_at(idx, n, v) == s.root(id));
  }
}

TEST_CASE("canonicalize") {
  std::vector<Rational> a{-2, -3, -6};
  auto can = canonicalize(a);
  CHECK(can.v == Rational(6));
  CHECK(can.rescaled == canonical_ngcm_at(2, Rational(6)));
  CHECK(det(can.rescaled) == det(cyclic_ngcm(a)));

  std::vector<Rational> b{Rational(-1, 2), -3, -4, Rational(-2, 3)};
  auto cb = canonicalize(b);
  CHECK(cb.v == Rational(2));
  CHECK(cb.rescaled == canonical_ngcm_at(3, Rational(2)));

  CHECK_THROWS_AS(canonicalize(std::vector<Rational>{-2, -1, -1}), TowerError);
  CHECK_THROWS_AS(canonicalize(std::vector<Rational>{-2, 1, -2}), Error);
}

TEST_CASE("chirotope survives canonicalization") {
  std::vector<Rational> a{Rational(-1, 2), -3, -4, Rational(-2, 3)};
  RootDatum<Rational> in(make_ngcm(cyclic_ngcm(a)));
  RootDatum<Rational> can(make_ngcm(canonicalize(a).rescaled));
  std::mt19937_64 rng(3);
  for (int it = 0; it < 200; ++it) {
    std::vector<Vec<Rational>> xs, ys;
    for (int c = 0; c < 4; ++c) {
      Word w;
      for (std::size_t k = 0, len = rng() % 6; k < len; ++k) w.push_back(static_cast<int>(rng() % 4));
      std::size_t s = rng() % 4;
      xs.push_back(in.apply_word(w, in.simple_root(s)));
      ys.push_back(can.apply_word(w, can.simple_root(s)));
    }
    CHECK(det(Matrix<Rational>::from_columns(xs)).sign() == det(Matrix<Rational>::from_columns(ys)).sign());
  }
}

TEST_CASE("determinant examples") {
  for (int n = 2; n <= 5; ++n) {
    std::vector<RootIndex> simple;
    for (int p = 0; p <= n; ++p) simple.push_back(simple_root_index(p, n));
    CHECK(det_roots(simple, n) == LaurentPoly(1));
    auto f = factor_det(LaurentPoly(1));
    CHECK(f == FactoredDet{FactoredDet::Tag::kFactored, 1, 0, 1, {1}});
  }
  for (int n = 3; n <= 6; ++n) {
    auto g = gamma_family(n);
    LaurentPoly d = det_roots(g, n);
    CHECK(d == LaurentPoly::v() - LaurentPoly::v_inv());
    auto f = factor_det(d);
    CHECK(f == FactoredDet{FactoredDet::Tag::kFactored, 1, 0, 2, {1, 1}});
    CHECK(chirotope_sign(f, d, SignRegime::below_one()) == -1);
    CHECK(chirotope_sign(f, d, SignRegime::above_one()) == 1);
    CHECK(chirotope_sign(f, d, SignRegime::one()) == 0);
  }
  for (int k = -3; k <= 3; ++k) {
    for (int kp = -3; kp <= 3; ++kp) {
      RootIndex a0 = simple_root_index(0, 2);
      std::vector<RootIndex> ta{a0, {1, 0, k, 1, 2}, {1, 0, kp, 2, 2}};
      std::vector<RootIndex> tb{a0, {1, 0, k, 1, 2}, {1, 0, kp, 1, 1}};
      LaurentPoly da = det_roots(ta, 2);
      LaurentPoly db = det_roots(tb, 2);
      CHECK(da == LaurentPoly::monomial(1, -kp) * gauss_c(k + 1));
      CHECK(db == LaurentPoly::monomial(-1, kp) * gauss_c(k + 1));
      CHECK(da == det_expansion(roots_matrix(ta, 2)));
      auto fa = factor_det(da);
      if (k == -1) {
        CHECK(fa.tag == FactoredDet::Tag::kZero);
      } else {
        CHECK(fa.tag == FactoredDet::Tag::kFactored);
        CHECK(fa.m == 1);
      }
    }
  }
}

TEST_CASE("factor_det against brute force") {
  std::map<std::vector<std::pair<int, std::string>>, FactoredDet> table;
  auto key = [](const LaurentPoly& p) {
    std::vector<std::pair<int, std::string>> k;
    for (const auto& [e, c] : p.terms()) k.emplace_back(e, c.str());
    return k;
  };
  for (int mu : {1, -1})
    for (int l = -2; l <= 2; ++l)
      for (int m = 1; m <= 3; ++m) {
        for (const auto& h : multisets(m, 5)) {
          LaurentPoly p = brute_expand(mu, l, m, h);
          FactoredDet cert{FactoredDet::Tag::kFactored, mu, l, m, h};
          table[key(p)] = cert;
          CHECK(factor_det(p) == cert);
          CHECK(cert.expand() == p);
        }
      }
  std::mt19937_64 rng(17);
  for (int it = 0; it < 2000; ++it) {
    LaurentPoly p;
    int lo = static_cast<int>(rng() % 9) - 4;
    int len = 1 + static_cast<int>(rng() % 7);
    for (int e = lo; e < lo + len; ++e) p += LaurentPoly::monomial(Rational(static_cast<std::int64_t>(rng() % 5) - 2), e);
    auto f = factor_det(p);
    auto it2 = table.find(key(p));
    if (p.is_zero()) {
      CHECK(f.tag == FactoredDet::Tag::kZero);
    } else if (it2 != table.end()) {
      CHECK(f == it2->second);
    } else if (f.tag == FactoredDet::Tag::kFactored) {
      CHECK(f.expand() == p);
    }
  }
  CHECK(factor_det(LaurentPoly::v() * LaurentPoly::v() + LaurentPoly(3)).tag == FactoredDet::Tag::kNotOfForm);
  CHECK(factor_det(LaurentPoly(2)).tag == FactoredDet::Tag::kNotOfForm);
  CHECK(factor_det(LaurentPoly::v() + LaurentPoly(1)).tag == FactoredDet::Tag::kNotOfForm);
  CHECK(factor_det(LaurentPoly::v()) == FactoredDet{FactoredDet::Tag::kFactored, 1, 1, 1, {1}});
  LaurentPoly odd = LaurentPoly::v() * LaurentPoly::v() + LaurentPoly(3);
  CHECK(chirotope_sign(factor_det(odd), odd, SignRegime::at(Rational(1, 2))) == 1);
  CHECK_THROWS_AS(chirotope_sign(factor_det(odd), odd, SignRegime::above_one()), Error);
}

TEST_CASE("rank 3 determinants have m = 1") {
  auto roots = closure(2, 4);
  REQUIRE(roots.size() > 20);
  std::size_t n = std::min<std::size_t>(roots.size(), 40);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        auto f = factor_det(det_roots({roots[a], roots[b], roots[c]}, 2));
        REQUIRE(f.tag != FactoredDet::Tag::kNotOfForm);
        if (f.tag == FactoredDet::Tag::kFactored) CHECK(f.m == 1);
      }
}

TEST_CASE("Weyl group action preserves the factorization") {
  std::mt19937_64 rng(23);
  for (int n = 2; n <= 4; ++n) {
    auto roots = closure(n, 4);
    for (int it = 0; it < 150; ++it) {
      std::vector<RootIndex> t;
      for (int c = 0; c <= n; ++c) t.push_back(roots[rng() % roots.size()]);
      Word w;
      for (std::size_t k = 0, len = rng() % 6; k < len; ++k) w.push_back(static_cast<int>(rng() % (n + 1)));
      std::vector<RootIndex> wt;
      for (const auto& r : t) wt.push_back(apply_word_index(w, r, n));
      auto f = factor_det(det_roots(t, n));
      auto g = factor_det(det_roots(wt, n));
      if (w.size() % 2 == 1 && g.tag == FactoredDet::Tag::kFactored) g.mu = -g.mu;
      CHECK(f == g);
    }
  }
}

TEST_CASE("determinant equivariance under permutation and rescaling") {
  std::mt19937_64 rng(29);
  for (int n = 2; n <= 4; ++n) {
    for (int it = 0; it < 100; ++it) {
      std::vector<RootIndex> t;
      for (int c = 0; c <= n; ++c) {
        int i = 1 + static_cast<int>(rng() % n);
        int j = i + static_cast<int>(rng() % (n - i + 1));
        t.push_back({rng() % 2 ? 1 : -1, static_cast<int>(rng() % 7) - 3, static_cast<int>(rng() % 7) - 3, i, j});
      }
      LaurentPoly base = det_roots(t, n);
      std::vector<int> perm(n + 1);
      for (int c = 0; c <= n; ++c) perm[c] = c;
      std::shuffle(perm.begin(), perm.end(), rng);
      int sgn = 1;
      for (int a = 0; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
          if (perm[a] > perm[b]) sgn = -sgn;
      std::vector<RootIndex> u;
      int shift = 0;
      for (int c = 0; c <= n; ++c) {
        RootIndex r = t[perm[c]];
        int eta = rng() % 2 ? 1 : -1;
        int m = static_cast<int>(rng() % 5) - 2;
        r.eta *= eta;
        r.m += m;
        sgn *= eta;
        shift += m;
        u.push_back(r);
      }
      CHECK(det_roots(u, n) == base * LaurentPoly::monomial(Rational(sgn), shift));
    }
  }
}
