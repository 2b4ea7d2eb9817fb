#include <random>

#include "coxom/rootsys.hpp"
#include "doctest.h"

using namespace coxom;

namespace {

template <class F>
Matrix<F> mat(const std::vector<std::vector<F>>& rows) {
  Matrix<F> m(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  return m;
}

RootDatum<Rational> rdatum(const std::vector<std::vector<Rational>>& rows) {
  return RootDatum<Rational>(make_ngcm(mat(rows)));
}

RootDatum<QuadExt> cycle5() {
  QuadExt t = QuadExt::golden();
  QuadExt z(0);
  QuadExt two(2);
  return RootDatum<QuadExt>(make_ngcm(mat<QuadExt>({{two, -t, z, -t}, {-t, two, -t, z}, {z, -t, two, -t}, {-t, z, -t, two}})));
}

Vec<QuadExt> qv(std::initializer_list<QuadExt> xs) { return Vec<QuadExt>(xs); }

}  // namespace

TEST_CASE("finite snapshot of A2") {
  auto a2 = rdatum({{2, -1}, {-1, 2}});
  CHECK(Snapshot<Rational>::enumerate(a2, 0).size() == 2);
  auto s = Snapshot<Rational>::enumerate(a2, 3);
  CHECK(s.size() == 3);
  CHECK(s.find(Vec<Rational>{1, 1}).has_value());
  CHECK(s.find(Vec<Rational>{3, 3}).has_value());
  CHECK_FALSE(s.find(Vec<Rational>{1, -1}).has_value());
  auto e = s.find_elem(Vec<Rational>{-2, -2});
  REQUIRE(e.has_value());
  CHECK(elem_negative(*e));

  auto span = dihedral_span_roots(s, pos_elem(0), pos_elem(1));
  CHECK(span.size() == 3);
  CHECK_THROWS_AS(dihedral_span_roots(s, pos_elem(0), neg_elem(0)), Error);
}

TEST_CASE("reflections") {
  auto d = rdatum({{2, -3, 0}, {-1, 2, Rational(-1, 2)}, {0, -8, 2}});
  std::mt19937_64 rng(5);
  for (std::size_t i = 0; i < 3; ++i) {
    auto a = d.simple_root(i);
    auto r = d.reflect(i, a);
    for (std::size_t j = 0; j < 3; ++j) CHECK(r[j] == -a[j]);
  }
  for (int it = 0; it < 50; ++it) {
    Vec<Rational> x, y;
    for (int j = 0; j < 3; ++j) {
      x.emplace_back(static_cast<std::int64_t>(rng() % 11) - 5);
      y.emplace_back(static_cast<std::int64_t>(rng() % 11) - 5);
    }
    std::size_t i = rng() % 3;
    CHECK(d.reflect(i, d.reflect(i, x)) == x);
    CHECK(d.pairing(d.reflect(i, x), d.coreflect(i, y)) == d.pairing(x, y));
    Word w;
    for (std::size_t k = 0, len = rng() % 7; k < len; ++k) w.push_back(static_cast<int>(rng() % 3));
    CHECK(d.pairing(d.apply_word(w, x), d.coapply_word(w, y)) == d.pairing(x, y));
    CHECK(det(d.word_matrix(w)) == Rational(w.size() % 2 == 0 ? 1 : -1));
  }
  CHECK_THROWS_AS(d.apply_word({0, 3}, d.simple_root(0)), Error);
}

TEST_CASE("snapshot words and coroots") {
  auto d = rdatum({{2, -1, 0}, {-1, 2, -2}, {0, -2, 2}});
  auto s = Snapshot<Rational>::enumerate(d, 6);
  for (std::size_t id = 0; id < s.size(); ++id) {
    CHECK(d.apply_word(s.word(id), d.simple_root(s.simple_of(id))) == s.root(id));
    CHECK(s.word(id).size() <= s.depth(id));
    CHECK(d.pairing(s.root(id), s.coroot(id)) == Rational(2));
    CHECK(sign_class(s.root(id)) == 1);
  }
}

TEST_CASE("canonical A~2 folds s1 s0 alpha1 onto alpha0") {
  Rational v(2);
  auto d = rdatum({{2, -v, -v.inverse()}, {-v.inverse(), 2, -1}, {-v, -1, 2}});
  auto r = d.apply_word({1, 0}, d.simple_root(1));
  CHECK(r == Vec<Rational>{v.inverse(), 0, 0});
  auto s = Snapshot<Rational>::enumerate(d, 4);
  CHECK(s.find(r) == std::optional<std::uint32_t>(0));
}

TEST_CASE("all-5 four-cycle roots") {
  auto d = cycle5();
  QuadExt t = QuadExt::golden();
  QuadExt one(1), z(0);
  for (std::size_t i = 0; i < 4; ++i) {
    std::size_t j = (i + 1) % 4;
    auto r = d.reflect(i, d.simple_root(j));
    Vec<QuadExt> want(4, z);
    want[j] = one;
    want[i] = t;
    CHECK(r == want);
  }
  auto b1 = d.simple_root(2);
  auto b2 = d.apply_word({3, 0, 3, 0}, d.simple_root(1));
  auto b3 = d.apply_word({1, 0, 1, 0}, d.simple_root(3));
  auto b4 = d.apply_word({3, 0, 3, 0, 2, 3, 2, 3}, d.simple_root(0));
  QuadExt u = one + QuadExt(2) * t;
  CHECK(b2 == qv({u, one, z, u}));
  CHECK(b3 == qv({u, u, z, one}));
  CHECK(b4 == qv({QuadExt(6) * t + QuadExt(4), z, u, QuadExt(8) * t + QuadExt(4)}));
  for (std::size_t j = 0; j < 4; ++j) CHECK(b3[j] + b4[j] == u * (b1[j] + b2[j]));
  auto sb2 = d.reflect(2, b2);
  for (std::size_t j = 0; j < 4; ++j) CHECK(sb2[j] == b2[j] + (QuadExt(4) * t + QuadExt(2)) * b1[j]);
}

TEST_CASE("reference keys agree across associates") {
  auto cox = CoxeterMatrix::from_labels({{1, 3, 2}, {3, 1, 0}, {2, 0, 1}});
  ReferenceRealization ref(cox);
  CHECK(ref.kind() == "standard");
  auto a = rdatum({{2, -1, 0}, {-1, 2, -2}, {0, -2, 2}});
  auto b = rdatum({{2, -2, 0}, {Rational(-1, 2), 2, -4}, {0, -1, 2}});
  auto c = rdatum({{2, -1, 0}, {-1, 2, -5}, {0, -1, 2}});
  auto sa = Snapshot<Rational>::enumerate(a, 6);
  auto sb = Snapshot<Rational>::enumerate(b, 6);
  auto sc = Snapshot<Rational>::enumerate(c, 6);
  auto ka = abstract_transfer(sa, ref);
  auto kb = abstract_transfer(sb, ref);
  auto kc = abstract_transfer(sc, ref);
  CHECK(sa.size() == sb.size());
  for (std::size_t id = 0; id < sa.size(); ++id) {
    auto x = b.apply_word(sa.word(id), b.simple_root(sa.simple_of(id)));
    auto other = sb.find(x);
    REQUIRE(other.has_value());
    CHECK(kb[*other] == ka[id]);
    for (std::size_t j = 0; j < id; ++j) CHECK_FALSE(ka[j] == ka[id]);
  }
  for (std::size_t id = 0; id < sc.size(); ++id)
    for (std::size_t j = 0; j < id; ++j) CHECK_FALSE(kc[j] == kc[id]);
  auto neg = elem_key(ka, neg_elem(3));
  CHECK(neg.sign == -1);
  CHECK(neg.ray == ka[3].ray);
}

TEST_CASE("reference realization falls back to the one-sided form") {
  auto cox = CoxeterMatrix::from_labels({{1, 4, 2}, {4, 1, 5}, {2, 5, 1}});
  ReferenceRealization ref(cox);
  CHECK(ref.kind() == "one-sided");
  auto s = Snapshot<QuadExt>::enumerate(ref.datum(), 5);
  CHECK(s.size() > 3);
  auto cyc = CoxeterMatrix::from_labels({{1, 5, 2, 5}, {5, 1, 5, 2}, {2, 5, 1, 5}, {5, 2, 5, 1}});
  CHECK(ReferenceRealization(cyc).kind() == "standard");
}

TEST_CASE("transfer commutes with the simple reflections") {
  auto cox = CoxeterMatrix::from_labels({{1, 3, 2}, {3, 1, 0}, {2, 0, 1}});
  ReferenceRealization ref(cox);
  auto d = rdatum({{2, -2, 0}, {Rational(-1, 2), 2, -5}, {0, -1, 2}});
  auto s = Snapshot<Rational>::enumerate(d, 5);
  auto keys = abstract_transfer(s, ref);
  std::size_t checked = 0;
  for (std::uint32_t id = 0; id < s.size(); ++id) {
    for (std::size_t p = 0; p < 3; ++p) {
      auto e = s.find_elem(d.reflect(p, s.root(id)));
      if (!e) continue;
      AbstractRoot want = ref.key_of_vector(ref.datum().reflect(p, keys[id].ray));
      want.sign = s.is_simple_multiple(id, p) ? -keys[id].sign : keys[id].sign;
      CHECK(elem_key(keys, *e) == want);
      ++checked;
    }
  }
  CHECK(checked > s.size());
}
