#include "coxom/rootsys.hpp"

namespace coxom {

std::string word_str(const Word& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + "]";
}

std::string AbstractRoot::str() const {
  std::string s = sign > 0 ? "+(" : "-(";
  for (std::size_t i = 0; i < ray.size(); ++i) s += (i ? ", " : "") + ray[i].str();
  return s + ")";
}

namespace {

bool single_field(const Matrix<QuadExt>& c) {
  std::int64_t d = 0;
  for (std::size_t i = 0; i < c.rows(); ++i) {
    for (std::size_t j = 0; j < c.cols(); ++j) {
      std::int64_t e = c(i, j).d();
      if (e == 0) continue;
      if (d != 0 && e != d) return false;
      d = e;
    }
  }
  return true;
}

}  // namespace

std::optional<Matrix<QuadExt>> standard_ngcm(const CoxeterMatrix& cox) {
  const std::size_t n = cox.rank();
  Matrix<QuadExt> c(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    c(r, r) = QuadExt(2);
    for (std::size_t s = 0; s < n; ++s) {
      if (r == s) continue;
      auto v = two_cos_exact(cox(r, s));
      if (!v) return std::nullopt;
      c(r, s) = -*v;
    }
  }
  if (!single_field(c)) return std::nullopt;
  return c;
}

RootDatum<QuadExt> ReferenceRealization::build(const CoxeterMatrix& cox, std::string& kind) {
  if (auto c = standard_ngcm(cox)) {
    kind = "standard";
    return RootDatum<QuadExt>(make_ngcm(*c, cox));
  }
  const std::size_t n = cox.rank();
  Matrix<QuadExt> c(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    c(r, r) = QuadExt(2);
    for (std::size_t s = r + 1; s < n; ++s) {
      int m = cox(r, s);
      if (m == 2) continue;
      std::optional<QuadExt> p = m == CoxeterMatrix::kInfinity ? QuadExt(4) : four_cos_sq_exact(m);
      if (!p) throw Error("reference realization: 4cos^2(pi/" + std::to_string(m) + ") is not quadratic");
      c(r, s) = QuadExt(-1);
      c(s, r) = -*p;
    }
  }
  if (!single_field(c)) throw Error("reference realization: labels need two different quadratic fields");
  kind = "one-sided";
  return RootDatum<QuadExt>(make_ngcm(c, cox));
}

ReferenceRealization::ReferenceRealization(const CoxeterMatrix& cox) : datum_(build(cox, kind_)) {}

AbstractRoot ReferenceRealization::key_of_vector(const Vec<QuadExt>& x) const {
  int sc = sign_class(x);
  if (sc == 0) throw Error("reference realization: vector is not sign coherent");
  AbstractRoot k;
  if (sc > 0) {
    k.ray = normalize_ray(std::span<const QuadExt>(x));
  } else {
    Vec<QuadExt> neg = x;
    for (auto& c : neg) c = -c;
    k.ray = normalize_ray(std::span<const QuadExt>(neg));
  }
  k.sign = sc;
  return k;
}

AbstractRoot ReferenceRealization::key(const Word& w, std::size_t simple, int sign) const {
  AbstractRoot k = key_of_vector(datum_.apply_word(w, datum_.simple_root(simple)));
  k.sign *= sign;
  return k;
}

}  // namespace coxom
