#pragma once

// Helpers shared by the scenario runners and the certificate rechecker.

#include <string>
#include <vector>

#include "coxom/io.hpp"

namespace coxom::verify {

// Interval sign of the homotopy determinant at t with `bits` of precision.
int homotopy_interval_sign(const NGCM<QuadExt>& a, const NGCM<QuadExt>& b, const Rational& t,
                           const std::vector<std::pair<Word, std::size_t>>& roots, unsigned bits, bool& certified);

// Nonempty when the reference keys force a zero determinant.
std::string zero_reason(const ReferenceRealization& ref, const std::vector<std::pair<Word, std::size_t>>& roots);

}  // namespace coxom::verify

namespace coxom::verify::cert {

inline json root_ref(const Word& w, std::size_t simple) { return json{{"word", w}, {"simple", simple}}; }

inline Word ref_word(const json& r) { return word_from_json(r.at("word")); }
inline std::size_t ref_simple(const json& r) { return r.at("simple").get<std::size_t>(); }

inline Vec<QuadExt> root_of(const RootDatum<QuadExt>& d, const json& r) {
  return d.apply_word(ref_word(r), d.simple_root(ref_simple(r)));
}

inline Vec<QuadExt> coroot_of(const RootDatum<QuadExt>& d, const json& r) {
  return d.coapply_word(ref_word(r), d.simple_root(ref_simple(r)));
}

inline RootDatum<QuadExt> datum_from(const json& ngcm) { return RootDatum<QuadExt>(make_ngcm(as_quad(ngcm_from_json(ngcm)))); }

inline char sign_char(int s) { return s > 0 ? '+' : (s < 0 ? '-' : '0'); }

inline int det_sign(const std::vector<Vec<QuadExt>>& cols) { return sign(det(Matrix<QuadExt>::from_columns(cols))); }

inline Vec<QuadExt> combine(const std::vector<Vec<QuadExt>>& vs, const std::vector<QuadExt>& coeffs) {
  Vec<QuadExt> out(vs.front().size(), QuadExt(0));
  for (std::size_t k = 0; k < vs.size(); ++k)
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += coeffs[k] * vs[k][i];
  return out;
}

// Walks x down by simple reflections of J while some (x, beta^vee) > 0.
// 1: reached J (x is a root of the subsystem), 0: stuck outside, -1: gave up.
inline int descend(const RootDatum<QuadExt>& d, Vec<QuadExt> x, const std::vector<Vec<QuadExt>>& j,
                   const std::vector<Vec<QuadExt>>& jv, int cap = 64) {
  for (int it = 0; it < cap; ++it) {
    for (const auto& b : j)
      if (x == b) return 1;
    bool moved = false;
    for (std::size_t k = 0; k < j.size() && !moved; ++k) {
      if (sign(d.pairing(x, jv[k])) > 0) {
        x = d.reflect_by_root(x, j[k], jv[k]);
        moved = true;
      }
    }
    if (!moved || sign_class(x) < 0) return 0;
  }
  return -1;
}

// gamma = b x + c y with b, c > 0?
inline bool positive_pair_combination(const Vec<QuadExt>& x, const Vec<QuadExt>& y, const Vec<QuadExt>& g) {
  const std::size_t n = x.size();
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      QuadExt m = x[p] * y[q] - x[q] * y[p];
      if (is_zero(m)) continue;
      QuadExt b = (g[p] * y[q] - g[q] * y[p]) / m;
      QuadExt c = (x[p] * g[q] - x[q] * g[p]) / m;
      for (std::size_t i = 0; i < n; ++i)
        if (!(b * x[i] + c * y[i] == g[i])) return false;
      return sign(b) > 0 && sign(c) > 0;
    }
  }
  return false;
}

// Both sides of a two-coloured ray list closed under positive pair combinations
// inside the list; returns a description of the first violation.
inline std::string plane_violation(const std::vector<Vec<QuadExt>>& rays, const std::vector<int>& side) {
  const std::size_t n = rays.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (side[a] != side[b]) continue;
      for (std::size_t g = 0; g < n; ++g) {
        if (g == a || g == b || side[g] == side[a]) continue;
        if (positive_pair_combination(rays[a], rays[b], rays[g]))
          return "ray " + std::to_string(g) + " is a positive combination of rays " + std::to_string(a) + " and " +
                 std::to_string(b) + " on the other side";
      }
    }
  return {};
}

inline std::string signs_string(const std::vector<int>& s) {
  std::string out;
  for (int x : s) out.push_back(sign_char(x));
  return out;
}

}  // namespace coxom::verify::cert
