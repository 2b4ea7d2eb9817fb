#include <map>

#include "cert.hpp"
#include "coxom/verify.hpp"

namespace coxom::verify {

namespace {

using affine_a::FactoredDet;

std::vector<affine_a::RootIndex> tuple_from(const json& j) {
  std::vector<affine_a::RootIndex> t;
  for (const auto& r : j) t.push_back(root_index_from_json(r));
  return t;
}

std::string signs_at(const LaurentPoly& p, const std::vector<Rational>& pts) {
  std::string s;
  for (const auto& q : pts) s.push_back(cert::sign_char(laurent_sign_at(p, q)));
  return s;
}

std::vector<std::pair<Word, std::size_t>> roots_from(const json& j) {
  std::vector<std::pair<Word, std::size_t>> out;
  for (const auto& r : j) out.emplace_back(cert::ref_word(r), cert::ref_simple(r));
  return out;
}

// Data of a factor_items certificate: every determinant, certificate and sign
// string is recomputed from the tuple.
std::string factor_items_data(const json& c) {
  const int n = c.at("n").get<int>();
  std::vector<Rational> pts;
  for (const auto& q : c.at("points")) pts.push_back(rational_from_json(q));
  std::size_t k = 0;
  for (const auto& it : c.at("items")) {
    const std::string where = "item " + std::to_string(k++);
    LaurentPoly p = affine_a::det_roots(tuple_from(it.at("tuple")), n);
    if (!(p == laurent_from_json(it.at("det")))) return where + ": determinant differs";
    FactoredDet f = factored_from_json(it.at("factored"));
    if (f.tag == FactoredDet::Tag::kZero && !p.is_zero()) return where + ": tagged Zero but nonzero";
    if (f.tag == FactoredDet::Tag::kFactored && !(f.expand() == p)) return where + ": certificate does not re-expand";
    if (signs_at(p, pts) != it.at("signs").get<std::string>()) return where + ": signs differ";
  }
  return {};
}

std::string factor_items_property(const json& c, const std::string& prop) {
  std::size_t k = 0;
  for (const auto& it : c.at("items")) {
    const std::string where = "item " + std::to_string(k++);
    FactoredDet f = factored_from_json(it.at("factored"));
    const auto sg = it.at("signs").get<std::string>();
    if (prop == "no_not_of_form" || prop == "reexpand") {
      if (f.tag == FactoredDet::Tag::kNotOfForm) return where + ": NotOfForm";
    } else if (prop == "regime_agrees") {
      if (f.tag == FactoredDet::Tag::kNotOfForm) continue;
      LaurentPoly p = laurent_from_json(it.at("det"));
      std::string r;
      for (const auto& reg : {SignRegime::below_one(), SignRegime::one(), SignRegime::above_one()})
        r.push_back(cert::sign_char(affine_a::chirotope_sign(f, p, reg)));
      if (r != std::string{sg[1], sg[3], sg[5]}) return where + ": regime sign differs from evaluation";
    } else if (prop == "m_is_1") {
      if (f.tag == FactoredDet::Tag::kFactored && f.m != 1) return where + ": m > 1";
    } else if (prop == "regime_independent") {
      if (sg.find_first_not_of(sg[0]) != std::string::npos) return where + ": sign depends on v";
    } else if (prop == "regime_constant") {
      if (sg[0] != sg[1] || sg[1] != sg[2] || sg[4] != sg[5] || sg[5] != sg[6]) return where + ": not constant in a regime";
    } else {
      return "unknown property " + prop;
    }
  }
  return {};
}

std::string homotopy_data(const json& c) {
  auto ma = as_quad(ngcm_from_json(c.at("a")));
  auto mb = as_quad(ngcm_from_json(c.at("b")));
  auto a = make_ngcm(ma);
  auto b = make_ngcm(mb);
  RootDatum<QuadExt> da(a), db(b);
  ReferenceRealization ref(a.coxeter);
  const auto grid = c.at("grid").get<std::size_t>();
  std::size_t k = 0;
  for (const auto& tr : c.at("triples")) {
    const std::string where = "triple " + std::to_string(k++);
    auto roots = roots_from(tr.at("roots"));
    const bool zero = tr.at("zero").get<bool>();
    if (zero_reason(ref, roots).empty() == zero) return where + ": zero predicate differs";
    const auto signs = tr.at("signs").get<std::string>();
    const auto bits = tr.at("bits").get<std::vector<unsigned>>();
    if (signs.size() != grid || bits.size() != grid) return where + ": grid length differs";
    for (std::size_t g = 0; g < grid; ++g) {
      if (signs[g] == '?') continue;
      bool ok = false;
      int s = homotopy_interval_sign(a, b, Rational(static_cast<std::int64_t>(g), static_cast<std::int64_t>(grid - 1)),
                                     roots, bits[g], ok);
      if (cert::sign_char(s) != signs[g]) return where + ": interval sign differs at grid point " + std::to_string(g);
      if (!zero && !ok) return where + ": interval sign not certified at grid point " + std::to_string(g);
    }
    std::vector<Vec<QuadExt>> ca, cb;
    for (const auto& [w, s] : roots) {
      ca.push_back(da.apply_word(w, da.simple_root(s)));
      cb.push_back(db.apply_word(w, db.simple_root(s)));
    }
    if (!zero && (cert::sign_char(cert::det_sign(ca)) != signs.front() ||
                  cert::sign_char(cert::det_sign(cb)) != signs.back()))
      return where + ": exact endpoint sign differs";
  }
  return {};
}

std::string homotopy_property(const json& c, const std::string& prop) {
  RootDatum<QuadExt> da = cert::datum_from(c.at("a")), db = cert::datum_from(c.at("b"));
  std::size_t k = 0;
  for (const auto& tr : c.at("triples")) {
    const std::string where = "triple " + std::to_string(k++);
    const bool zero = tr.at("zero").get<bool>();
    const auto signs = tr.at("signs").get<std::string>();
    if (prop == "endpoints") {
      std::vector<Vec<QuadExt>> ca, cb;
      for (const auto& [w, s] : roots_from(tr.at("roots"))) {
        ca.push_back(da.apply_word(w, da.simple_root(s)));
        cb.push_back(db.apply_word(w, db.simple_root(s)));
      }
      if (zero != (cert::det_sign(ca) == 0) || zero != (cert::det_sign(cb) == 0))
        return where + ": predicate disagrees with an exact endpoint";
    } else if (prop == "zero_contained") {
      if (zero && signs.find_first_not_of('0') != std::string::npos) return where + ": interval excludes zero";
    } else if (prop == "certified") {
      if (signs.find('?') != std::string::npos) return where + ": uncertified grid sign";
    } else if (prop == "constant") {
      if (signs.find_first_not_of(signs[0]) != std::string::npos) return where + ": sign changes";
    } else {
      return "unknown property " + prop;
    }
  }
  return {};
}

std::string linear_combo(const json& c) {
  auto d = cert::datum_from(c.at("ngcm"));
  std::vector<Vec<QuadExt>> vs;
  std::vector<QuadExt> coeffs;
  for (const auto& t : c.at("terms")) {
    vs.push_back(cert::root_of(d, t.at("root")));
    coeffs.push_back(quad_from_json(t.at("coeff")));
    if (sign(coeffs.back()) <= 0) return "non-positive coefficient " + coeffs.back().str();
  }
  if (vs.empty()) return "no terms";
  if (!(cert::combine(vs, coeffs) == cert::root_of(d, c.at("target")))) return "combination does not equal the target";
  return {};
}

struct Sources {
  std::map<std::string, json> by_name;
  std::map<std::string, std::string> data_errors;  // memoized data checks
};

std::string source_data(Sources& src_map, const std::string& name, const json& src) {
  auto memo = src_map.data_errors.find(name);
  if (memo == src_map.data_errors.end()) {
    const auto kind = src.at("kind").get<std::string>();
    memo = src_map.data_errors.emplace(name, kind == "factor_items" ? factor_items_data(src) : homotopy_data(src)).first;
  }
  return memo->second;
}

std::string dispatch(const json& c, const std::string& name, Sources& src_map) {
  const auto kind = c.at("kind").get<std::string>();
  if (kind == "derived") {
    const auto from = c.at("from").get<std::string>();
    auto it = src_map.by_name.find(from);
    if (it == src_map.by_name.end() || !it->second.contains("certificate")) return "source check missing";
    const json& src = it->second["certificate"];
    const auto prop = c.at("property").get<std::string>();
    const auto skind = src.at("kind").get<std::string>();
    if (skind != "factor_items" && skind != "homotopy_triples") return "derived from unsupported kind " + skind;
    auto e = source_data(src_map, from, src);
    if (!e.empty()) return e;
    return skind == "factor_items" ? factor_items_property(src, prop) : homotopy_property(src, prop);
  }
  if (kind == "factor_items") {
    auto e = source_data(src_map, name, c);
    return e.empty() ? factor_items_property(c, "no_not_of_form") : e;
  }
  if (kind == "homotopy_triples") {
    auto e = source_data(src_map, name, c);
    return e.empty() ? homotopy_property(c, "endpoints") : e;
  }
  if (kind == "tuple_sign") {
    const int n = c.at("n").get<int>();
    LaurentPoly p = affine_a::det_roots(tuple_from(c.at("tuple")), n);
    if (!(p == laurent_from_json(c.at("det")))) return "determinant differs";
    if (signs_at(p, {Rational(1, 2), Rational(1), Rational(2)}) != c.at("signs").get<std::string>()) return "signs differ";
    return {};
  }
  if (kind == "labels") {
    auto ngcm = make_ngcm(as_quad(ngcm_from_json(c.at("ngcm"))));
    if (!(coxeter_to_json(ngcm.coxeter) == c.at("labels"))) return "labels differ";
    return {};
  }
  if (kind == "det_sign") {
    auto d = cert::datum_from(c.at("ngcm"));
    std::vector<Vec<QuadExt>> cols;
    for (const auto& r : c.at("columns")) cols.push_back(cert::root_of(d, r));
    if (cert::det_sign(cols) != c.at("sign").get<int>()) return "determinant sign differs";
    return {};
  }
  if (kind == "coords") {
    auto d = cert::datum_from(c.at("ngcm"));
    for (const auto& it : c.at("items"))
      if (!(cert::root_of(d, it.at("root")) == vec_from_json<QuadExt>(it.at("coords"))))
        return "coordinates differ for word " + it.at("root").at("word").dump();
    return {};
  }
  if (kind == "pairings") {
    auto d = cert::datum_from(c.at("ngcm"));
    for (const auto& it : c.at("items"))
      if (!(d.pairing(cert::root_of(d, it.at("x")), cert::coroot_of(d, it.at("y"))) == quad_from_json(it.at("value"))))
        return "pairing differs";
    return {};
  }
  if (kind == "linear_combo") return linear_combo(c);
  if (kind == "linear_relation") {
    auto d = cert::datum_from(c.at("ngcm"));
    auto side = [&](const json& terms) {
      std::vector<Vec<QuadExt>> vs;
      std::vector<QuadExt> cs;
      for (const auto& t : terms) {
        vs.push_back(cert::root_of(d, t.at("root")));
        cs.push_back(quad_from_json(t.at("coeff")));
      }
      return cert::combine(vs, cs);
    };
    if (!(side(c.at("left")) == side(c.at("right")))) return "relation fails";
    return {};
  }
  if (kind == "pair_products") {
    auto d = cert::datum_from(c.at("ngcm"));
    const json& roots = c.at("roots");
    for (const auto& it : c.at("products")) {
      auto p = it.at("p").get<std::size_t>(), q = it.at("q").get<std::size_t>();
      if (p == q) return "product of a root with itself";
      auto bp = cert::root_of(d, roots.at(p)), bq = cert::root_of(d, roots.at(q));
      auto vp = cert::coroot_of(d, roots.at(p)), vq = cert::coroot_of(d, roots.at(q));
      QuadExt v = d.pairing(bp, vq) * d.pairing(bq, vp);
      if (!(v == quad_from_json(it.at("product")))) return "product differs";
      if (sign(v - QuadExt(4)) < 0) return "product below 4";
    }
    return {};
  }
  if (kind == "plane_closed" || kind == "outside_parabolic") {
    auto d = cert::datum_from(c.at("ngcm"));
    std::vector<Vec<QuadExt>> j, jv;
    for (const auto& r : c.at("j")) {
      j.push_back(cert::root_of(d, r));
      jv.push_back(cert::coroot_of(d, r));
    }
    auto orthogonal = [&](const Vec<QuadExt>& x) { return is_zero(d.pair_simple_coroot(std::span<const QuadExt>(x), 0)); };
    if (kind == "outside_parabolic") {
      auto x = cert::root_of(d, c.at("root"));
      if (!orthogonal(x) || sign_class(x) <= 0) return "witness is not a positive root orthogonal to alpha_1";
      if (cert::descend(d, x, j, jv) != 0) return "witness descends into the parabolic subsystem";
      const json& combo = c.at("combo");
      for (const auto& t : combo.at("terms"))
        if (cert::descend(d, cert::root_of(d, t.at("root")), j, jv) != 1) return "cone generator outside Xi'";
      if (!(combo.at("target") == c.at("root"))) return "combination target is not the witness";
      return linear_combo(combo);
    }
    std::vector<Vec<QuadExt>> rays;
    std::vector<int> side;
    for (const auto& it : c.at("rays")) {
      auto x = cert::root_of(d, it.at("root"));
      if (!orthogonal(x) || sign_class(x) <= 0) return "listed ray is not a positive root orthogonal to alpha_1";
      int r = cert::descend(d, x, j, jv);
      if (r != (it.at("in_xi").get<bool>() ? 1 : 0)) return "side of a listed ray differs";
      rays.push_back(std::move(x));
      side.push_back(r);
    }
    return cert::plane_violation(rays, side);
  }
  if (kind == "symmetrization") {
    for (const auto& it : c.at("items")) {
      auto m = as_quad(ngcm_from_json(it.at("ngcm")));
      auto dd = vec_from_json<QuadExt>(it.at("d"));
      for (const auto& x : dd)
        if (sign(x) <= 0) return "non-positive rescaling factor";
      auto r = rescale(m, dd);
      for (std::size_t a = 0; a < r.rows(); ++a)
        for (std::size_t b = 0; b < a; ++b)
          if (!(r(a, b) == r(b, a))) return "rescaled matrix is not symmetric";
    }
    return {};
  }
  if (kind == "matched_signs") {
    std::vector<RootDatum<QuadExt>> data;
    for (const auto& m : c.at("realizations")) data.push_back(cert::datum_from(m));
    for (std::size_t k = 1; k < data.size(); ++k)
      if (!(data[k].ngcm().coxeter == data[0].ngcm().coxeter)) return "realizations of different Coxeter matrices";
    std::size_t k = 0;
    for (const auto& t : c.at("tuples")) {
      auto roots = roots_from(t.at("roots"));
      std::vector<int> signs;
      for (const auto& dt : data) {
        std::vector<Vec<QuadExt>> cols;
        for (const auto& [w, s] : roots) cols.push_back(dt.apply_word(w, dt.simple_root(s)));
        signs.push_back(cert::det_sign(cols));
      }
      auto s = cert::signs_string(signs);
      if (s != t.at("signs").get<std::string>()) return "tuple " + std::to_string(k) + ": signs differ";
      if (s.find_first_not_of(s[0]) != std::string::npos) return "tuple " + std::to_string(k) + ": signs not identical";
      ++k;
    }
    return {};
  }
  return "unknown certificate kind " + kind;
}

}  // namespace

std::vector<std::string> recheck(const json& report) {
  std::vector<std::string> failures;
  if (!report.is_object() || !report.contains("checks") || !report["checks"].is_array())
    return {"not a scenario report"};
  Sources sources;
  for (const auto& c : report["checks"]) sources.by_name[c.at("name").get<std::string>()] = c;
  bool all = !report["checks"].empty() && !report.value("contaminated", false);
  for (const auto& c : report["checks"]) {
    const auto name = c.at("name").get<std::string>();
    const bool ok = c.at("pass").get<bool>();
    all = all && ok;
    if (!ok || !c.contains("certificate")) continue;
    try {
      auto e = dispatch(c["certificate"], name, sources);
      if (!e.empty()) failures.push_back(name + ": " + e);
    } catch (const std::exception& ex) {
      failures.push_back(name + ": " + ex.what());
    }
  }
  if (report.value("pass", false) != all) failures.push_back("recorded overall verdict disagrees with the checks");
  return failures;
}

}  // namespace coxom::verify
