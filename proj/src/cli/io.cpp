#include "coxom/io.hpp"

#include <fstream>
#include <sstream>

namespace coxom {

json to_json(const Rational& x) { return x.str(); }

json to_json(const QuadExt& x) {
  return json{{"a", x.a().str()}, {"b", x.b().str()}, {"d", x.is_rational() ? 5 : x.d()}};
}

json to_json(const LaurentPoly& p) {
  json out = json::object();
  for (const auto& [e, c] : p.terms()) out[std::to_string(e)] = c.str();
  return out;
}

json to_json(const Interval& x) { return json{{"lo", x.lo_rational().str()}, {"hi", x.hi_rational().str()}}; }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw Error("expected a rational as a \"p/q\" string or an integer, got " + j.dump());
}

QuadExt quad_from_json(const json& j) {
  if (!j.is_object()) return QuadExt(rational_from_json(j));
  if (!j.contains("a") && !j.contains("b")) throw Error("quadratic scalar needs \"a\" and/or \"b\": " + j.dump());
  Rational a = j.contains("a") ? rational_from_json(j["a"]) : Rational(0);
  Rational b = j.contains("b") ? rational_from_json(j["b"]) : Rational(0);
  std::int64_t d = j.contains("d") ? j["d"].get<std::int64_t>() : 5;
  return QuadExt(std::move(a), std::move(b), d);
}

LaurentPoly laurent_from_json(const json& j) {
  if (!j.is_object()) return LaurentPoly(rational_from_json(j));
  std::vector<LaurentPoly::Term> terms;
  for (const auto& [k, c] : j.items()) {
    std::size_t pos = 0;
    int e = 0;
    try {
      e = std::stoi(k, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != k.size()) throw Error("Laurent exponent must be an integer, got \"" + k + "\"");
    terms.emplace_back(e, rational_from_json(c));
  }
  return LaurentPoly::from_terms(std::move(terms));
}

// A rational point, {"lo","hi"}, or {"cos_pi_over": m, "scale": q} for q cos(pi/m).
Interval interval_from_json(const json& j) {
  if (!j.is_object()) return Interval(rational_from_json(j));
  if (j.contains("cos_pi_over")) {
    Interval c = Interval::cos_pi_over(j["cos_pi_over"].get<int>());
    if (j.contains("scale")) c *= Interval(rational_from_json(j["scale"]));
    return c;
  }
  if (!j.contains("lo") || !j.contains("hi")) throw Error("interval scalar needs \"lo\" and \"hi\": " + j.dump());
  return Interval(rational_from_json(j["lo"]), rational_from_json(j["hi"]));
}

AnyMatrix ngcm_from_json(const json& j) {
  if (!j.is_object()) throw Error("NGCM JSON must be an object");
  for (const char* k : {"rank", "tower", "entries"})
    if (!j.contains(k)) throw Error(std::string("NGCM JSON is missing \"") + k + "\"");
  const auto n = j["rank"].get<std::size_t>();
  const auto tower = j["tower"].get<std::string>();
  const json& e = j["entries"];
  if (tower == "rational") return matrix_from_json<Rational>(e, n);
  if (tower == "quad5") return matrix_from_json<QuadExt>(e, n);
  if (tower == "laurent") return matrix_from_json<LaurentPoly>(e, n);
  if (tower == "interval") return matrix_from_json<Interval>(e, n);
  throw Error("unknown tower \"" + tower + "\" (rational, quad5, laurent, interval)");
}

std::string tower_of(const AnyMatrix& m) {
  return std::visit([](const auto& x) -> std::string { return tower_name<typename std::decay_t<decltype(x)>::value_type>(); }, m);
}

Matrix<QuadExt> as_quad(const AnyMatrix& m) {
  if (const auto* q = std::get_if<Matrix<QuadExt>>(&m)) return *q;
  if (const auto* r = std::get_if<Matrix<Rational>>(&m)) {
    Matrix<QuadExt> out(r->rows(), r->cols());
    for (std::size_t i = 0; i < r->rows(); ++i)
      for (std::size_t k = 0; k < r->cols(); ++k) out(i, k) = QuadExt((*r)(i, k));
    return out;
  }
  throw Error("expected a rational or quad5 NGCM, got tower " + tower_of(m));
}

json coxeter_to_json(const CoxeterMatrix& c) {
  json rows = json::array();
  for (std::size_t r = 0; r < c.rank(); ++r) {
    json row = json::array();
    for (std::size_t s = 0; s < c.rank(); ++s) row.push_back(r == s ? "1" : c.label(r, s));
    rows.push_back(row);
  }
  return rows;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << text;
  if (!out) throw Error("write failed for " + path);
}

json word_to_json(const Word& w) { return json(w); }

Word word_from_json(const json& j) {
  if (!j.is_array()) throw Error("a word must be an array of generator indices");
  return j.get<Word>();
}

json root_index_to_json(const affine_a::RootIndex& r) {
  return json{{"eta", r.eta}, {"m", r.m}, {"k", r.k}, {"i", r.i}, {"j", r.j}};
}

affine_a::RootIndex root_index_from_json(const json& j) {
  affine_a::RootIndex r;
  if (j.is_array()) {
    if (j.size() != 5) throw Error("root index array must be [eta, m, k, i, j]");
    r = {j[0].get<int>(), j[1].get<int>(), j[2].get<int>(), j[3].get<int>(), j[4].get<int>()};
    return r;
  }
  if (!j.is_object()) throw Error("root index must be an object or [eta, m, k, i, j]");
  r.eta = j.at("eta").get<int>();
  r.m = j.at("m").get<int>();
  r.k = j.at("k").get<int>();
  r.i = j.at("i").get<int>();
  r.j = j.at("j").get<int>();
  return r;
}

json factored_to_json(const affine_a::FactoredDet& f) {
  json out{{"tag", affine_a::tag_name(f.tag)}};
  if (f.tag == affine_a::FactoredDet::Tag::kFactored) {
    out["mu"] = f.mu;
    out["l"] = f.l;
    out["m"] = f.m;
    out["h"] = f.h;
  }
  return out;
}

affine_a::FactoredDet factored_from_json(const json& j) {
  affine_a::FactoredDet f;
  const auto tag = j.at("tag").get<std::string>();
  if (tag == affine_a::tag_name(affine_a::FactoredDet::Tag::kZero)) {
    f.tag = affine_a::FactoredDet::Tag::kZero;
  } else if (tag == affine_a::tag_name(affine_a::FactoredDet::Tag::kNotOfForm)) {
    f.tag = affine_a::FactoredDet::Tag::kNotOfForm;
  } else if (tag == affine_a::tag_name(affine_a::FactoredDet::Tag::kFactored)) {
    f.tag = affine_a::FactoredDet::Tag::kFactored;
    f.mu = j.at("mu").get<int>();
    f.l = j.at("l").get<int>();
    f.m = j.at("m").get<int>();
    f.h = j.at("h").get<std::vector<int>>();
  } else {
    throw Error("unknown determinant tag \"" + tag + "\"");
  }
  return f;
}

json abstract_root_to_json(const AbstractRoot& k) { return json{{"ray", vec_to_json(k.ray)}, {"sign", k.sign}}; }

AnySnapshot enumerate_any(const AnyMatrix& m, unsigned depth, const std::optional<Rational>& v) {
  if (depth > 255) throw Error("enumerate: depth must be at most 255");
  if (const auto* r = std::get_if<Matrix<Rational>>(&m)) return Snapshot<Rational>::enumerate(RootDatum<Rational>(make_ngcm(*r)), depth);
  if (const auto* q = std::get_if<Matrix<QuadExt>>(&m)) return Snapshot<QuadExt>::enumerate(RootDatum<QuadExt>(make_ngcm(*q)), depth);
  if (const auto* l = std::get_if<Matrix<LaurentPoly>>(&m)) {
    if (!v) throw Error("enumerate: a laurent NGCM needs a concrete value --v");
    if (v->sign() <= 0) throw Error("enumerate: v must be positive");
    make_ngcm(*l);
    Matrix<Rational> at(l->rows(), l->cols());
    for (std::size_t i = 0; i < l->rows(); ++i)
      for (std::size_t k = 0; k < l->cols(); ++k) at(i, k) = (*l)(i, k).eval(*v);
    return Snapshot<Rational>::enumerate(RootDatum<Rational>(make_ngcm(at)), depth);
  }
  throw Error("enumerate: interval NGCMs have no exact root system; use an exact tower");
}

namespace {

template <class F>
void check_snapshot(const Snapshot<F>& s, const json& j) {
  const json& rays = j.at("rays");
  if (rays.size() != s.size())
    throw Error("snapshot: file has " + std::to_string(rays.size()) + " rays, recomputation has " + std::to_string(s.size()));
  for (std::size_t id = 0; id < s.size(); ++id) {
    if (vec_from_json<F>(rays[id].at("coords")) != s.root(id))
      throw Error("snapshot: coordinates of ray " + std::to_string(id) + " do not match the recomputation");
  }
}

}  // namespace

AnySnapshot snapshot_from_json(const json& j) {
  if (!j.is_object() || !j.contains("ngcm") || !j.contains("depth") || !j.contains("rays"))
    throw Error("snapshot JSON needs \"ngcm\", \"depth\" and \"rays\"");
  AnySnapshot s = enumerate_any(ngcm_from_json(j["ngcm"]), j["depth"].get<unsigned>());
  std::visit([&](const auto& x) { check_snapshot(x, j); }, s);
  return s;
}

std::vector<Elem> elems_from_json(const json& j) {
  if (!j.is_array()) throw Error("a set must be a JSON array");
  std::vector<Elem> out;
  auto make = [](long long id, int sign) -> Elem {
    if (id < 0 || id >= (1LL << 31)) throw Error("ray id out of range: " + std::to_string(id));
    return sign < 0 ? neg_elem(static_cast<std::uint32_t>(id)) : pos_elem(static_cast<std::uint32_t>(id));
  };
  for (const auto& x : j) {
    if (x.is_number_integer()) {
      out.push_back(make(x.get<long long>(), 1));
    } else if (x.is_string()) {
      auto s = x.get<std::string>();
      int sign = 1;
      if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        sign = s[0] == '-' ? -1 : 1;
        s.erase(0, 1);
      }
      std::size_t pos = 0;
      long long id = -1;
      try {
        id = std::stoll(s, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos == 0 || pos != s.size()) throw Error("bad set element \"" + x.get<std::string>() + "\"");
      out.push_back(make(id, sign));
    } else if (x.is_object()) {
      int sign = x.contains("sign") ? x["sign"].get<int>() : 1;
      if (sign != 1 && sign != -1) throw Error("set element sign must be +1 or -1");
      out.push_back(make(x.at("id").get<long long>(), sign));
    } else {
      throw Error("bad set element " + x.dump());
    }
  }
  return out;
}

json elem_to_json(Elem e) { return (elem_negative(e) ? "-" : "+") + std::to_string(elem_ray(e)); }

}  // namespace coxom
