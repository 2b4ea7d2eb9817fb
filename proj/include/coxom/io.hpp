#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "coxom/affine_a.hpp"
#include "coxom/rootsys.hpp"

namespace coxom {

using json = nlohmann::json;

json to_json(const Rational& x);
json to_json(const QuadExt& x);
json to_json(const LaurentPoly& p);
json to_json(const Interval& x);

Rational rational_from_json(const json& j);
QuadExt quad_from_json(const json& j);
LaurentPoly laurent_from_json(const json& j);
Interval interval_from_json(const json& j);

template <class F>
F scalar_from_json(const json& j);
template <>
inline Rational scalar_from_json<Rational>(const json& j) { return rational_from_json(j); }
template <>
inline QuadExt scalar_from_json<QuadExt>(const json& j) { return quad_from_json(j); }
template <>
inline LaurentPoly scalar_from_json<LaurentPoly>(const json& j) { return laurent_from_json(j); }
template <>
inline Interval scalar_from_json<Interval>(const json& j) { return interval_from_json(j); }

template <class F>
json vec_to_json(const std::vector<F>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

template <class F>
std::vector<F> vec_from_json(const json& j) {
  if (!j.is_array()) throw Error("expected a JSON array of scalars");
  std::vector<F> out;
  for (const auto& x : j) out.push_back(scalar_from_json<F>(x));
  return out;
}

template <class F>
json matrix_to_json(const Matrix<F>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

template <class F>
Matrix<F> matrix_from_json(const json& rows, std::size_t n) {
  if (!rows.is_array() || rows.size() != n) throw Error("NGCM entries must be an n x n array");
  Matrix<F> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) throw Error("NGCM row " + std::to_string(i) + " has wrong length");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = scalar_from_json<F>(rows[i][j]);
  }
  return m;
}

template <class F>
json ngcm_to_json(const Matrix<F>& m) {
  return json{{"rank", m.rows()}, {"tower", tower_name<F>()}, {"entries", matrix_to_json(m)}};
}

using AnyMatrix = std::variant<Matrix<Rational>, Matrix<QuadExt>, Matrix<LaurentPoly>, Matrix<Interval>>;

// {"rank": n, "tower": "rational"|"quad5"|"laurent"|"interval", "entries": [[...]]}
AnyMatrix ngcm_from_json(const json& j);
std::string tower_of(const AnyMatrix& m);

// Embed a rational or quadratic matrix into Q(sqrt d); throws for other towers.
Matrix<QuadExt> as_quad(const AnyMatrix& m);

json coxeter_to_json(const CoxeterMatrix& c);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

json word_to_json(const Word& w);
Word word_from_json(const json& j);

json root_index_to_json(const affine_a::RootIndex& r);
affine_a::RootIndex root_index_from_json(const json& j);
json factored_to_json(const affine_a::FactoredDet& f);
affine_a::FactoredDet factored_from_json(const json& j);

json abstract_root_to_json(const AbstractRoot& k);

template <class F>
json snapshot_to_json(const Snapshot<F>& s, const ReferenceRealization* ref) {
  json rays = json::array();
  for (std::size_t id = 0; id < s.size(); ++id) {
    json r{{"id", id},
           {"coords", vec_to_json(s.root(id))},
           {"word", word_to_json(s.word(id))},
           {"simple", s.simple_of(id)},
           {"depth", s.depth(id)}};
    if (ref) r["key"] = abstract_root_to_json(ref->key(s.word(id), s.simple_of(id)));
    rays.push_back(std::move(r));
  }
  json out{{"ngcm", ngcm_to_json(s.datum().c())},
           {"coxeter", coxeter_to_json(s.datum().ngcm().coxeter)},
           {"depth", s.depth_bound()},
           {"size", s.size()}};
  if (ref) out["reference"] = ref->kind();
  out["rays"] = std::move(rays);
  return out;
}

using AnySnapshot = std::variant<Snapshot<Rational>, Snapshot<QuadExt>>;

// Laurent entries are specialised at a concrete positive v; interval
// matrices cannot be enumerated.
AnySnapshot enumerate_any(const AnyMatrix& m, unsigned depth, const std::optional<Rational>& v = std::nullopt);

// Rebuilds the snapshot from the embedded NGCM and depth and checks every
// exported coordinate against the recomputation.
AnySnapshot snapshot_from_json(const json& j);

// Elements of a snapshot: an id (positive ray), "+id"/"-id", or {"id": i, "sign": -1}.
std::vector<Elem> elems_from_json(const json& j);
json elem_to_json(Elem e);

}  // namespace coxom
