#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "coxom/coxeter.hpp"
#include "coxom/error.hpp"
#include "coxom/linalg.hpp"
#include "coxom/scalars/scalars.hpp"

namespace coxom {

// [w1, ..., wk] stands for s_{w1} ... s_{wk}; the rightmost letter acts first.
using Word = std::vector<int>;

std::string word_str(const Word& w);

template <class F>
using Vec = std::vector<F>;

// Sign pattern of a coordinate vector: +1 all >= 0, -1 all <= 0, 0 mixed or zero.
template <class F>
int sign_class(std::span<const F> x) {
  bool pos = false;
  bool neg = false;
  for (const F& c : x) {
    int s = sign(c);
    pos = pos || s > 0;
    neg = neg || s < 0;
  }
  if (pos == neg) return 0;
  return pos ? 1 : -1;
}

template <class F>
int sign_class(const Vec<F>& x) {
  return sign_class(std::span<const F>(x));
}

// Realized root datum with linearly independent simple roots. Vectors are
// written over the simple roots, covectors over the simple coroots.
template <class F>
class RootDatum {
 public:
  explicit RootDatum(NGCM<F> ngcm) : ngcm_(std::move(ngcm)) {}

  std::size_t rank() const noexcept { return ngcm_.rank(); }
  const NGCM<F>& ngcm() const noexcept { return ngcm_; }
  const Matrix<F>& c() const noexcept { return ngcm_.c; }

  Vec<F> simple_root(std::size_t i) const {
    check_index(static_cast<int>(i));
    Vec<F> e(rank(), F(Rational(0)));
    e[i] = F(Rational(1));
    return e;
  }

  // (x, alpha_i^vee)
  F pair_simple_coroot(std::span<const F> x, std::size_t i) const {
    F acc(Rational(0));
    for (std::size_t j = 0; j < rank(); ++j)
      if (!is_zero(x[j])) acc += x[j] * c()(j, i);
    return acc;
  }

  // (alpha_i, y) for a covector y
  F pair_simple_root(std::size_t i, std::span<const F> y) const {
    F acc(Rational(0));
    for (std::size_t j = 0; j < rank(); ++j)
      if (!is_zero(y[j])) acc += c()(i, j) * y[j];
    return acc;
  }

  // (x, y) for a vector x and covector y
  F pairing(std::span<const F> x, std::span<const F> y) const {
    F acc(Rational(0));
    for (std::size_t i = 0; i < rank(); ++i) {
      if (is_zero(x[i])) continue;
      for (std::size_t j = 0; j < rank(); ++j)
        if (!is_zero(y[j])) acc += x[i] * c()(i, j) * y[j];
    }
    return acc;
  }
  F pairing(const Vec<F>& x, const Vec<F>& y) const { return pairing(std::span<const F>(x), std::span<const F>(y)); }

  // s_i only changes coordinate i.
  void reflect_in_place(std::size_t i, std::span<F> x) const {
    F p = pair_simple_coroot(x, i);
    if (!is_zero(p)) x[i] -= p;
  }

  Vec<F> reflect(std::size_t i, Vec<F> x) const {
    check_index(static_cast<int>(i));
    reflect_in_place(i, std::span<F>(x));
    return x;
  }

  void coreflect_in_place(std::size_t i, std::span<F> y) const {
    F p = pair_simple_root(i, y);
    if (!is_zero(p)) y[i] -= p;
  }

  Vec<F> coreflect(std::size_t i, Vec<F> y) const {
    check_index(static_cast<int>(i));
    coreflect_in_place(i, std::span<F>(y));
    return y;
  }

  Vec<F> apply_word(const Word& w, Vec<F> x) const {
    for (int i : w) check_index(i);
    for (auto it = w.rbegin(); it != w.rend(); ++it) reflect_in_place(static_cast<std::size_t>(*it), std::span<F>(x));
    return x;
  }

  Vec<F> coapply_word(const Word& w, Vec<F> y) const {
    for (int i : w) check_index(i);
    for (auto it = w.rbegin(); it != w.rend(); ++it)
      coreflect_in_place(static_cast<std::size_t>(*it), std::span<F>(y));
    return y;
  }

  // s_r(x) = x - (x, r^vee) r
  Vec<F> reflect_by_root(const Vec<F>& x, const Vec<F>& r, const Vec<F>& r_vee) const {
    F p = pairing(x, r_vee);
    Vec<F> out = x;
    if (!is_zero(p))
      for (std::size_t i = 0; i < rank(); ++i) out[i] -= p * r[i];
    return out;
  }

  // Matrix of w on the simple-root basis (column j = w(alpha_j)).
  Matrix<F> word_matrix(const Word& w) const {
    std::vector<Vec<F>> cols;
    for (std::size_t j = 0; j < rank(); ++j) cols.push_back(apply_word(w, simple_root(j)));
    return Matrix<F>::from_columns(cols);
  }

  void check_index(int i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= rank())
      throw Error("simple reflection index " + std::to_string(i) + " out of range for rank " + std::to_string(rank()));
  }

 private:
  NGCM<F> ngcm_;
};

// Exact proportionality test with a positive factor.
template <class F>
bool same_ray(std::span<const F> x, std::span<const F> y) {
  std::size_t n = x.size();
  std::size_t p = 0;
  while (p < n && is_zero(x[p])) ++p;
  if (p == n) return false;
  if (is_zero(y[p])) return false;
  for (std::size_t i = 0; i < p; ++i)
    if (!is_zero(y[i])) return false;
  if (sign(x[p]) != sign(y[p])) return false;
  for (std::size_t i = p + 1; i < n; ++i)
    if (!(x[i] * y[p] == y[i] * x[p])) return false;
  return true;
}

// Divide by the first nonzero coordinate.
template <class F>
Vec<F> normalize_ray(std::span<const F> x) {
  std::size_t p = 0;
  while (p < x.size() && is_zero(x[p])) ++p;
  if (p == x.size()) throw Error("normalize_ray: zero vector");
  Vec<F> out(x.begin(), x.end());
  if (!(x[p] == F(Rational(1)))) {
    F inv = F(Rational(1)) / x[p];
    for (std::size_t i = p; i < out.size(); ++i)
      if (!is_zero(out[i])) out[i] *= inv;
  }
  return out;
}

template <class F>
std::size_t hash_vec(std::span<const F> x) {
  std::size_t h = 0x84222325cbf29ce4ULL;
  for (const F& c : x) h ^= std::hash<F>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

// Signed reference to a ray of a snapshot: element 2*id is the positive ray
// id, element 2*id+1 its negative.
using Elem = std::uint32_t;
inline Elem pos_elem(std::uint32_t id) { return 2 * id; }
inline Elem neg_elem(std::uint32_t id) { return 2 * id + 1; }
inline Elem opposite(Elem e) { return e ^ 1U; }
inline std::uint32_t elem_ray(Elem e) { return e >> 1; }
inline bool elem_negative(Elem e) { return (e & 1U) != 0; }

// Finite fragment of a realized root system: every positive root ray whose
// witness word has length <= depth. Negative rays are implicit.
template <class F>
class Snapshot {
 public:
  static Snapshot enumerate(const RootDatum<F>& datum, unsigned depth) {
    static_assert(kExactTower<F>, "enumeration needs an exact ordered tower");
    Snapshot s(datum, depth);
    const std::size_t n = datum.rank();
    for (std::size_t i = 0; i < n; ++i) s.insert(datum.simple_root(i), -1, static_cast<int>(i), 0);
    Vec<F> y(n, F(Rational(0)));
    for (std::uint32_t id = 0; id < s.size(); ++id) {
      if (s.depth_[id] >= depth) break;  // BFS order: depths are nondecreasing
      for (std::size_t p = 0; p < n; ++p) {
        if (s.is_simple_multiple(id, p)) continue;  // s_p sends it to a negative root
        auto x = s.coords(id);
        std::copy(x.begin(), x.end(), y.begin());
        datum.reflect_in_place(p, std::span<F>(y));
        if (sign_class(y) != 1) {
          throw Error("enumerate: sign coherence violated at word " + word_str(s.word(id)) + " after s" +
                      std::to_string(p));
        }
        if (s.find(y)) continue;
        s.insert(y, static_cast<std::int32_t>(id), static_cast<int>(p), s.depth_[id] + 1);
      }
    }
    return s;
  }

  const RootDatum<F>& datum() const noexcept { return datum_; }
  std::size_t rank() const noexcept { return datum_.rank(); }
  unsigned depth_bound() const noexcept { return depth_bound_; }
  std::size_t size() const noexcept { return parent_.size(); }

  std::span<const F> coords(std::size_t id) const { return {coords_.data() + id * rank(), rank()}; }
  Vec<F> root(std::size_t id) const {
    auto c = coords(id);
    return {c.begin(), c.end()};
  }
  Vec<F> elem_root(Elem e) const {
    Vec<F> r = root(elem_ray(e));
    if (elem_negative(e))
      for (auto& x : r) x = -x;
    return r;
  }
  unsigned depth(std::size_t id) const { return depth_[id]; }
  std::size_t simple_of(std::size_t id) const {
    while (parent_[id] >= 0) id = static_cast<std::size_t>(parent_[id]);
    return static_cast<std::size_t>(gen_[id]);
  }
  // root(id) = apply_word(word(id), alpha_{simple_of(id)})
  Word word(std::size_t id) const {
    Word w;
    while (parent_[id] >= 0) {
      w.push_back(gen_[id]);
      id = static_cast<std::size_t>(parent_[id]);
    }
    return w;
  }
  Vec<F> coroot(std::size_t id) const {
    return datum_.coapply_word(word(id), datum_.simple_root(simple_of(id)));
  }

  std::optional<std::uint32_t> find(std::span<const F> x) const {
    if (slots_.empty()) return std::nullopt;
    Vec<F> nx = normalize_ray(x);
    std::size_t h = hash_vec(std::span<const F>(nx));
    std::size_t mask = slots_.size() - 1;
    for (std::size_t i = h & mask;; i = (i + 1) & mask) {
      std::uint32_t id = slots_[i];
      if (id == kEmpty) return std::nullopt;
      if (hashes_[id] == h && same_ray(coords(id), x)) return id;
    }
  }
  std::optional<std::uint32_t> find(const Vec<F>& x) const { return find(std::span<const F>(x)); }

  // Signed lookup for any vector on a root ray.
  std::optional<Elem> find_elem(const Vec<F>& x) const {
    int s = sign_class(x);
    if (s == 0) return std::nullopt;
    if (s > 0) {
      auto id = find(x);
      if (!id) return std::nullopt;
      return pos_elem(*id);
    }
    Vec<F> neg = x;
    for (auto& c : neg) c = -c;
    auto id = find(neg);
    if (!id) return std::nullopt;
    return neg_elem(*id);
  }

  // Ray proportional to alpha_p?
  bool is_simple_multiple(std::size_t id, std::size_t p) const {
    auto x = coords(id);
    for (std::size_t j = 0; j < rank(); ++j)
      if ((j == p) == is_zero(x[j])) return false;
    return true;
  }

 private:
  static constexpr std::uint32_t kEmpty = UINT32_MAX;

  Snapshot(const RootDatum<F>& datum, unsigned depth) : datum_(datum), depth_bound_(depth) {}

  void insert(const Vec<F>& x, std::int32_t parent, int gen, unsigned depth) {
    if (size() >= kEmpty - 1) throw Error("enumerate: too many rays");
    if ((size() + 1) * 2 > slots_.size()) grow();
    std::uint32_t id = static_cast<std::uint32_t>(size());
    coords_.insert(coords_.end(), x.begin(), x.end());
    parent_.push_back(parent);
    gen_.push_back(static_cast<std::int8_t>(gen));
    depth_.push_back(static_cast<std::uint8_t>(depth));
    Vec<F> nx = normalize_ray(std::span<const F>(x));
    hashes_.push_back(hash_vec(std::span<const F>(nx)));
    place(id);
  }

  void place(std::uint32_t id) {
    std::size_t mask = slots_.size() - 1;
    std::size_t i = hashes_[id] & mask;
    while (slots_[i] != kEmpty) i = (i + 1) & mask;
    slots_[i] = id;
  }

  void grow() {
    std::size_t cap = slots_.empty() ? 64 : slots_.size() * 2;
    slots_.assign(cap, kEmpty);
    for (std::uint32_t id = 0; id < parent_.size(); ++id) place(id);
  }

  RootDatum<F> datum_;
  unsigned depth_bound_;
  std::vector<F> coords_;
  std::vector<std::int32_t> parent_;
  std::vector<std::int8_t> gen_;
  std::vector<std::uint8_t> depth_;
  std::vector<std::size_t> hashes_;
  std::vector<std::uint32_t> slots_;
};

// Reflection keys: the positive ray of the same witness word inside a fixed
// reference realization of the Coxeter matrix.
struct AbstractRoot {
  std::vector<QuadExt> ray;  // normalized: first nonzero coordinate is 1
  int sign = 1;

  std::string str() const;
  friend bool operator==(const AbstractRoot& a, const AbstractRoot& b) = default;
};

class ReferenceRealization {
 public:
  explicit ReferenceRealization(const CoxeterMatrix& cox);

  const RootDatum<QuadExt>& datum() const noexcept { return datum_; }
  // "standard" (symmetric -2cos(pi/m)) or "one-sided" (-1 above the
  // diagonal, -4cos^2(pi/m) below) when the standard form mixes fields.
  const std::string& kind() const noexcept { return kind_; }

  AbstractRoot key(const Word& w, std::size_t simple, int sign = 1) const;
  AbstractRoot key_of_vector(const Vec<QuadExt>& x) const;

 private:
  static RootDatum<QuadExt> build(const CoxeterMatrix& cox, std::string& kind);

  std::string kind_;
  RootDatum<QuadExt> datum_;
};

// Standard NGCM -2cos(pi/m) (-2 for infinite bonds); nullopt when 2cos(pi/m)
// is not quadratic or two labels need different quadratic fields.
std::optional<Matrix<QuadExt>> standard_ngcm(const CoxeterMatrix& cox);

template <class F>
std::vector<AbstractRoot> abstract_transfer(const Snapshot<F>& snap, const ReferenceRealization& ref) {
  std::vector<AbstractRoot> keys;
  keys.reserve(snap.size());
  for (std::size_t id = 0; id < snap.size(); ++id) keys.push_back(ref.key(snap.word(id), snap.simple_of(id)));
  return keys;
}

inline AbstractRoot elem_key(const std::vector<AbstractRoot>& keys, Elem e) {
  AbstractRoot k = keys[elem_ray(e)];
  if (elem_negative(e)) k.sign = -k.sign;
  return k;
}

// Rank of a list of exact vectors.
template <class F>
std::size_t vectors_rank(const std::vector<Vec<F>>& vs) {
  if (vs.empty()) return 0;
  return rank(Matrix<F>::from_columns(vs));
}

// All positive snapshot rays in the plane spanned by the roots of e1, e2.
template <class F>
std::vector<std::uint32_t> dihedral_span_roots(const Snapshot<F>& snap, Elem e1, Elem e2) {
  if (elem_ray(e1) == elem_ray(e2)) throw Error("dihedral_span_roots: the two rays coincide up to sign");
  Vec<F> a = snap.root(elem_ray(e1));
  Vec<F> b = snap.root(elem_ray(e2));
  std::vector<std::uint32_t> out;
  for (std::uint32_t id = 0; id < snap.size(); ++id) {
    if (id == elem_ray(e1) || id == elem_ray(e2)) {
      out.push_back(id);
      continue;
    }
    if (vectors_rank<F>({a, b, snap.root(id)}) == 2) out.push_back(id);
  }
  return out;
}

}  // namespace coxom
