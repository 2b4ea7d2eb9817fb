#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "coxom/rootsys.hpp"

namespace coxom {

template <class F>
concept OrderedExactTower = kExactTower<F> && !std::is_same_v<F, LaurentPoly>;

template <class F>
F dot(const Vec<F>& a, const Vec<F>& b) {
  F s(Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!is_zero(a[i]) && !is_zero(b[i])) s += a[i] * b[i];
  return s;
}

// Either x = sum coefficients[i] * gens[support[i]] with nonnegative
// coefficients, or a functional with dot(separator, g) >= 0 on every
// generator and dot(separator, x) < 0.
template <class F>
struct ConeCertificate {
  bool member = false;
  std::vector<std::size_t> support;
  std::vector<F> coefficients;
  Vec<F> separator;
};

template <class F>
bool verify_cone_certificate(const Vec<F>& x, const std::vector<Vec<F>>& gens, const ConeCertificate<F>& cert) {
  if (cert.member) {
    if (cert.support.size() != cert.coefficients.size()) return false;
    Vec<F> sum(x.size(), F(Rational(0)));
    for (std::size_t i = 0; i < cert.support.size(); ++i) {
      if (cert.support[i] >= gens.size() || sign(cert.coefficients[i]) < 0) return false;
      for (std::size_t r = 0; r < x.size(); ++r) sum[r] += cert.coefficients[i] * gens[cert.support[i]][r];
    }
    return sum == x;
  }
  if (cert.separator.size() != x.size()) return false;
  for (const auto& g : gens)
    if (sign(dot(cert.separator, g)) < 0) return false;
  return sign(dot(cert.separator, x)) < 0;
}

// Phase-1 simplex on sum k_j g_j = x, k >= 0, with Bland's rule.
template <OrderedExactTower F>
ConeCertificate<F> cone_member(const Vec<F>& x, const std::vector<Vec<F>>& gens) {
  const std::size_t r = x.size();
  const std::size_t g = gens.size();
  const std::size_t cols = g + r;
  const F zero(Rational(0));
  const F one(Rational(1));
  for (const auto& v : gens)
    if (v.size() != r) throw Error("cone_member: dimension mismatch");

  std::vector<std::vector<F>> t(r, std::vector<F>(cols + 1, zero));
  std::vector<int> flip(r, 1);
  std::vector<std::size_t> basis(r);
  for (std::size_t i = 0; i < r; ++i) {
    if (sign(x[i]) < 0) flip[i] = -1;
    for (std::size_t j = 0; j < g; ++j) t[i][j] = flip[i] < 0 ? -gens[j][i] : gens[j][i];
    t[i][g + i] = one;
    t[i][cols] = flip[i] < 0 ? -x[i] : x[i];
    basis[i] = g + i;
  }
  auto cost = [&](std::size_t j) { return j >= g ? 1 : 0; };

  while (true) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols && enter == cols; ++j) {
      F d(Rational(cost(j)));
      for (std::size_t i = 0; i < r; ++i)
        if (cost(basis[i]) && !is_zero(t[i][j])) d -= t[i][j];
      if (sign(d) < 0) enter = j;
    }
    if (enter == cols) break;
    std::size_t leave = r;
    F best;
    for (std::size_t i = 0; i < r; ++i) {
      if (sign(t[i][enter]) <= 0) continue;
      F ratio = t[i][cols] / t[i][enter];
      if (leave == r || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == r) throw Error("cone_member: unbounded phase-1 problem (internal)");
    F piv = t[leave][enter];
    F inv = one / piv;
    for (auto& c : t[leave])
      if (!is_zero(c)) c *= inv;
    for (std::size_t i = 0; i < r; ++i) {
      if (i == leave || is_zero(t[i][enter])) continue;
      F f = t[i][enter];
      for (std::size_t j = 0; j <= cols; ++j)
        if (!is_zero(t[leave][j])) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  F objective = zero;
  for (std::size_t i = 0; i < r; ++i)
    if (basis[i] >= g) objective += t[i][cols];

  ConeCertificate<F> cert;
  if (is_zero(objective)) {
    cert.member = true;
    std::vector<std::pair<std::size_t, F>> parts;
    for (std::size_t i = 0; i < r; ++i)
      if (basis[i] < g && !is_zero(t[i][cols])) parts.emplace_back(basis[i], t[i][cols]);
    std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [j, k] : parts) {
      cert.support.push_back(j);
      cert.coefficients.push_back(k);
    }
  } else {
    cert.separator.assign(r, zero);
    for (std::size_t a = 0; a < r; ++a) {
      F y = zero;
      for (std::size_t i = 0; i < r; ++i)
        if (basis[i] >= g) y += t[i][g + a];
      cert.separator[a] = flip[a] < 0 ? y : -y;
    }
  }
  if (!verify_cone_certificate(x, gens, cert)) throw Error("cone_member: certificate failed to verify (internal)");
  return cert;
}

enum class ClosureKind { kCone, kTwo };

inline std::string closure_kind_name(ClosureKind k) { return k == ClosureKind::kCone ? "cone" : "two"; }
ClosureKind parse_closure_kind(const std::string& s);

// How an element entered a closure: elem = sum coeffs[i] * from[i].
template <class F>
struct Derivation {
  Elem elem = 0;
  std::vector<Elem> from;
  std::vector<F> coeffs;
};

template <class F>
struct ClosureReport {
  std::vector<Elem> input;
  std::vector<Elem> closed;
  std::vector<Derivation<F>> added;
  bool contaminated = false;
};

template <class F>
bool verify_derivation(const Snapshot<F>& snap, const Derivation<F>& d) {
  if (d.from.size() != d.coeffs.size()) return false;
  Vec<F> sum(snap.rank(), F(Rational(0)));
  for (std::size_t i = 0; i < d.from.size(); ++i) {
    if (elem_ray(d.from[i]) >= snap.size() || sign(d.coeffs[i]) < 0) return false;
    Vec<F> v = snap.elem_root(d.from[i]);
    for (std::size_t r = 0; r < v.size(); ++r) sum[r] += d.coeffs[i] * v[r];
  }
  return elem_ray(d.elem) < snap.size() && sum == snap.elem_root(d.elem);
}

namespace detail {

inline std::vector<Elem> sorted_unique(std::vector<Elem> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

template <class F>
void check_elems(const Snapshot<F>& snap, const std::vector<Elem>& v) {
  for (Elem e : v)
    if (elem_ray(e) >= snap.size()) throw Error("closure: element " + std::to_string(e) + " is not in the snapshot");
}

// stop(elem) is consulted after each addition; returning true ends the run.
template <class F, class Stop>
ClosureReport<F> cone_closure_run(const std::vector<Elem>& gamma, const Snapshot<F>& snap, Stop stop) {
  ClosureReport<F> rep;
  rep.input = sorted_unique(gamma);
  check_elems(snap, rep.input);
  std::vector<char> in(2 * snap.size(), 0);
  std::vector<Vec<F>> gens;
  bool all_positive = true;
  for (Elem e : rep.input) {
    in[e] = 1;
    gens.push_back(snap.elem_root(e));
    all_positive = all_positive && !elem_negative(e);
  }
  rep.closed = rep.input;
  if (!gens.empty()) {
    for (Elem e = 0; e < 2 * snap.size(); ++e) {
      if (in[e] || (all_positive && elem_negative(e))) continue;
      auto cert = cone_member(snap.elem_root(e), gens);
      if (!cert.member) continue;
      Derivation<F> d{e, {}, cert.coefficients};
      for (std::size_t j : cert.support) d.from.push_back(rep.input[j]);
      rep.added.push_back(std::move(d));
      rep.closed.push_back(e);
      if (snap.depth(elem_ray(e)) >= snap.depth_bound()) rep.contaminated = true;
      if (stop(e)) break;
    }
  }
  std::sort(rep.closed.begin(), rep.closed.end());
  return rep;
}

template <class F, class Stop>
ClosureReport<F> two_closure_run(const std::vector<Elem>& gamma, const Snapshot<F>& snap, Stop stop) {
  ClosureReport<F> rep;
  rep.input = sorted_unique(gamma);
  check_elems(snap, rep.input);
  const std::size_t n = snap.rank();
  std::vector<char> in(2 * snap.size(), 0);
  std::vector<Elem> list = rep.input;
  for (Elem e : list) in[e] = 1;
  bool done = false;
  for (std::size_t i = 1; i < list.size() && !done; ++i) {
    for (std::size_t j = 0; j < i && !done; ++j) {
      Vec<F> a = snap.elem_root(list[i]);
      Vec<F> b = snap.elem_root(list[j]);
      std::size_t pi = n, pj = n;
      F det;
      for (std::size_t p = 0; p < n && pi == n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) {
          F d = a[p] * b[q] - a[q] * b[p];
          if (!is_zero(d)) {
            pi = p;
            pj = q;
            det = d;
            break;
          }
        }
      if (pi == n) continue;
      F inv = F(Rational(1)) / det;
      for (std::uint32_t id = 0; id < snap.size() && !done; ++id) {
        if (in[pos_elem(id)] && in[neg_elem(id)]) continue;
        auto x = snap.coords(id);
        F s = (x[pi] * b[pj] - x[pj] * b[pi]) * inv;
        F t = (a[pi] * x[pj] - a[pj] * x[pi]) * inv;
        int ss = sign(s);
        int st = sign(t);
        int orient;
        if (ss >= 0 && st >= 0) orient = 1;
        else if (ss <= 0 && st <= 0) orient = -1;
        else continue;
        Elem e = orient > 0 ? pos_elem(id) : neg_elem(id);
        if (in[e]) continue;
        bool on_plane = true;
        for (std::size_t r = 0; r < n && on_plane; ++r) on_plane = s * a[r] + t * b[r] == x[r];
        if (!on_plane) continue;
        if (orient < 0) {
          s = -s;
          t = -t;
        }
        Derivation<F> d{e, {}, {}};
        if (!is_zero(s)) {
          d.from.push_back(list[i]);
          d.coeffs.push_back(s);
        }
        if (!is_zero(t)) {
          d.from.push_back(list[j]);
          d.coeffs.push_back(t);
        }
        in[e] = 1;
        list.push_back(e);
        rep.added.push_back(std::move(d));
        if (snap.depth(id) >= snap.depth_bound()) rep.contaminated = true;
        if (stop(e)) done = true;
      }
    }
  }
  rep.closed = sorted_unique(list);
  return rep;
}

}  // namespace detail

template <OrderedExactTower F>
ClosureReport<F> cone_closure(const std::vector<Elem>& gamma, const Snapshot<F>& snap) {
  return detail::cone_closure_run(gamma, snap, [](Elem) { return false; });
}

template <OrderedExactTower F>
ClosureReport<F> two_closure(const std::vector<Elem>& gamma, const Snapshot<F>& snap) {
  return detail::two_closure_run(gamma, snap, [](Elem) { return false; });
}

template <OrderedExactTower F>
ClosureReport<F> closure(ClosureKind kind, const std::vector<Elem>& gamma, const Snapshot<F>& snap) {
  return kind == ClosureKind::kCone ? cone_closure(gamma, snap) : two_closure(gamma, snap);
}

enum class Verdict { kTrue, kFalse, kUnknown };

inline std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kTrue:
      return "true";
    case Verdict::kFalse:
      return "false";
    case Verdict::kUnknown:
      return "unknown at this depth";
  }
  return "?";
}

template <class F>
struct BiclosedReport {
  Verdict verdict = Verdict::kTrue;
  bool contaminated = false;
  // Element of Y reached by the closure of the other side.
  std::optional<Derivation<F>> witness;
  // false: the closure of Gamma left Gamma; true: the closure of Y \ Gamma left Y \ Gamma.
  bool complement_side = false;
};

// Gamma and Y \ Gamma are each tested for c(Z) cap Y = Z.
template <OrderedExactTower F>
BiclosedReport<F> is_biclosed(ClosureKind kind, const std::vector<Elem>& gamma, const std::vector<Elem>& positives,
                              const Snapshot<F>& snap) {
  auto y = detail::sorted_unique(positives);
  auto z = detail::sorted_unique(gamma);
  detail::check_elems(snap, y);
  std::vector<char> in_y(2 * snap.size(), 0);
  std::vector<char> in_z(2 * snap.size(), 0);
  for (Elem e : y) in_y[e] = 1;
  for (Elem e : z) {
    if (e >= in_y.size() || !in_y[e]) throw Error("is_biclosed: Gamma must be a subset of the positives");
    in_z[e] = 1;
  }
  std::vector<Elem> rest;
  for (Elem e : y)
    if (!in_z[e]) rest.push_back(e);

  BiclosedReport<F> rep;
  for (int side = 0; side < 2; ++side) {
    const std::vector<Elem>& set = side == 0 ? z : rest;
    auto leaves = [&](Elem e) { return in_y[e] && (side == 0 ? !in_z[e] : in_z[e]); };
    auto run = kind == ClosureKind::kCone ? detail::cone_closure_run(set, snap, leaves)
                                          : detail::two_closure_run(set, snap, leaves);
    rep.contaminated = rep.contaminated || run.contaminated;
    for (const auto& d : run.added) {
      if (leaves(d.elem)) {
        rep.verdict = Verdict::kFalse;
        rep.witness = d;
        rep.complement_side = side == 1;
        return rep;
      }
    }
  }
  rep.verdict = rep.contaminated ? Verdict::kUnknown : Verdict::kTrue;
  return rep;
}

// Involuted set with a closure table indexed by subset bitmask.
struct OmViolation {
  std::string axiom;
  std::uint64_t set = 0;
  int x = -1;
  int y = -1;
};

struct OmAxiomsReport {
  std::size_t size = 0;
  std::size_t checked = 0;
  std::size_t violation_count = 0;
  std::vector<OmViolation> violations;  // first few, in enumeration order
  bool ok() const { return violation_count == 0; }
};

// Throws when star is not a fixed-point-free involution.
OmAxiomsReport om_axioms_check(const std::vector<int>& star, const std::vector<std::uint64_t>& cx);

// cx(X) = cone(X) cap E for a finite list of vectors closed under negation.
template <OrderedExactTower F>
std::vector<std::uint64_t> cone_closure_table(const std::vector<Vec<F>>& e) {
  const std::size_t n = e.size();
  if (n > 20) throw Error("cone_closure_table: at most 20 elements");
  std::vector<std::uint64_t> cx(std::size_t{1} << n);
  for (std::uint64_t m = 0; m < cx.size(); ++m) {
    std::vector<Vec<F>> gens;
    for (std::size_t i = 0; i < n; ++i)
      if (m >> i & 1U) gens.push_back(e[i]);
    std::uint64_t out = m;
    if (!gens.empty())
      for (std::size_t i = 0; i < n; ++i)
        if (!(m >> i & 1U) && cone_member(e[i], gens).member) out |= std::uint64_t{1} << i;
    cx[m] = out;
  }
  return cx;
}

// Element list of a snapshot restricted to both signs of the given rays.
template <class F>
std::vector<Vec<F>> signed_rays(const Snapshot<F>& snap, std::vector<int>& star) {
  std::vector<Vec<F>> e;
  star.clear();
  for (std::uint32_t id = 0; id < snap.size(); ++id) {
    e.push_back(snap.elem_root(pos_elem(id)));
    e.push_back(snap.elem_root(neg_elem(id)));
    star.push_back(static_cast<int>(2 * id + 1));
    star.push_back(static_cast<int>(2 * id));
  }
  return e;
}

template <class F>
int chirotope(const std::vector<Vec<F>>& cols) {
  if (cols.empty() || cols.size() != cols.front().size()) throw Error("chirotope: need rank-many vectors");
  return sign(det(Matrix<F>::from_columns(cols)));
}

template <class F>
int chirotope_full(const Snapshot<F>& snap, const std::vector<Elem>& tuple) {
  if (tuple.size() != snap.rank()) throw Error("chirotope_full: tuple length must equal the rank");
  std::vector<Vec<F>> cols;
  for (Elem e : tuple) {
    if (elem_ray(e) >= snap.size()) throw Error("chirotope_full: element not in the snapshot");
    cols.push_back(snap.elem_root(e));
  }
  return chirotope(cols);
}

}  // namespace coxom
