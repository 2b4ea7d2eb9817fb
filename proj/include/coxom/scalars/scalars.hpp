#pragma once

#include <concepts>
#include <string>
#include <type_traits>

#include "coxom/scalars/interval.hpp"
#include "coxom/scalars/laurent_poly.hpp"
#include "coxom/scalars/quad_ext.hpp"
#include "coxom/scalars/rational.hpp"

namespace coxom {

template <class F>
concept Scalar = requires(const F& a, const F& b) {
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { -a } -> std::convertible_to<F>;
  { is_zero(a) } -> std::convertible_to<bool>;
  { to_string(a) } -> std::convertible_to<std::string>;
  F(Rational(0));
};

// Towers with a decidable order (sign of every element is computable).
template <class F>
concept OrderedScalar = Scalar<F> && requires(const F& a) {
  { sign(a) } -> std::convertible_to<int>;
};

template <class F>
inline constexpr bool kExactTower = !std::is_same_v<F, Interval>;

template <class F>
const char* tower_name() {
  if constexpr (std::is_same_v<F, Rational>) return "rational";
  else if constexpr (std::is_same_v<F, QuadExt>) return "quad5";
  else if constexpr (std::is_same_v<F, LaurentPoly>) return "laurent";
  else return "interval";
}

}  // namespace coxom
