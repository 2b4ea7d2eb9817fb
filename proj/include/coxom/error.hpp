#pragma once

#include <stdexcept>
#include <string>

namespace coxom {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computation needed a value outside the active scalar tower (for example
// the square root of a non-square rational). The radicand is kept so callers
// can switch to a larger tower or to interval mode.
class TowerError : public Error {
 public:
  TowerError(const std::string& what, std::string radicand)
      : Error(what), radicand_(std::move(radicand)) {}
  const std::string& radicand() const noexcept { return radicand_; }

 private:
  std::string radicand_;
};

// Interval arithmetic could not decide a sign at the requested precision.
class UncertainSign : public Error {
 public:
  using Error::Error;
};

}  // namespace coxom
