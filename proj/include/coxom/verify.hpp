#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coxom/io.hpp"

namespace coxom::verify {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
  json certificate;  // null, or an object with a "kind" understood by recheck
};

struct ScenarioReport {
  std::string scenario;
  json parameters = json::object();
  std::vector<Check> checks;
  bool contaminated = false;
  std::string note;
  std::optional<double> wall_time;

  bool pass() const;
  Check& add(std::string name, bool pass, std::string detail, json certificate = nullptr);
  const Check* find(const std::string& name) const;

  json to_json() const;
  // Header "scenario,check,pass,detail".
  std::string csv(bool header = true) const;
};

// Uniform index boxes |m|, |k| <= 3, eta = +-1, cells 1 <= i <= j <= n.
ScenarioReport run_trichotomy(int n, std::size_t samples, std::uint64_t seed);

struct HomotopyPair {
  std::string name;
  Matrix<QuadExt> a;
  Matrix<QuadExt> b;
};

// "a2": A~2 standard vs canonical v=2; "2-3-inf": two rational NGCMs with
// labels m01=2, m12=3, m02=inf; "3-4-5": one-sided vs an asymmetric NGCM of
// the (3,4,5) triangle group, both over Q(sqrt 5) (the standard form would
// need sqrt 2 and sqrt 5 together).
std::vector<std::string> homotopy_presets();
HomotopyPair homotopy_preset(const std::string& name);

// Triples of roots given by random words (length <= 6) applied to random
// simple roots; signs certified on the grid t = k/(grid-1).
ScenarioReport run_rank3_homotopy(const HomotopyPair& pair, std::size_t samples, std::size_t grid, std::uint64_t seed);

// Rank 4 NGCMs with a = 2cos(pi/m), b = 2cos(pi/n) and free entries c, d >= 2:
// the base tuple is + while the probe tuple has sign sgn(ad - bc).
ScenarioReport run_cd_family(int m, int n_label, const std::vector<std::pair<QuadExt, QuadExt>>& cd);

// All-5 four-cycle: Xi' is 2-closure biclosed but not cone biclosed on the
// depth-bounded fragment.
ScenarioReport run_four_cycle(unsigned depth);

// Two A3 NGCMs related by a rescaling of the asymmetric entries.
std::vector<Matrix<QuadExt>> default_forest_pair();
ScenarioReport run_forest_uniqueness(const std::vector<Matrix<QuadExt>>& ngcms, unsigned word_length, std::size_t samples,
                                     std::uint64_t seed);

// Re-verifies every certificate of a report JSON; returns the failures.
std::vector<std::string> recheck(const json& report);

}  // namespace coxom::verify
