#include "coxom/omclosure.hpp"

namespace coxom {

ClosureKind parse_closure_kind(const std::string& s) {
  if (s == "cone") return ClosureKind::kCone;
  if (s == "two" || s == "2") return ClosureKind::kTwo;
  throw Error("unknown closure kind '" + s + "' (expected cone or two)");
}

namespace {

std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

}  // namespace

OmAxiomsReport om_axioms_check(const std::vector<int>& star, const std::vector<std::uint64_t>& cx) {
  const int n = static_cast<int>(star.size());
  if (n > 20) throw Error("om_axioms_check: at most 20 elements");
  if (cx.size() != (std::size_t{1} << n)) throw Error("om_axioms_check: closure table must have 2^|E| entries");
  for (int i = 0; i < n; ++i) {
    if (star[i] < 0 || star[i] >= n) throw Error("om_axioms_check: involution maps outside E");
    if (star[i] == i) throw Error("om_axioms_check: involution has a fixed point at " + std::to_string(i));
    if (star[star[i]] != i) throw Error("om_axioms_check: map is not an involution at " + std::to_string(i));
  }
  const std::uint64_t full = cx.size() - 1;
  for (std::uint64_t m = 0; m <= full; ++m)
    if (cx[m] & ~full) throw Error("om_axioms_check: closure table leaves E");

  OmAxiomsReport rep;
  rep.size = static_cast<std::size_t>(n);
  auto flag = [&](const char* axiom, std::uint64_t set, int x, int y) {
    ++rep.violation_count;
    if (rep.violations.size() < 64) rep.violations.push_back({axiom, set, x, y});
  };
  auto starred = [&](std::uint64_t m) {
    std::uint64_t out = 0;
    for (int i = 0; i < n; ++i)
      if (m & bit(i)) out |= bit(star[i]);
    return out;
  };

  for (std::uint64_t m = 0; m <= full; ++m) {
    const std::uint64_t c = cx[m];
    ++rep.checked;
    if ((c & m) != m) flag("extensive", m, -1, -1);
    if (cx[c] != c) flag("idempotent", m, -1, -1);
    if (starred(c) != cx[starred(m)]) flag("(2)", m, -1, -1);
    for (int y = 0; y < n; ++y) {
      if (m & bit(y)) continue;
      if ((cx[m | bit(y)] & c) != c) flag("monotone", m, -1, y);
    }
    for (int x = 0; x < n; ++x) {
      const bool x_in = (c & bit(x)) != 0;
      if (!x_in && (cx[m | bit(star[x])] & bit(x))) flag("(3)", m, x, -1);
      if (x_in) continue;
      for (int y = 0; y < n; ++y) {
        if (!(cx[m | bit(star[y])] & bit(x))) continue;
        std::uint64_t other = (m & ~bit(y)) | bit(star[x]);
        if (!(cx[other] & bit(y))) flag("(4)", m, x, y);
      }
    }
  }
  return rep;
}

}  // namespace coxom
