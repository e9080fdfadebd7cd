#pragma once

// Generator/endpoint bookkeeping for reduced complexes.
//
// Every generator of a complex is exactly one bar endpoint: the birth of a
// bar, or the death of a finite bar. Counting endpoints in (0, t] by bar type
// gives the identity
//
//   #actions in (0,t] = I + 2 II + III + 2 IV + #(bars born <= 0 dying in (0,t])
//
// where I..IV is bar_type_census(B, eps, t). Types III and IV only involve
// finite bars with positive birth.

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wfbar/barcode.hpp"
#include "wfbar/filtered_complex.hpp"
#include "wfbar/reduction.hpp"

namespace wfbar {

struct ConservationReport {
  bool ok = true;
  std::string message;

  explicit operator bool() const { return ok; }
};

inline std::uint64_t count_actions_in(const FilteredComplex& C, double lo_exclusive, double hi_inclusive) {
  std::uint64_t n = 0;
  for (const auto& g : C.generators())
    if (g.action > lo_exclusive && g.action <= hi_inclusive) ++n;
  return n;
}

/// Bars born at or below 0 whose (finite) death falls in (0, t].
inline std::uint64_t count_crossing_zero(const Barcode& B, double t) {
  std::uint64_t n = 0;
  for (const Bar& b : B.bars())
    if (b.birth <= 0.0 && b.death > 0.0 && b.death <= t) n += b.multiplicity;
  return n;
}

/// Checks that the bar endpoints of reduce(C) are exactly the generator actions
/// (as multisets) and, for each (eps, t) supplied, the census identity above.
inline ConservationReport endpoint_conservation_check(const FilteredComplex& C,
                                                      std::span<const std::pair<double, double>> eps_t = {}) {
  const Barcode B = reduce(C);
  std::vector<double> endpoints, actions;
  for (const Bar& b : B.bars())
    for (std::uint64_t k = 0; k < b.multiplicity; ++k) {
      endpoints.push_back(b.birth);
      if (!b.infinite()) endpoints.push_back(b.death);
    }
  for (const auto& g : C.generators()) actions.push_back(g.action);
  std::sort(endpoints.begin(), endpoints.end());
  std::sort(actions.begin(), actions.end());
  if (endpoints != actions)
    return {false, "bar endpoints (" + std::to_string(endpoints.size()) + ") differ from generator actions (" +
                       std::to_string(actions.size()) + ")"};

  for (auto [eps, t] : eps_t) {
    const BarCensus c = bar_type_census(B, eps, t);
    const std::uint64_t lhs = count_actions_in(C, 0.0, t);
    const std::uint64_t rhs = c.type_i + 2 * c.type_ii + c.type_iii + 2 * c.type_iv + count_crossing_zero(B, t);
    if (lhs != rhs)
      return {false, "census identity fails at eps=" + text::format_real(eps) + ", t=" + text::format_real(t) + ": " +
                         std::to_string(lhs) + " actions vs " + std::to_string(rhs) + " endpoints"};
  }
  return {};
}

/// #actions in (0,t] - III - 2 IV: a count that only sees generators of
/// positive action and finite short bars born above 0, hence unchanged when
/// the part of the complex at action <= 0 is replaced.
inline long long filling_independent_count(const FilteredComplex& C, const Barcode& B, double eps, double t) {
  const BarCensus c = bar_type_census(B, eps, t);
  return static_cast<long long>(count_actions_in(C, 0.0, t)) - static_cast<long long>(c.type_iii) -
         2 * static_cast<long long>(c.type_iv);
}

}  // namespace wfbar
