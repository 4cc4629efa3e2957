#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>

#include "actcond/rational.hpp"

namespace actcond {

/// Per-conditional base-level activation carried across queries.
/// All levels are strictly positive.
struct ActivationState {
  std::map<std::string, Rational> base_levels;
  std::uint64_t query_count = 0;

  friend bool operator==(const ActivationState&, const ActivationState&) = default;
};

/// 1+delta for selected conditionals, 1-delta otherwise.
/// Throws RangeError unless 0 <= delta < 1.
Rational forgetting_factor(const Rational& delta, bool selected);

/// Multiplies each base level by its forgetting factor and bumps the query
/// counter. Throws IdError if `selection` names an id not in `state`.
ActivationState update_state(const ActivationState& state, const std::set<std::string>& selection,
                             const Rational& delta);

}  // namespace actcond
