#include "actcond/memory.hpp"

#include "actcond/errors.hpp"

namespace actcond {

Rational forgetting_factor(const Rational& delta, bool selected) {
  if (delta < 0 || delta >= 1)
    throw RangeError("forgetting delta must lie in [0,1), got " + to_compact_string(delta));
  return selected ? Rational(1 + delta) : Rational(1 - delta);
}

ActivationState update_state(const ActivationState& state, const std::set<std::string>& selection,
                             const Rational& delta) {
  for (const auto& id : selection)
    if (!state.base_levels.count(id)) throw IdError("selection names unknown conditional '" + id + "'");

  const Rational up = forgetting_factor(delta, true);
  const Rational down = forgetting_factor(delta, false);
  ActivationState next = state;
  for (auto& [id, level] : next.base_levels) level *= selection.count(id) ? up : down;
  ++next.query_count;
  return next;
}

}  // namespace actcond
