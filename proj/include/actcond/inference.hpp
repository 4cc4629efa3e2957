#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "actcond/belief_base.hpp"
#include "actcond/logic.hpp"

namespace actcond {

enum class QueryResponse { yes, no, unknown };

std::string_view to_string(QueryResponse response);

/// Ordered tolerance partition (Δ₀,…,Δ_m) of a belief base. Conditionals
/// whose antecedent has no model are kept apart in `vacuous`; every ranking
/// function accepts them, so they never affect consistency.
struct ZPartition {
  std::vector<std::vector<std::string>> layers;
  std::vector<std::string> vacuous;

  friend bool operator==(const ZPartition&, const ZPartition&) = default;
};

/// Outcome of the greedy partition construction. When the construction
/// gets stuck, `partition` is empty and `stuck` holds the remainder no
/// member of which is tolerated by the others.
struct PartitionResult {
  std::optional<ZPartition> partition;
  std::vector<std::string> stuck;

  bool consistent() const noexcept { return partition.has_value(); }
};

/// First world (enumeration order) verifying `r` and falsifying nothing in
/// `base`. Worlds range over base's signature extended by r's atoms.
std::optional<World> tolerates(const BeliefBase& base, const Conditional& r);

/// Greedy construction: each layer is the set of all remaining conditionals
/// tolerated by the remainder.
PartitionResult z_partition(const BeliefBase& base);

/// Layer index of `id`; vacuous conditionals have rank 0.
/// Throws IdError when `id` is not in the partition.
std::size_t z_rank(const ZPartition& zp, const std::string& id);

bool is_consistent(const BeliefBase& base);

/// Whether the caller has already established that the base is consistent.
enum class ConsistencyCheck { verify, assume_consistent };

/// (B|A) follows from `base` under System P iff A is unsatisfiable or
/// base ∪ {(!B|A)} is inconsistent. Throws InconsistentBase when `base` itself is inconsistent
/// (unless the check is skipped).
bool system_p_infers(const BeliefBase& base, const Conditional& q,
                     ConsistencyCheck check = ConsistencyCheck::verify);

/// yes if q follows, no if its negation follows, unknown otherwise. A query
/// with an unsatisfiable premise follows trivially and answers yes.
QueryResponse answer(const BeliefBase& base, const Conditional& q,
                     ConsistencyCheck check = ConsistencyCheck::verify);

/// Ids of conditionals sharing an atom with `q`, in base order.
std::vector<std::string> direct_focus(const BeliefBase& base, const Conditional& q);

/// Iterated focus: depth 0 is direct_focus, and each further step adds every
/// conditional sharing an atom with a member of the previous step. Ids come
/// back in base order.
std::vector<std::string> iterated_focus(const BeliefBase& base, const Conditional& q, std::size_t depth);

}  // namespace actcond
