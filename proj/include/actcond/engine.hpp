#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "actcond/activation.hpp"
#include "actcond/belief_base.hpp"
#include "actcond/inference.hpp"
#include "actcond/memory.hpp"
#include "actcond/rational.hpp"

namespace actcond {

struct EngineConfig {
  /// Initial selection threshold.
  Rational theta = 0;
  /// Forgetting rate, 0 <= delta < 1.
  Rational delta = 0;
  /// Strictly decreasing thresholds ending at 0. Empty means
  /// default_schedule(theta).
  std::vector<Rational> schedule;
  bool forgetting_enabled = true;
};

/// theta, theta - step, theta - 2·step, … while positive, then 0.
std::vector<Rational> default_schedule(const Rational& theta, const Rational& step = Rational(1, 2));

/// The schedule a config resolves to. Throws RangeError when it is not
/// strictly decreasing, contains a negative value or does not end at 0.
std::vector<Rational> effective_schedule(const EngineConfig& cfg);

/// Everything about a belief base that does not depend on the query or the
/// usage history. Immutable once built; share it between sessions.
class KnowledgeBase {
 public:
  /// Throws InconsistentBase (naming the stuck conditionals) when the base
  /// has no tolerance partition.
  explicit KnowledgeBase(BeliefBase base);

  const BeliefBase& base() const noexcept { return base_; }
  const ZPartition& partition() const noexcept { return partition_; }
  const AssociationMatrix& associations() const noexcept { return associations_; }
  const SpreadingNetwork& network() const noexcept { return network_; }
  const std::map<std::string, Rational>& initial_levels() const noexcept { return initial_levels_; }
  const std::string& fingerprint() const noexcept { return fingerprint_; }

 private:
  BeliefBase base_;
  ZPartition partition_;
  AssociationMatrix associations_;
  SpreadingNetwork network_;
  std::map<std::string, Rational> initial_levels_;
  std::string fingerprint_;
};

struct ThresholdStep {
  Rational theta;
  std::vector<std::string> selected;
  QueryResponse response = QueryResponse::unknown;
};

struct QueryTrace {
  Conditional query;
  TriggeringLabels labels;
  ActivationProfile profile;
  std::vector<ThresholdStep> steps;
  QueryResponse response = QueryResponse::unknown;
  /// Selection the forgetting update was applied with; empty (and
  /// `memory_updated` false) when forgetting is disabled.
  std::vector<std::string> memory_selection;
  bool memory_updated = false;
};

struct QueryResult {
  QueryResponse response;
  QueryTrace trace;
};

/// A belief base together with its evolving base-level activations.
/// Queries against one session are serialized.
class Session {
 public:
  explicit Session(std::shared_ptr<const KnowledgeBase> knowledge);
  /// Throws IdError when `state` does not cover exactly the base's ids.
  Session(std::shared_ptr<const KnowledgeBase> knowledge, ActivationState state);

  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  const KnowledgeBase& knowledge() const noexcept { return *knowledge_; }
  std::shared_ptr<const KnowledgeBase> shared_knowledge() const noexcept { return knowledge_; }
  ActivationState state() const;
  /// Back to 1/(1+Z) levels and a zero query counter.
  void reset();

 private:
  friend QueryResult answer_query(Session&, const Conditional&, const EngineConfig&);

  std::shared_ptr<const KnowledgeBase> knowledge_;
  ActivationState state_;
  mutable std::mutex mutex_;
};

/// Activation-based query answering: label the network from the query,
/// compute activations once, then walk the threshold schedule answering on
/// each selection until the answer is not `unknown` or the threshold reaches
/// 0. With forgetting enabled, the stopping step's selection updates the
/// session's base levels.
/// Throws SignatureMismatch for query atoms outside the base's signature and
/// RangeError for an invalid config.
QueryResult answer_query(Session& session, const Conditional& q, const EngineConfig& cfg);

/// True iff `response` is unknown or equals the full-base System P answer.
bool soundness_check(const Session& session, const Conditional& q, QueryResponse response);

}  // namespace actcond
