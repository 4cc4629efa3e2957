#include "actcond/engine.hpp"

#include <set>

#include "actcond/errors.hpp"
#include "actcond/parser.hpp"

namespace actcond {

std::vector<Rational> default_schedule(const Rational& theta, const Rational& step) {
  if (theta < 0) throw RangeError("threshold must be non-negative");
  if (step <= 0) throw RangeError("schedule step must be positive");
  std::vector<Rational> out;
  for (Rational t = theta; t > 0; t -= step) out.push_back(t);
  out.push_back(0);
  return out;
}

std::vector<Rational> effective_schedule(const EngineConfig& cfg) {
  if (cfg.schedule.empty()) return default_schedule(cfg.theta);
  const auto& s = cfg.schedule;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0) throw RangeError("schedule contains a negative threshold");
    if (i > 0 && !(s[i] < s[i - 1])) throw RangeError("schedule must be strictly decreasing");
  }
  if (s.back() != 0) throw RangeError("schedule must end at 0");
  return s;
}

namespace {

ZPartition partition_or_throw(const BeliefBase& base) {
  PartitionResult result = z_partition(base);
  if (!result.consistent()) {
    std::string stuck;
    for (const auto& id : result.stuck) stuck += (stuck.empty() ? "" : " ") + id;
    throw InconsistentBase("belief base is inconsistent; no tolerance partition for {" + stuck + "}");
  }
  return std::move(*result.partition);
}

}  // namespace

KnowledgeBase::KnowledgeBase(BeliefBase base)
    : base_(std::move(base)),
      partition_(partition_or_throw(base_)),
      associations_(base_),
      network_(build_network(base_)),
      initial_levels_(initial_base_levels(partition_)),
      fingerprint_(actcond::fingerprint(base_)) {}

Session::Session(std::shared_ptr<const KnowledgeBase> knowledge) : knowledge_(std::move(knowledge)) {
  state_.base_levels = knowledge_->initial_levels();
}

Session::Session(std::shared_ptr<const KnowledgeBase> knowledge, ActivationState state)
    : knowledge_(std::move(knowledge)), state_(std::move(state)) {
  check_session_ids(state_, knowledge_->base());
}

ActivationState Session::state() const {
  std::lock_guard lock(mutex_);
  return state_;
}

void Session::reset() {
  std::lock_guard lock(mutex_);
  state_ = ActivationState{knowledge_->initial_levels(), 0};
}

QueryResult answer_query(Session& session, const Conditional& q, const EngineConfig& cfg) {
  const auto schedule = effective_schedule(cfg);
  if (cfg.forgetting_enabled) forgetting_factor(cfg.delta, true);  // validates delta

  const KnowledgeBase& kb = session.knowledge();
  for (const auto& a : q.atoms())
    if (!kb.base().signature().contains(a))
      throw SignatureMismatch("query atom '" + a + "' is not in the belief base signature");

  std::lock_guard lock(session.mutex_);
  QueryTrace trace{q, label_network(kb.network(), q), {}, {}, QueryResponse::unknown, {}, false};
  trace.profile = activation_profile(kb.base(), session.state_.base_levels, kb.associations(), trace.labels);

  for (const auto& theta : schedule) {
    ThresholdStep step{theta, select(trace.profile, theta), QueryResponse::unknown};
    // Subsets of a consistent base are consistent.
    step.response = answer(kb.base().subset(step.selected), q, ConsistencyCheck::assume_consistent);
    trace.steps.push_back(step);
    if (step.response != QueryResponse::unknown) break;
  }
  trace.response = trace.steps.back().response;

  if (cfg.forgetting_enabled) {
    trace.memory_selection = trace.steps.back().selected;
    std::set<std::string> chosen(trace.memory_selection.begin(), trace.memory_selection.end());
    session.state_ = update_state(session.state_, chosen, cfg.delta);
    trace.memory_updated = true;
  }
  return {trace.response, std::move(trace)};
}

bool soundness_check(const Session& session, const Conditional& q, QueryResponse response) {
  if (response == QueryResponse::unknown) return true;
  return answer(session.knowledge().base(), q, ConsistencyCheck::assume_consistent) == response;
}

}  // namespace actcond
