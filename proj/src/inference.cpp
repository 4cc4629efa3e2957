#include "actcond/inference.hpp"

#include <algorithm>

#include "actcond/errors.hpp"

namespace actcond {

std::string_view to_string(QueryResponse response) {
  switch (response) {
    case QueryResponse::yes: return "yes";
    case QueryResponse::no: return "no";
    case QueryResponse::unknown: return "unknown";
  }
  return "unknown";
}

namespace {

// Truth-table view of one conditional over a fixed signature.
struct CompiledConditional {
  const Conditional* rule;
  WorldSet applicable;  // A
  WorldSet verifying;   // A && B
  WorldSet falsifying;  // A && !B
};

CompiledConditional compile(const Conditional& r, const Signature& sig) {
  WorldSet a = models(r.antecedent(), sig);
  WorldSet b = models(r.consequent(), sig);
  return {&r, a, a & b, a & ~b};
}

std::vector<CompiledConditional> compile_all(const BeliefBase& base, const Signature& sig) {
  std::vector<CompiledConditional> out;
  out.reserve(base.size());
  for (const auto& r : base.conditionals()) out.push_back(compile(r, sig));
  return out;
}

WorldSet falsifying_any(const std::vector<const CompiledConditional*>& rules, std::size_t world_count) {
  WorldSet any(world_count, false);
  for (const auto* c : rules) any |= c->falsifying;
  return any;
}

bool shares_atom(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  // Both sorted.
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j)
      ++i;
    else
      ++j;
  }
  return false;
}

}  // namespace

std::optional<World> tolerates(const BeliefBase& base, const Conditional& r) {
  const Signature sig = base.signature().extended(r.atoms());
  const auto compiled = compile_all(base, sig);
  std::vector<const CompiledConditional*> all;
  for (const auto& c : compiled) all.push_back(&c);
  const CompiledConditional target = compile(r, sig);
  const WorldSet witnesses = target.verifying & ~falsifying_any(all, target.verifying.world_count());
  if (auto w = witnesses.first()) return World(sig, *w);
  return std::nullopt;
}

PartitionResult z_partition(const BeliefBase& base) {
  const auto compiled = compile_all(base, base.signature());
  const std::size_t world_count = std::size_t{1} << base.signature().size();

  ZPartition zp;
  std::vector<const CompiledConditional*> remaining;
  for (const auto& c : compiled) {
    if (c.applicable.any())
      remaining.push_back(&c);
    else
      zp.vacuous.push_back(c.rule->id());
  }

  while (!remaining.empty()) {
    const WorldSet blocked = falsifying_any(remaining, world_count);
    std::vector<std::string> layer;
    std::vector<const CompiledConditional*> rest;
    for (const auto* c : remaining) {
      if ((c->verifying & ~blocked).any())
        layer.push_back(c->rule->id());
      else
        rest.push_back(c);
    }
    if (layer.empty()) {
      PartitionResult failed;
      for (const auto* c : remaining) failed.stuck.push_back(c->rule->id());
      return failed;
    }
    zp.layers.push_back(std::move(layer));
    remaining = std::move(rest);
  }
  return {std::move(zp), {}};
}

std::size_t z_rank(const ZPartition& zp, const std::string& id) {
  for (std::size_t i = 0; i < zp.layers.size(); ++i)
    if (std::find(zp.layers[i].begin(), zp.layers[i].end(), id) != zp.layers[i].end()) return i;
  if (std::find(zp.vacuous.begin(), zp.vacuous.end(), id) != zp.vacuous.end()) return 0;
  throw IdError("conditional '" + id + "' is not in the partition");
}

bool is_consistent(const BeliefBase& base) { return z_partition(base).consistent(); }

bool system_p_infers(const BeliefBase& base, const Conditional& q, ConsistencyCheck check) {
  if (check == ConsistencyCheck::verify && !is_consistent(base))
    throw InconsistentBase("System P inference needs a consistent belief base");
  // Every ranking function accepts a conditional with an impossible premise.
  if (!models(q.antecedent(), base.signature().extended(q.atoms())).any()) return true;
  std::string id = "~" + q.id();
  while (base.contains(id)) id += "'";
  return !is_consistent(base.with(q.negated(std::move(id))));
}

QueryResponse answer(const BeliefBase& base, const Conditional& q, ConsistencyCheck check) {
  if (check == ConsistencyCheck::verify && !is_consistent(base))
    throw InconsistentBase("cannot answer queries against an inconsistent belief base");
  if (system_p_infers(base, q, ConsistencyCheck::assume_consistent)) return QueryResponse::yes;
  if (system_p_infers(base, q.negated(q.id()), ConsistencyCheck::assume_consistent)) return QueryResponse::no;
  return QueryResponse::unknown;
}

std::vector<std::string> direct_focus(const BeliefBase& base, const Conditional& q) {
  std::vector<std::string> out;
  for (const auto& r : base.conditionals())
    if (shares_atom(r.atoms(), q.atoms())) out.push_back(r.id());
  return out;
}

std::vector<std::string> iterated_focus(const BeliefBase& base, const Conditional& q, std::size_t depth) {
  const auto& rules = base.conditionals();
  std::vector<bool> focused(rules.size(), false);
  for (std::size_t i = 0; i < rules.size(); ++i) focused[i] = shares_atom(rules[i].atoms(), q.atoms());

  for (std::size_t step = 0; step < depth; ++step) {
    std::vector<std::string> reached;
    for (std::size_t i = 0; i < rules.size(); ++i)
      if (focused[i]) reached.insert(reached.end(), rules[i].atoms().begin(), rules[i].atoms().end());
    std::sort(reached.begin(), reached.end());
    reached.erase(std::unique(reached.begin(), reached.end()), reached.end());

    bool grew = false;
    for (std::size_t i = 0; i < rules.size(); ++i) {
      if (!focused[i] && shares_atom(rules[i].atoms(), reached)) {
        focused[i] = true;
        grew = true;
      }
    }
    if (!grew) break;
  }

  std::vector<std::string> out;
  for (std::size_t i = 0; i < rules.size(); ++i)
    if (focused[i]) out.push_back(rules[i].id());
  return out;
}

}  // namespace actcond
