#include "actcond/belief_base.hpp"

#include <algorithm>
#include <set>

#include "actcond/errors.hpp"

namespace actcond {

BeliefBase::BeliefBase(Signature signature, std::vector<Conditional> conditionals)
    : signature_(std::move(signature)), conditionals_(std::move(conditionals)) {
  for (std::size_t i = 0; i < conditionals_.size(); ++i) {
    const auto& r = conditionals_[i];
    if (!index_.emplace(r.id(), i).second) throw IdError("duplicate conditional id '" + r.id() + "'");
    for (const auto& a : r.atoms())
      if (!signature_.contains(a))
        throw SignatureMismatch("conditional " + r.id() + " mentions atom '" + a + "' outside the signature");
  }
}

namespace {

Signature union_signature(const std::vector<Conditional>& conditionals) {
  std::set<std::string> atoms;
  for (const auto& r : conditionals) atoms.insert(r.atoms().begin(), r.atoms().end());
  return Signature(std::vector<std::string>(atoms.begin(), atoms.end()));
}

}  // namespace

BeliefBase::BeliefBase(std::vector<Conditional> conditionals)
    : BeliefBase(union_signature(conditionals), std::move(conditionals)) {}

std::optional<std::size_t> BeliefBase::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const Conditional& BeliefBase::at(const std::string& id) const {
  auto idx = index_of(id);
  if (!idx) throw IdError("unknown conditional id '" + id + "'");
  return conditionals_[*idx];
}

std::vector<std::string> BeliefBase::ids() const {
  std::vector<std::string> out;
  out.reserve(conditionals_.size());
  for (const auto& r : conditionals_) out.push_back(r.id());
  return out;
}

std::vector<std::string> BeliefBase::mentioned_atoms() const {
  std::set<std::string> seen;
  for (const auto& r : conditionals_) seen.insert(r.atoms().begin(), r.atoms().end());
  std::vector<std::string> out;
  for (const auto& a : signature_.atoms())
    if (seen.count(a)) out.push_back(a);
  return out;
}

BeliefBase BeliefBase::subset(const std::vector<std::string>& ids) const {
  std::vector<bool> keep(conditionals_.size(), false);
  for (const auto& id : ids) {
    auto idx = index_of(id);
    if (!idx) throw IdError("unknown conditional id '" + id + "'");
    keep[*idx] = true;
  }
  std::vector<Conditional> picked;
  for (std::size_t i = 0; i < conditionals_.size(); ++i)
    if (keep[i]) picked.push_back(conditionals_[i]);
  return BeliefBase(signature_, std::move(picked));
}

BeliefBase BeliefBase::with(const Conditional& r) const {
  auto conditionals = conditionals_;
  conditionals.push_back(r);
  return BeliefBase(signature_.extended(r.atoms()), std::move(conditionals));
}

BeliefBase BeliefBase::over(const Signature& wider) const { return BeliefBase(wider, conditionals_); }

}  // namespace actcond
