#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "actcond/logic.hpp"

namespace actcond {

/// Finite ordered set of conditionals over a signature. Ids are unique and
/// every conditional's atoms lie in the signature.
class BeliefBase {
 public:
  BeliefBase() = default;
  /// Throws IdError on duplicate ids and SignatureMismatch when a
  /// conditional mentions an atom outside `signature`.
  BeliefBase(Signature signature, std::vector<Conditional> conditionals);
  /// Signature inferred as the sorted union of the conditionals' atoms.
  explicit BeliefBase(std::vector<Conditional> conditionals);

  const Signature& signature() const noexcept { return signature_; }
  const std::vector<Conditional>& conditionals() const noexcept { return conditionals_; }
  std::size_t size() const noexcept { return conditionals_.size(); }
  bool empty() const noexcept { return conditionals_.empty(); }

  bool contains(const std::string& id) const { return index_.count(id) != 0; }
  std::optional<std::size_t> index_of(const std::string& id) const;
  /// Throws IdError for unknown ids.
  const Conditional& at(const std::string& id) const;
  std::vector<std::string> ids() const;

  /// Atoms mentioned by some conditional, in signature order.
  std::vector<std::string> mentioned_atoms() const;

  /// Conditionals whose id is in `ids`, kept in base order, same signature.
  /// Throws IdError on unknown ids.
  BeliefBase subset(const std::vector<std::string>& ids) const;
  /// This base plus `r`, signature extended by r's atoms if needed.
  BeliefBase with(const Conditional& r) const;
  /// Same conditionals over a wider signature.
  BeliefBase over(const Signature& wider) const;

 private:
  Signature signature_;
  std::vector<Conditional> conditionals_;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace actcond
