#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "actcond/belief_base.hpp"
#include "actcond/inference.hpp"
#include "actcond/rational.hpp"

namespace actcond {

/// B(r) = 1 / (1 + Z(r)) for every conditional of the partition.
std::map<std::string, Rational> initial_base_levels(const ZPartition& zp);

/// Degree of association |Σ(r1) ∩ Σ(r2)| / |Σ(r1) ∪ Σ(r2)|.
/// Two conditionals without atoms are fully associated (value 1).
Rational association(const Conditional& r1, const Conditional& r2);

/// Symmetric association matrix of a belief base, indexed in base order.
class AssociationMatrix {
 public:
  AssociationMatrix() = default;
  explicit AssociationMatrix(const BeliefBase& base);

  const std::vector<std::string>& ids() const noexcept { return ids_; }
  const Rational& at(std::size_t i, std::size_t j) const { return values_[i * ids_.size() + j]; }
  /// Throws IdError for unknown ids.
  const Rational& at(const std::string& a, const std::string& b) const;

 private:
  std::size_t position(const std::string& id) const;
  std::vector<std::string> ids_;
  std::vector<Rational> values_;
};

/// Undirected graph over the signature's atoms; {a,b} is an edge iff both
/// occur in some conditional.
class SpreadingNetwork {
 public:
  using Edge = std::pair<std::string, std::string>;

  SpreadingNetwork() = default;
  SpreadingNetwork(std::vector<std::string> vertices, std::set<Edge> edges);

  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  /// Each edge stored once with `first < second`.
  const std::set<Edge>& edges() const noexcept { return edges_; }
  bool adjacent(const std::string& a, const std::string& b) const;
  const std::set<std::string>& neighbors(const std::string& a) const;

 private:
  std::vector<std::string> vertices_;
  std::set<Edge> edges_;
  std::map<std::string, std::set<std::string>> adjacency_;
};

SpreadingNetwork build_network(const BeliefBase& base);

/// Triggering value and labelling step per atom. Step 0 marks the priming
/// atoms; kUnreachedStep marks atoms never reached from the query.
struct TriggeringLabels {
  static constexpr std::size_t kUnreachedStep = std::numeric_limits<std::size_t>::max();

  std::map<std::string, Rational> tau;
  std::map<std::string, std::size_t> step;
};

/// Breadth-first labelling from the query's atoms. All frontier atoms of one
/// round are labelled against the same frozen labelled set L:
///   label(a) = Σ_{b ∈ L adjacent to a} label(b) / (1 + Σ_{b ∈ L} label(b)).
/// Throws SignatureMismatch if the query mentions an atom not in the network.
TriggeringLabels label_network(const SpreadingNetwork& net, const Conditional& q);

/// min over Σ(r) of tau; 1 for a conditional without atoms.
Rational weighting(const TriggeringLabels& labels, const Conditional& r);

struct ActivationEntry {
  std::string id;
  Rational base_level;
  Rational weighting;
  Rational spreading;
  Rational total;
};

/// One entry per conditional, in base order.
struct ActivationProfile {
  std::vector<ActivationEntry> entries;

  /// Throws IdError for unknown ids.
  const ActivationEntry& at(const std::string& id) const;
};

/// spreading(rᵢ) = Σⱼ W(rⱼ)·S(rᵢ,rⱼ) over all rⱼ including rᵢ itself;
/// total = base level + spreading. Throws IdError when the inputs do not
/// cover the same ids.
ActivationProfile activation_profile(const BeliefBase& base, const std::map<std::string, Rational>& base_levels,
                                     const AssociationMatrix& assoc, const TriggeringLabels& labels);

/// Ids with total >= theta, in profile order. Throws RangeError for theta < 0.
std::vector<std::string> select(const ActivationProfile& profile, const Rational& theta);

}  // namespace actcond
