#include "actcond/activation.hpp"

#include <algorithm>

#include "actcond/errors.hpp"

namespace actcond {

std::map<std::string, Rational> initial_base_levels(const ZPartition& zp) {
  std::map<std::string, Rational> levels;
  for (std::size_t rank = 0; rank < zp.layers.size(); ++rank)
    for (const auto& id : zp.layers[rank]) levels.emplace(id, Rational(1, static_cast<long long>(rank) + 1));
  for (const auto& id : zp.vacuous) levels.emplace(id, Rational(1));
  return levels;
}

Rational association(const Conditional& r1, const Conditional& r2) {
  const auto& a = r1.atoms();
  const auto& b = r2.atoms();
  std::vector<std::string> shared;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(shared));
  const std::size_t joint = a.size() + b.size() - shared.size();
  if (joint == 0) return Rational(1);
  return Rational(static_cast<long long>(shared.size()), static_cast<long long>(joint));
}

AssociationMatrix::AssociationMatrix(const BeliefBase& base) : ids_(base.ids()) {
  const auto& rules = base.conditionals();
  const std::size_t n = rules.size();
  values_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    values_[i * n + i] = 1;
    for (std::size_t j = i + 1; j < n; ++j) values_[i * n + j] = values_[j * n + i] = association(rules[i], rules[j]);
  }
}

std::size_t AssociationMatrix::position(const std::string& id) const {
  auto it = std::find(ids_.begin(), ids_.end(), id);
  if (it == ids_.end()) throw IdError("unknown conditional id '" + id + "'");
  return static_cast<std::size_t>(it - ids_.begin());
}

const Rational& AssociationMatrix::at(const std::string& a, const std::string& b) const {
  return at(position(a), position(b));
}

SpreadingNetwork::SpreadingNetwork(std::vector<std::string> vertices, std::set<Edge> edges)
    : vertices_(std::move(vertices)) {
  for (const auto& v : vertices_) adjacency_[v];
  for (auto [a, b] : edges) {
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    if (!adjacency_.count(a) || !adjacency_.count(b))
      throw SignatureMismatch("edge {" + a + "," + b + "} leaves the vertex set");
    adjacency_[a].insert(b);
    adjacency_[b].insert(a);
    edges_.emplace(a, b);
  }
}

bool SpreadingNetwork::adjacent(const std::string& a, const std::string& b) const {
  auto it = adjacency_.find(a);
  return it != adjacency_.end() && it->second.count(b) != 0;
}

const std::set<std::string>& SpreadingNetwork::neighbors(const std::string& a) const {
  auto it = adjacency_.find(a);
  if (it == adjacency_.end()) throw SignatureMismatch("atom '" + a + "' is not a network vertex");
  return it->second;
}

SpreadingNetwork build_network(const BeliefBase& base) {
  std::set<SpreadingNetwork::Edge> edges;
  for (const auto& r : base.conditionals()) {
    const auto& atoms = r.atoms();
    for (std::size_t i = 0; i < atoms.size(); ++i)
      for (std::size_t j = i + 1; j < atoms.size(); ++j) edges.emplace(atoms[i], atoms[j]);
  }
  return SpreadingNetwork(base.signature().atoms(), std::move(edges));
}

TriggeringLabels label_network(const SpreadingNetwork& net, const Conditional& q) {
  TriggeringLabels labels;
  std::set<std::string> labelled;
  for (const auto& a : q.atoms()) {
    if (std::find(net.vertices().begin(), net.vertices().end(), a) == net.vertices().end())
      throw SignatureMismatch("query atom '" + a + "' is not in the belief base signature");
    labels.tau[a] = 1;
    labels.step[a] = 0;
    labelled.insert(a);
  }

  for (std::size_t step = 1;; ++step) {
    std::set<std::string> frontier;
    for (const auto& b : labelled)
      for (const auto& a : net.neighbors(b))
        if (!labelled.count(a)) frontier.insert(a);
    if (frontier.empty()) break;

    Rational mass = 1;
    for (const auto& b : labelled) mass += labels.tau[b];
    for (const auto& a : frontier) {
      Rational incoming = 0;
      for (const auto& b : net.neighbors(a))
        if (labelled.count(b)) incoming += labels.tau[b];
      labels.tau[a] = incoming / mass;
      labels.step[a] = step;
    }
    labelled.insert(frontier.begin(), frontier.end());
  }

  for (const auto& v : net.vertices()) {
    if (labelled.count(v)) continue;
    labels.tau[v] = 0;
    labels.step[v] = TriggeringLabels::kUnreachedStep;
  }
  return labels;
}

Rational weighting(const TriggeringLabels& labels, const Conditional& r) {
  if (r.atoms().empty()) return Rational(1);
  Rational least = 1;
  for (const auto& a : r.atoms()) {
    auto it = labels.tau.find(a);
    if (it == labels.tau.end()) throw SignatureMismatch("atom '" + a + "' has no triggering value");
    least = std::min(least, it->second);
  }
  return least;
}

const ActivationEntry& ActivationProfile::at(const std::string& id) const {
  for (const auto& e : entries)
    if (e.id == id) return e;
  throw IdError("unknown conditional id '" + id + "'");
}

ActivationProfile activation_profile(const BeliefBase& base, const std::map<std::string, Rational>& base_levels,
                                     const AssociationMatrix& assoc, const TriggeringLabels& labels) {
  const auto ids = base.ids();
  if (assoc.ids() != ids) throw IdError("association matrix does not match the belief base");
  if (base_levels.size() != ids.size()) throw IdError("base levels do not match the belief base");

  const auto& rules = base.conditionals();
  std::vector<Rational> weights;
  weights.reserve(rules.size());
  for (const auto& r : rules) weights.push_back(weighting(labels, r));

  ActivationProfile profile;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    auto level = base_levels.find(ids[i]);
    if (level == base_levels.end()) throw IdError("no base level for conditional '" + ids[i] + "'");
    Rational spreading = 0;
    for (std::size_t j = 0; j < rules.size(); ++j) spreading += weights[j] * assoc.at(i, j);
    profile.entries.push_back({ids[i], level->second, weights[i], spreading, level->second + spreading});
  }
  return profile;
}

std::vector<std::string> select(const ActivationProfile& profile, const Rational& theta) {
  if (theta < 0) throw RangeError("selection threshold must be non-negative");
  std::vector<std::string> out;
  for (const auto& e : profile.entries)
    if (e.total >= theta) out.push_back(e.id);
  return out;
}

}  // namespace actcond
