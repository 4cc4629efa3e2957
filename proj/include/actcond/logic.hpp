#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace actcond {

/// Default upper bound on the number of atoms for exhaustive enumeration.
inline constexpr std::size_t kDefaultWorldCap = 24;

/// Ordered finite set of atom names. Cheap to copy; immutable.
class Signature {
 public:
  Signature();
  /// Throws SyntaxError on an invalid identifier and IdError on duplicates.
  explicit Signature(std::vector<std::string> atoms);

  std::size_t size() const noexcept { return atoms().size(); }
  bool empty() const noexcept { return atoms().empty(); }
  const std::vector<std::string>& atoms() const noexcept;
  std::optional<std::size_t> index_of(const std::string& atom) const;
  bool contains(const std::string& atom) const { return index_of(atom).has_value(); }

  /// This signature followed by the atoms of `extra` not yet present.
  Signature extended(const std::vector<std::string>& extra) const;

  friend bool operator==(const Signature& a, const Signature& b) { return a.atoms() == b.atoms(); }

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

/// `[A-Za-z_][A-Za-z0-9_]*` and not one of the reserved words.
bool is_valid_atom_name(const std::string& name);

enum class FormulaKind { constant, atom, negation, conjunction, disjunction };

/// Propositional formula over the core connectives. Implication is rewritten
/// to `!a || b` by the factory, so it never appears as a node.
class Formula {
 public:
  static Formula truth();
  static Formula falsity();
  static Formula atom(std::string name);
  static Formula negation(Formula operand);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);

  FormulaKind kind() const noexcept;
  /// Only meaningful for constants.
  bool constant_value() const noexcept;
  /// Only meaningful for atoms.
  const std::string& atom_name() const noexcept;
  /// One operand for negation, two for the binary connectives.
  const std::vector<Formula>& operands() const noexcept;

  /// Atoms mentioned, sorted and unique.
  const std::vector<std::string>& atoms() const noexcept;

  /// Text in the input grammar; parse(to_string(f)) is equivalent to f.
  std::string to_string() const;

  /// Structural equality.
  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Total truth assignment over a signature. Atom `i` of the signature is
/// true iff bit `i` of `bits()` is set, so worlds enumerate in index order.
class World {
 public:
  World(Signature signature, std::uint64_t bits);

  const Signature& signature() const noexcept { return signature_; }
  std::uint64_t bits() const noexcept { return bits_; }
  bool value(std::size_t atom_index) const noexcept { return (bits_ >> atom_index) & 1U; }
  /// Throws SignatureMismatch when the atom is not in the signature.
  bool value(const std::string& atom) const;

  /// Literal listing such as `a !b c`.
  std::string to_string() const;

  friend bool operator==(const World& a, const World& b) {
    return a.bits_ == b.bits_ && a.signature_ == b.signature_;
  }

 private:
  Signature signature_;
  std::uint64_t bits_;
};

/// A defeasible rule (B|A): "if A then usually B".
class Conditional {
 public:
  Conditional(std::string id, Formula consequent, Formula antecedent);

  const std::string& id() const noexcept { return id_; }
  const Formula& consequent() const noexcept { return consequent_; }
  const Formula& antecedent() const noexcept { return antecedent_; }
  /// Union of antecedent and consequent atoms, sorted.
  const std::vector<std::string>& atoms() const noexcept { return atoms_; }

  /// Same rule with a different id.
  Conditional renamed(std::string id) const;
  /// (!B|A).
  Conditional negated(std::string id) const;

  /// `(B | A)` in the input grammar.
  std::string to_string() const;

 private:
  std::string id_;
  Formula consequent_;
  Formula antecedent_;
  std::vector<std::string> atoms_;
};

bool evaluate(const Formula& f, const World& w);
bool verifies(const World& w, const Conditional& r);
bool falsifies(const World& w, const Conditional& r);

/// All 2^|sig| worlds in index order. Throws CapacityError above `cap`.
std::vector<World> enumerate_worlds(const Signature& sig, std::size_t cap = kDefaultWorldCap);

/// Set of worlds over a fixed signature, one bit per world index.
class WorldSet {
 public:
  WorldSet() = default;
  WorldSet(std::size_t world_count, bool filled);

  std::size_t world_count() const noexcept { return world_count_; }
  bool test(std::size_t world) const noexcept { return (words_[world / 64] >> (world % 64)) & 1U; }
  bool any() const noexcept;
  std::size_t count() const noexcept;
  std::optional<std::size_t> first() const noexcept;

  WorldSet& operator&=(const WorldSet& other);
  WorldSet& operator|=(const WorldSet& other);
  WorldSet operator~() const;
  friend WorldSet operator&(WorldSet a, const WorldSet& b) { return a &= b; }
  friend WorldSet operator|(WorldSet a, const WorldSet& b) { return a |= b; }
  friend bool operator==(const WorldSet& a, const WorldSet& b) = default;

  /// Worlds in which atom `index` of a signature with `atom_count` atoms holds.
  static WorldSet atom_pattern(std::size_t atom_count, std::size_t index);

 private:
  void trim() noexcept;
  std::size_t world_count_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Models of `f` among the worlds of `sig` (truth-table compilation).
/// Throws SignatureMismatch or CapacityError.
WorldSet models(const Formula& f, const Signature& sig, std::size_t cap = kDefaultWorldCap);

/// Rank of a world or formula; kInfiniteRank stands for ∞.
using Rank = std::uint32_t;
inline constexpr Rank kInfiniteRank = std::numeric_limits<Rank>::max();

/// Ordinal conditional function over the worlds of a signature. Used as a
/// semantic reference for consistency and acceptance.
class RankingFunction {
 public:
  /// `ranks[i]` is the rank of world index i. Throws RangeError when the
  /// size is wrong or no world has rank 0.
  RankingFunction(Signature signature, std::vector<Rank> ranks);

  const Signature& signature() const noexcept { return signature_; }
  Rank rank(std::size_t world) const { return ranks_.at(world); }
  const std::vector<Rank>& ranks() const noexcept { return ranks_; }

 private:
  Signature signature_;
  std::vector<Rank> ranks_;
};

/// min{k(w) | w |= f}, kInfiniteRank when f has no model.
Rank rank_of_formula(const RankingFunction& k, const Formula& f);
/// k(AB) < k(A!B) or k(A) = ∞.
bool accepts(const RankingFunction& k, const Conditional& r);

}  // namespace actcond
