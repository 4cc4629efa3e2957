#include "actcond/logic.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <unordered_map>

#include "actcond/errors.hpp"

namespace actcond {

// ---------------------------------------------------------------------------
// Signature

struct Signature::Impl {
  std::vector<std::string> atoms;
  std::unordered_map<std::string, std::size_t> index;
};

bool is_valid_atom_name(const std::string& name) {
  if (name.empty() || name == "true" || name == "false") return false;
  auto head = static_cast<unsigned char>(name.front());
  if (!std::isalpha(head) && head != '_') return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || u == '_';
  });
}

Signature::Signature() : impl_(std::make_shared<Impl>()) {}

Signature::Signature(std::vector<std::string> atoms) {
  auto impl = std::make_shared<Impl>();
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (!is_valid_atom_name(atoms[i]))
      throw SyntaxError("invalid atom name '" + atoms[i] + "'", 0);
    if (!impl->index.emplace(atoms[i], i).second)
      throw IdError("duplicate atom '" + atoms[i] + "' in signature");
  }
  impl->atoms = std::move(atoms);
  impl_ = std::move(impl);
}

const std::vector<std::string>& Signature::atoms() const noexcept { return impl_->atoms; }

std::optional<std::size_t> Signature::index_of(const std::string& atom) const {
  auto it = impl_->index.find(atom);
  if (it == impl_->index.end()) return std::nullopt;
  return it->second;
}

Signature Signature::extended(const std::vector<std::string>& extra) const {
  std::vector<std::string> atoms = impl_->atoms;
  bool grew = false;
  for (const auto& a : extra) {
    if (!contains(a) && std::find(atoms.begin() + static_cast<std::ptrdiff_t>(size()), atoms.end(), a) == atoms.end()) {
      atoms.push_back(a);
      grew = true;
    }
  }
  return grew ? Signature(std::move(atoms)) : *this;
}

// ---------------------------------------------------------------------------
// Formula

struct Formula::Node {
  FormulaKind kind = FormulaKind::constant;
  bool value = true;
  std::string name;
  std::vector<Formula> operands;
  std::vector<std::string> atoms;
};

namespace {

std::vector<std::string> merged_atoms(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

Formula Formula::truth() {
  static const Formula f(std::make_shared<Node>(Node{FormulaKind::constant, true, {}, {}, {}}));
  return f;
}

Formula Formula::falsity() {
  static const Formula f(std::make_shared<Node>(Node{FormulaKind::constant, false, {}, {}, {}}));
  return f;
}

Formula Formula::atom(std::string name) {
  if (!is_valid_atom_name(name)) throw SyntaxError("invalid atom name '" + name + "'", 0);
  auto node = std::make_shared<Node>();
  node->kind = FormulaKind::atom;
  node->atoms = {name};
  node->name = std::move(name);
  return Formula(std::move(node));
}

Formula Formula::negation(Formula operand) {
  auto node = std::make_shared<Node>();
  node->kind = FormulaKind::negation;
  node->atoms = operand.atoms();
  node->operands = {std::move(operand)};
  return Formula(std::move(node));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  auto node = std::make_shared<Node>();
  node->kind = FormulaKind::conjunction;
  node->atoms = merged_atoms(lhs.atoms(), rhs.atoms());
  node->operands = {std::move(lhs), std::move(rhs)};
  return Formula(std::move(node));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  auto node = std::make_shared<Node>();
  node->kind = FormulaKind::disjunction;
  node->atoms = merged_atoms(lhs.atoms(), rhs.atoms());
  node->operands = {std::move(lhs), std::move(rhs)};
  return Formula(std::move(node));
}

Formula Formula::implication(Formula lhs, Formula rhs) {
  return disjunction(negation(std::move(lhs)), std::move(rhs));
}

FormulaKind Formula::kind() const noexcept { return node_->kind; }
bool Formula::constant_value() const noexcept { return node_->value; }
const std::string& Formula::atom_name() const noexcept { return node_->name; }
const std::vector<Formula>& Formula::operands() const noexcept { return node_->operands; }
const std::vector<std::string>& Formula::atoms() const noexcept { return node_->atoms; }

namespace {

int precedence(FormulaKind kind) {
  switch (kind) {
    case FormulaKind::disjunction: return 1;
    case FormulaKind::conjunction: return 2;
    case FormulaKind::negation: return 3;
    default: return 4;
  }
}

void print(const Formula& f, std::string& out) {
  auto wrapped = [&out](const Formula& sub, bool parens) {
    if (parens) out += '(';
    print(sub, out);
    if (parens) out += ')';
  };
  switch (f.kind()) {
    case FormulaKind::constant:
      out += f.constant_value() ? "true" : "false";
      break;
    case FormulaKind::atom:
      out += f.atom_name();
      break;
    case FormulaKind::negation:
      out += '!';
      wrapped(f.operands()[0], precedence(f.operands()[0].kind()) < 3);
      break;
    case FormulaKind::conjunction:
    case FormulaKind::disjunction: {
      int level = precedence(f.kind());
      // Binary connectives parse left-associatively.
      wrapped(f.operands()[0], precedence(f.operands()[0].kind()) < level);
      out += f.kind() == FormulaKind::conjunction ? " && " : " || ";
      wrapped(f.operands()[1], precedence(f.operands()[1].kind()) <= level);
      break;
    }
  }
}

}  // namespace

std::string Formula::to_string() const {
  std::string out;
  print(*this, out);
  return out;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case FormulaKind::constant: return a.constant_value() == b.constant_value();
    case FormulaKind::atom: return a.atom_name() == b.atom_name();
    default: return a.operands() == b.operands();
  }
}

// ---------------------------------------------------------------------------
// World

World::World(Signature signature, std::uint64_t bits) : signature_(std::move(signature)), bits_(bits) {
  if (signature_.size() < 64 && (bits_ >> signature_.size()) != 0)
    throw RangeError("world bits exceed signature size");
}

bool World::value(const std::string& atom) const {
  auto idx = signature_.index_of(atom);
  if (!idx) throw SignatureMismatch("atom '" + atom + "' is not in the world's signature");
  return value(*idx);
}

std::string World::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < signature_.size(); ++i) {
    if (i) out += ' ';
    if (!value(i)) out += '!';
    out += signature_.atoms()[i];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Conditional

Conditional::Conditional(std::string id, Formula consequent, Formula antecedent)
    : id_(std::move(id)),
      consequent_(std::move(consequent)),
      antecedent_(std::move(antecedent)),
      atoms_(merged_atoms(antecedent_.atoms(), consequent_.atoms())) {}

Conditional Conditional::renamed(std::string id) const { return Conditional(std::move(id), consequent_, antecedent_); }

Conditional Conditional::negated(std::string id) const {
  return Conditional(std::move(id), Formula::negation(consequent_), antecedent_);
}

std::string Conditional::to_string() const {
  return "(" + consequent_.to_string() + " | " + antecedent_.to_string() + ")";
}

// ---------------------------------------------------------------------------
// Evaluation

bool evaluate(const Formula& f, const World& w) {
  switch (f.kind()) {
    case FormulaKind::constant: return f.constant_value();
    case FormulaKind::atom: return w.value(f.atom_name());
    case FormulaKind::negation: return !evaluate(f.operands()[0], w);
    case FormulaKind::conjunction: return evaluate(f.operands()[0], w) && evaluate(f.operands()[1], w);
    case FormulaKind::disjunction: return evaluate(f.operands()[0], w) || evaluate(f.operands()[1], w);
  }
  return false;
}

namespace {

void require_signature(const std::vector<std::string>& atoms, const Signature& sig) {
  for (const auto& a : atoms)
    if (!sig.contains(a)) throw SignatureMismatch("atom '" + a + "' is not in the signature");
}

}  // namespace

bool verifies(const World& w, const Conditional& r) {
  require_signature(r.atoms(), w.signature());
  return evaluate(r.antecedent(), w) && evaluate(r.consequent(), w);
}

bool falsifies(const World& w, const Conditional& r) {
  require_signature(r.atoms(), w.signature());
  return evaluate(r.antecedent(), w) && !evaluate(r.consequent(), w);
}

namespace {

void check_cap(const Signature& sig, std::size_t cap) {
  if (sig.size() > cap)
    throw CapacityError("signature has " + std::to_string(sig.size()) + " atoms; the enumeration cap is " +
                            std::to_string(cap),
                        cap);
  if (sig.size() >= 63) throw CapacityError("signature too large for world indexing", cap);
}

}  // namespace

std::vector<World> enumerate_worlds(const Signature& sig, std::size_t cap) {
  check_cap(sig, cap);
  const std::uint64_t count = std::uint64_t{1} << sig.size();
  std::vector<World> worlds;
  worlds.reserve(count);
  for (std::uint64_t bits = 0; bits < count; ++bits) worlds.emplace_back(sig, bits);
  return worlds;
}

// ---------------------------------------------------------------------------
// WorldSet

WorldSet::WorldSet(std::size_t world_count, bool filled)
    : world_count_(world_count), words_((world_count + 63) / 64, filled ? ~std::uint64_t{0} : 0) {
  trim();
}

void WorldSet::trim() noexcept {
  if (world_count_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (world_count_ % 64)) - 1;
}

bool WorldSet::any() const noexcept {
  return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t WorldSet::count() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::optional<std::size_t> WorldSet::first() const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
  return std::nullopt;
}

WorldSet& WorldSet::operator&=(const WorldSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

WorldSet& WorldSet::operator|=(const WorldSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

WorldSet WorldSet::operator~() const {
  WorldSet out = *this;
  for (auto& w : out.words_) w = ~w;
  out.trim();
  return out;
}

WorldSet WorldSet::atom_pattern(std::size_t atom_count, std::size_t index) {
  static constexpr std::uint64_t kLowPatterns[6] = {
      0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
      0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL,
  };
  WorldSet set(std::size_t{1} << atom_count, false);
  for (std::size_t w = 0; w < set.words_.size(); ++w) {
    if (index < 6)
      set.words_[w] = kLowPatterns[index];
    else
      set.words_[w] = ((w >> (index - 6)) & 1U) ? ~std::uint64_t{0} : 0;
  }
  set.trim();
  return set;
}

namespace {

WorldSet compile(const Formula& f, const Signature& sig, std::size_t world_count) {
  switch (f.kind()) {
    case FormulaKind::constant: return WorldSet(world_count, f.constant_value());
    case FormulaKind::atom: return WorldSet::atom_pattern(sig.size(), *sig.index_of(f.atom_name()));
    case FormulaKind::negation: return ~compile(f.operands()[0], sig, world_count);
    case FormulaKind::conjunction:
      return compile(f.operands()[0], sig, world_count) & compile(f.operands()[1], sig, world_count);
    case FormulaKind::disjunction:
      return compile(f.operands()[0], sig, world_count) | compile(f.operands()[1], sig, world_count);
  }
  return WorldSet(world_count, false);
}

}  // namespace

WorldSet models(const Formula& f, const Signature& sig, std::size_t cap) {
  check_cap(sig, cap);
  require_signature(f.atoms(), sig);
  return compile(f, sig, std::size_t{1} << sig.size());
}

// ---------------------------------------------------------------------------
// Ranking functions

RankingFunction::RankingFunction(Signature signature, std::vector<Rank> ranks)
    : signature_(std::move(signature)), ranks_(std::move(ranks)) {
  check_cap(signature_, kDefaultWorldCap);
  if (ranks_.size() != (std::size_t{1} << signature_.size()))
    throw RangeError("ranking function needs one rank per world");
  if (std::find(ranks_.begin(), ranks_.end(), Rank{0}) == ranks_.end())
    throw RangeError("ranking function is not normalized: no world has rank 0");
}

Rank rank_of_formula(const RankingFunction& k, const Formula& f) {
  const WorldSet m = models(f, k.signature());
  Rank best = kInfiniteRank;
  for (std::size_t w = 0; w < m.world_count(); ++w)
    if (m.test(w)) best = std::min(best, k.rank(w));
  return best;
}

bool accepts(const RankingFunction& k, const Conditional& r) {
  if (rank_of_formula(k, r.antecedent()) == kInfiniteRank) return true;
  const Rank verified = rank_of_formula(k, Formula::conjunction(r.antecedent(), r.consequent()));
  const Rank falsified = rank_of_formula(k, Formula::conjunction(r.antecedent(), Formula::negation(r.consequent())));
  return verified < falsified;
}

}  // namespace actcond
