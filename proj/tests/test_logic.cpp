#include <doctest.h>

#include <random>
#include <set>

#include "actcond/errors.hpp"
#include "actcond/logic.hpp"
#include "actcond/parser.hpp"
#include "oracle.hpp"

using namespace actcond;

namespace {

World world(const Signature& sig, const std::set<std::string>& true_atoms) {
  std::uint64_t bits = 0;
  for (const auto& a : true_atoms) bits |= std::uint64_t{1} << *sig.index_of(a);
  return World(sig, bits);
}

const Signature kAB({"a", "b"});

}  // namespace

TEST_CASE("evaluate") {
  const Signature sig({"a", "b"});
  for (const auto& w : enumerate_worlds(sig)) {
    CHECK(evaluate(Formula::truth(), w));
    CHECK_FALSE(evaluate(parse_formula("a && !a"), w));
  }
  CHECK_FALSE(evaluate(parse_formula("b => a"), world(sig, {"b"})));
  CHECK(evaluate(parse_formula("b => a"), world(sig, {"a"})));
  CHECK_THROWS_AS(evaluate(parse_formula("z"), world(sig, {})), SignatureMismatch);
}

TEST_CASE("verification and falsification") {
  const Signature sig({"a", "b", "c", "d", "f", "h", "i", "k", "l", "m", "p", "r", "s", "w"});
  const Conditional r1 = parse_conditional("(f | a && w)", "r1");
  const World w = world(sig, {"a", "b", "d", "f", "w"});
  CHECK(verifies(w, r1));
  CHECK_FALSE(falsifies(w, r1));

  const Conditional ba = parse_conditional("(b | a)");
  const World not_a = world(kAB, {"b"});
  CHECK_FALSE(verifies(not_a, ba));
  CHECK_FALSE(falsifies(not_a, ba));

  const Signature cf({"c", "f"});
  CHECK(falsifies(world(cf, {"c", "f"}), parse_conditional("(!f | c)")));
}

TEST_CASE("world enumeration") {
  CHECK(enumerate_worlds(Signature()).size() == 1);

  auto two = enumerate_worlds(kAB);
  REQUIRE(two.size() == 4);
  std::set<std::uint64_t> seen;
  for (const auto& w : two) seen.insert(w.bits());
  CHECK(seen.size() == 4);

  const Signature fourteen({"a", "b", "c", "d", "f", "h", "i", "k", "l", "m", "p", "r", "s", "w"});
  CHECK(enumerate_worlds(fourteen).size() == 16384);

  std::vector<std::string> many;
  for (int i = 0; i < 25; ++i) many.push_back("x" + std::to_string(i));
  try {
    enumerate_worlds(Signature(many));
    FAIL("expected a capacity error");
  } catch (const CapacityError& e) {
    CHECK(e.cap() == 24);
    CHECK(std::string(e.what()).find("24") != std::string::npos);
  }
  CHECK_THROWS_AS(enumerate_worlds(kAB, 1), CapacityError);
}

TEST_CASE("enumerated worlds are pairwise distinct total assignments") {
  for (std::size_t n = 0; n <= 6; ++n) {
    std::vector<std::string> atoms;
    for (std::size_t i = 0; i < n; ++i) atoms.push_back("a" + std::to_string(i));
    const Signature sig(atoms);
    std::set<std::vector<bool>> rows;
    for (const auto& w : enumerate_worlds(sig)) {
      std::vector<bool> row;
      for (const auto& a : atoms) row.push_back(w.value(a));
      rows.insert(row);
    }
    CHECK(rows.size() == (std::size_t{1} << n));
  }
}

TEST_CASE("negation and de Morgan hold pointwise") {
  std::mt19937 rng(7);
  const std::vector<std::string> atoms{"a", "b", "c", "d"};
  const Signature sig(atoms);
  const auto worlds = enumerate_worlds(sig);
  for (int trial = 0; trial < 200; ++trial) {
    const Formula f = oracle::random_formula(rng, atoms, 3);
    const Formula g = oracle::random_formula(rng, atoms, 3);
    for (const auto& w : worlds) {
      CHECK(evaluate(Formula::negation(f), w) == !evaluate(f, w));
      CHECK(evaluate(Formula::negation(Formula::conjunction(f, g)), w) ==
            evaluate(Formula::disjunction(Formula::negation(f), Formula::negation(g)), w));
      CHECK(evaluate(Formula::negation(Formula::disjunction(f, g)), w) ==
            evaluate(Formula::conjunction(Formula::negation(f), Formula::negation(g)), w));
    }
    // Truth-table compilation agrees with pointwise evaluation.
    const WorldSet m = models(f, sig);
    for (std::size_t i = 0; i < worlds.size(); ++i) CHECK(m.test(i) == evaluate(f, worlds[i]));
  }
}

TEST_CASE("no world both verifies and falsifies a conditional") {
  std::mt19937 rng(11);
  const std::vector<std::string> atoms{"a", "b", "c"};
  const auto worlds = enumerate_worlds(Signature(atoms));
  for (int trial = 0; trial < 200; ++trial) {
    const Conditional r = oracle::random_conditional(rng, atoms, "r");
    for (const auto& w : worlds) CHECK_FALSE((verifies(w, r) && falsifies(w, r)));
  }
}

TEST_CASE("world sets beyond one machine word") {
  const WorldSet high = WorldSet::atom_pattern(8, 7);
  CHECK(high.world_count() == 256);
  CHECK(high.count() == 128);
  CHECK(high.first() == 128u);
  CHECK((~high).count() == 128);
  const WorldSet small = WorldSet::atom_pattern(2, 1);
  CHECK(small.count() == 2);
  CHECK((~small).count() == 2);
  CHECK_FALSE(WorldSet(4, false).any());
}

TEST_CASE("formula rank") {
  const RankingFunction uniform(kAB, {0, 0, 0, 0});
  CHECK(rank_of_formula(uniform, Formula::falsity()) == kInfiniteRank);
  CHECK(rank_of_formula(uniform, Formula::truth()) == 0);
  CHECK(rank_of_formula(uniform, parse_formula("a && !b")) == 0);

  const RankingFunction k(kAB, {2, 3, 0, 1});  // index = a + 2b
  CHECK(rank_of_formula(k, Formula::truth()) == 0);
  CHECK(rank_of_formula(k, parse_formula("a")) == 1);

  CHECK_THROWS_AS(RankingFunction(kAB, {1, 1, 1, 1}), RangeError);
  CHECK_THROWS_AS(RankingFunction(kAB, {0, 1}), RangeError);
}

TEST_CASE("acceptance by ranking functions") {
  const Conditional ba = parse_conditional("(b | a)");
  // World index bit 0 = a, bit 1 = b.
  const RankingFunction any(kAB, {0, 5, 0, 1});
  CHECK(accepts(any, parse_conditional("(b | false)")));

  const RankingFunction strict(kAB, {0, 1, 0, 0});  // k(ab)=0 < k(a!b)=1
  CHECK(accepts(strict, ba));

  const RankingFunction tie(kAB, {0, 0, 0, 0});
  CHECK_FALSE(accepts(tie, ba));
}

TEST_CASE("acceptance is invariant under shifting all ranks") {
  std::mt19937 rng(3);
  const std::vector<std::string> atoms{"a", "b", "c"};
  const Signature sig(atoms);
  std::uniform_int_distribution<Rank> rank(0, 4);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rank> ranks(8);
    for (auto& r : ranks) r = rank(rng);
    ranks[std::uniform_int_distribution<std::size_t>(0, 7)(rng)] = 0;
    const RankingFunction k(sig, ranks);
    const Conditional r = oracle::random_conditional(rng, atoms, "r");

    // Shifted ranks are not normalized, so compare through the oracle rule.
    const Rank shift = 3;
    auto min_over = [&](const Formula& f, Rank offset) {
      Rank best = kInfiniteRank;
      for (const auto& w : enumerate_worlds(sig))
        if (evaluate(f, w)) best = std::min(best, ranks[w.bits()] + offset);
      return best;
    };
    auto accepted = [&](Rank offset) {
      if (min_over(r.antecedent(), offset) == kInfiniteRank) return true;
      return min_over(Formula::conjunction(r.antecedent(), r.consequent()), offset) <
             min_over(Formula::conjunction(r.antecedent(), Formula::negation(r.consequent())), offset);
    };
    CHECK(accepts(k, r) == accepted(0));
    CHECK(accepted(0) == accepted(shift));
  }
}

TEST_CASE("formula construction normalizes implication") {
  const Formula f = Formula::implication(Formula::atom("b"), Formula::atom("a"));
  CHECK(f.kind() == FormulaKind::disjunction);
  CHECK(f.operands()[0].kind() == FormulaKind::negation);
  CHECK(f.atoms() == std::vector<std::string>{"a", "b"});
  CHECK(Formula::truth().atoms().empty());
  CHECK_THROWS_AS(Formula::atom("1x"), SyntaxError);
  CHECK_THROWS_AS(Formula::atom("true"), SyntaxError);
}

TEST_CASE("signatures") {
  CHECK_THROWS_AS(Signature({"a", "a"}), IdError);
  CHECK_FALSE(Signature({"A"}).contains("a"));
  const Signature sig({"b", "a"});
  CHECK(sig.index_of("a") == 1u);
  CHECK(sig.extended({"c", "a", "c"}).atoms() == std::vector<std::string>{"b", "a", "c"});
}
