#include <doctest.h>

#include <cmath>
#include <random>

#include "actcond/activation.hpp"
#include "actcond/errors.hpp"
#include "actcond/parser.hpp"
#include "fixture_data.hpp"
#include "oracle.hpp"

using namespace actcond;

namespace {

const BeliefBase& birds() {
  static const BeliefBase base = oracle::load(testdata::kBirdsFile);
  return base;
}

const ZPartition& birds_partition() {
  static const ZPartition zp = *z_partition(birds()).partition;
  return zp;
}

bool near(const Rational& value, const std::string& decimal) {
  const Rational diff = value - parse_rational(decimal);
  return (diff < 0 ? Rational(-diff) : diff) <= Rational(1, 200);
}

std::size_t expected_step(int step) {
  return step < 0 ? TriggeringLabels::kUnreachedStep : static_cast<std::size_t>(step);
}

}  // namespace

TEST_CASE("initial base levels") {
  const auto levels = initial_base_levels(birds_partition());
  REQUIRE(levels.size() == 20);
  for (const auto& row : testdata::kActivationTable) CHECK(levels.at(row.id) == parse_rational(row.base_level));
}

TEST_CASE("association") {
  SUBCASE("examples") {
    CHECK(association(birds().at("r1"), birds().at("r2")) == 1);
    CHECK(association(birds().at("r9"), birds().at("r10")) == Rational(2, 3));
    CHECK(association(birds().at("r1"), birds().at("r20")) == 0);
    CHECK(association(parse_conditional("(true | true)"), parse_conditional("(false | true)")) == 1);
    CHECK(association(parse_conditional("(true | true)"), parse_conditional("(a | true)")) == 0);
  }
  SUBCASE("birds matrix") {
    const AssociationMatrix m(birds());
    std::map<std::pair<int, int>, Rational> expected;
    for (const auto& cell : testdata::kAssociationTable) expected[{cell.i, cell.j}] = parse_rational(cell.value);
    for (int i = 1; i <= 20; ++i) {
      for (int j = 1; j <= 20; ++j) {
        const std::string a = "r" + std::to_string(i), b = "r" + std::to_string(j);
        Rational want = 0;
        if (i == j) want = 1;
        else if (auto it = expected.find({std::min(i, j), std::max(i, j)}); it != expected.end()) want = it->second;
        INFO(a << "," << b);
        CHECK(m.at(a, b) == want);
      }
    }
    CHECK_THROWS_AS(m.at("r1", "nope"), IdError);
  }
  SUBCASE("symmetric, bounded, unit diagonal on random bases") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
      const BeliefBase base = oracle::random_base(rng, 6, 8);
      const AssociationMatrix m(base);
      for (std::size_t i = 0; i < base.size(); ++i) {
        CHECK(m.at(i, i) == 1);
        for (std::size_t j = 0; j < base.size(); ++j) {
          CHECK(m.at(i, j) == m.at(j, i));
          CHECK(m.at(i, j) >= 0);
          CHECK(m.at(i, j) <= 1);
        }
      }
    }
  }
}

TEST_CASE("spreading network") {
  const SpreadingNetwork net = build_network(birds());
  CHECK(net.vertices().size() == 14);
  std::set<SpreadingNetwork::Edge> expected(testdata::kNetworkEdges.begin(), testdata::kNetworkEdges.end());
  CHECK(net.edges() == expected);
  CHECK(net.adjacent("f", "a"));
  CHECK(net.adjacent("a", "f"));
  CHECK_FALSE(net.adjacent("k", "a"));
  CHECK(net.neighbors("k") == std::set<std::string>{"m"});

  // No self-loops on any base.
  std::mt19937 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const SpreadingNetwork random_net = build_network(oracle::random_base(rng, 6, 6));
    for (const auto& [a, b] : random_net.edges()) CHECK(a < b);
  }
}

TEST_CASE("labelling") {
  const SpreadingNetwork net = build_network(birds());
  const auto q1 = parse_conditional(testdata::kQuery1);
  const auto q2 = parse_conditional(testdata::kQuery2);
  const auto l1 = label_network(net, q1);
  const auto l2 = label_network(net, q2);
  for (const auto& row : testdata::kLabelTable) {
    INFO(row.atom);
    CHECK(l1.tau.at(row.atom) == parse_rational(row.tau1));
    CHECK(l1.step.at(row.atom) == expected_step(row.step1));
    CHECK(l2.tau.at(row.atom) == parse_rational(row.tau2));
    CHECK(l2.step.at(row.atom) == expected_step(row.step2));
  }

  SUBCASE("labels fall with distance on the fixture") {
    for (const auto* labels : {&l1, &l2}) {
      for (const auto& [a, sa] : labels->step)
        for (const auto& [b, sb] : labels->step)
          if (sa < sb && sb != TriggeringLabels::kUnreachedStep) CHECK(labels->tau.at(a) > labels->tau.at(b));
    }
  }
  SUBCASE("unknown query atom") {
    CHECK_THROWS_AS(label_network(net, parse_conditional("(zz | a)")), SignatureMismatch);
  }
  SUBCASE("query without atoms labels nothing") {
    const auto none = label_network(net, parse_conditional("(true | true)"));
    for (const auto& [atom, tau] : none.tau) CHECK(tau == 0);
  }
  SUBCASE("labels lie in [0,1], primes are 1, unreachable are 0") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
      const BeliefBase base = oracle::random_base(rng, 6, 5);
      const auto q = oracle::random_conditional(rng, base.signature().atoms(), "q");
      const auto labels = label_network(build_network(base), q);
      for (const auto& [atom, tau] : labels.tau) {
        CHECK(tau >= 0);
        CHECK(tau <= 1);
        const auto step = labels.step.at(atom);
        if (step == 0) CHECK(tau == 1);
        if (step == TriggeringLabels::kUnreachedStep) CHECK(tau == 0);
      }
    }
  }
}

TEST_CASE("activation profile reproduces the birds table") {
  const AssociationMatrix assoc(birds());
  const auto levels = initial_base_levels(birds_partition());
  const SpreadingNetwork net = build_network(birds());
  const auto p1 = activation_profile(birds(), levels, assoc, label_network(net, parse_conditional(testdata::kQuery1)));
  const auto p2 = activation_profile(birds(), levels, assoc, label_network(net, parse_conditional(testdata::kQuery2)));

  for (const auto& row : testdata::kActivationTable) {
    INFO(row.id);
    CHECK(z_rank(birds_partition(), row.id) == static_cast<Rank>(row.z));
    CHECK(p1.at(row.id).weighting == parse_rational(row.w1));
    CHECK(p2.at(row.id).weighting == parse_rational(row.w2));
    CHECK(near(p1.at(row.id).spreading, row.s1));
    CHECK(near(p1.at(row.id).total, row.a1));
    CHECK(near(p2.at(row.id).spreading, row.s2));
    CHECK(near(p2.at(row.id).total, row.a2));
    CHECK(p1.at(row.id).total == p1.at(row.id).base_level + p1.at(row.id).spreading);
  }

  CHECK(select(p1, Rational(23, 10)) == std::vector<std::string>{"r1", "r2", "r3", "r6"});
  CHECK(select(p2, Rational(23, 10)) == std::vector<std::string>{"r8", "r9", "r10", "r11"});
  CHECK(select(p1, 0).size() == 20);
  CHECK_THROWS_AS(select(p1, -1), RangeError);
  CHECK_THROWS_AS(p1.at("nope"), IdError);

  // Without any triggered atom only the base level survives.
  CHECK(p1.at("r20").total == 1);
}

TEST_CASE("relevant conditionals carry positive spreading activation") {
  const AssociationMatrix assoc(birds());
  const auto levels = initial_base_levels(birds_partition());
  const auto labels = label_network(build_network(birds()), parse_conditional(testdata::kQuery2));
  const auto profile = activation_profile(birds(), levels, assoc, labels);
  for (const auto& entry : profile.entries) {
    const bool relevant = weighting(labels, birds().at(entry.id)) > 0;
    if (relevant) CHECK(entry.spreading > 0);
    if (entry.spreading == 0) CHECK_FALSE(relevant);
  }
}

TEST_CASE("selection shrinks as the threshold grows") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> num(0, 40);
  for (int trial = 0; trial < 100; ++trial) {
    ActivationProfile profile;
    for (int i = 0; i < 8; ++i) {
      ActivationEntry e;
      e.id = "r" + std::to_string(i + 1);
      e.total = Rational(num(rng), 10);
      profile.entries.push_back(e);
    }
    CHECK(select(profile, 0).size() == profile.entries.size());
    std::vector<std::string> previous = select(profile, 0);
    for (int t = 1; t <= 45; ++t) {
      const auto current = select(profile, Rational(t, 10));
      CHECK(std::includes(previous.begin(), previous.end(), current.begin(), current.end(),
                          [](const std::string& a, const std::string& b) {
                            return std::stoi(a.substr(1)) < std::stoi(b.substr(1));
                          }));
      previous = current;
    }
  }
}

TEST_CASE("profile input validation") {
  const AssociationMatrix assoc(birds());
  auto levels = initial_base_levels(birds_partition());
  const auto labels = label_network(build_network(birds()), parse_conditional(testdata::kQuery1));
  levels.erase("r5");
  CHECK_THROWS_AS(activation_profile(birds(), levels, assoc, labels), IdError);
}
