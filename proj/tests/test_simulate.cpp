#include "hurwicz/simulate.hpp"
#include "hurwicz/io.hpp"
#include "hurwicz/reference_case.hpp"

#include "doctest.h"

#include <map>

using namespace hurwicz;

TEST_CASE("equal seeds give identical logs, different seeds differ") {
  const DecisionTree tree = reference_tree();
  const Behavior lambda = RiskParameter(Rational(7, 10));
  const ObservationLog a = simulate(tree, lambda, 50, 123);
  const ObservationLog b = simulate(tree, lambda, 50, 123);
  const ObservationLog c = simulate(tree, lambda, 50, 124);
  CHECK(a == b);
  CHECK(serialize_log_csv(a, tree) == serialize_log_csv(b, tree));
  CHECK(a != c);
}

TEST_CASE("records are indexed consecutively and stay on decision states") {
  const DecisionTree tree = reference_tree();
  const ObservationLog log = simulate(tree, RiskParameter(Rational(1, 2)), 300, 9);
  REQUIRE(log.records.size() == 300);
  CHECK(log.tree_name == "reference");
  for (std::size_t i = 0; i < log.records.size(); ++i) {
    CHECK(log.records[i].index == i + 1);
    CHECK(log.records[i].first != "a");  // chance-only state is resampled away
  }
}

TEST_CASE("every record's payment equals the path payoff") {
  const DecisionTree tree = reference_tree();
  const ObservationLog log = simulate(tree, RiskParameter(Rational(0)), 200, 77);
  for (const auto& r : log.records)
    CHECK(path_payoff(tree, r.first, r.decision, r.second) == r.payment);
}

TEST_CASE("a lambda behavior plays the Hurwicz-optimal strategy") {
  const DecisionTree tree = reference_tree();
  // λ = 7/10 selects f3 = (0, 1, 0): alternative 1 exactly in state c.
  const ObservationLog log = simulate(tree, RiskParameter(Rational(7, 10)), 400, 5);
  for (const auto& r : log.records) CHECK(r.decision == (r.first == "c" ? 1 : 0));
}

TEST_CASE("an explicit strategy is followed verbatim") {
  const DecisionTree tree = reference_tree();
  const ObservationLog log = simulate(tree, Strategy{{1, 0, 1}}, 200, 31);
  for (const auto& r : log.records) {
    if (r.first == "b") CHECK(r.decision == 1);
    if (r.first == "c") CHECK(r.decision == 0);
    if (r.first == "d") CHECK(r.decision == 1);
  }
}

TEST_CASE("empirical stage frequencies follow the renormalized distribution") {
  const DecisionTree tree = reference_tree();
  const ObservationLog log = simulate(tree, Strategy{{0, 0, 0}}, 10000, 2024);
  std::map<std::string, int> count;
  for (const auto& r : log.records) ++count[r.first];
  // Conditioned on {b, c, d}: (3/7, 3/7, 1/7).
  CHECK(count["b"] > 3900);
  CHECK(count["b"] < 4700);
  CHECK(count["c"] > 3900);
  CHECK(count["c"] < 4700);
  CHECK(count["d"] > 1100);
  CHECK(count["d"] < 1700);
}

TEST_CASE("simulate validates its inputs") {
  DecisionTree tree = reference_tree();
  CHECK_THROWS_AS(simulate(tree, RiskParameter(Rational(1, 2)), 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(simulate(tree, Strategy{{0, 0}}, 5, 1), std::invalid_argument);
  CHECK_THROWS_AS(simulate(tree, Strategy{{0, 0, 9}}, 5, 1), std::invalid_argument);

  SUBCASE("probabilities are required") {
    tree.stage2_probs.reset();
    CHECK_THROWS_AS(simulate(tree, RiskParameter(Rational(1, 2)), 5, 1), std::invalid_argument);
  }
  SUBCASE("decision states need probability mass") {
    tree.stage1_probs = std::vector<Rational>{Rational(1), Rational(0), Rational(0), Rational(0)};
    CHECK_THROWS_AS(simulate(tree, RiskParameter(Rational(1, 2)), 5, 1), std::invalid_argument);
  }
  SUBCASE("invalid trees are rejected up front") {
    tree.stage1[0].id = "b";
    CHECK_THROWS_AS(simulate(tree, RiskParameter(Rational(1, 2)), 5, 1), ValidationError);
  }
}
