#include "hurwicz/model.hpp"
#include "hurwicz/reference_case.hpp"

#include "doctest.h"

using namespace hurwicz;

TEST_CASE("tree lookup helpers") {
  const DecisionTree tree = reference_tree();
  CHECK(tree.decision_state_count() == 3);
  CHECK(tree.decision_state_indices() == std::vector<std::size_t>{1, 2, 3});
  CHECK(tree.stage1_index("c") == 2);
  CHECK_FALSE(tree.stage1_index("z").has_value());
  CHECK(tree.stage2_index("d") == 3);
  CHECK(tree.decision_ordinal("b") == 0);
  CHECK(tree.decision_ordinal("d") == 2);
  CHECK_FALSE(tree.decision_ordinal("a").has_value());  // chance-only state
  CHECK_FALSE(tree.decision_ordinal("z").has_value());
}

TEST_CASE("reference tree validates cleanly") {
  CHECK(validate_tree(reference_tree()).ok());
}

TEST_CASE("validate_tree flags structural problems") {
  DecisionTree tree = reference_tree();

  SUBCASE("no decision states") {
    for (auto& s : tree.stage1) s.decision = false;
    tree.alternatives.clear();
    tree.payoff.clear();
    const auto report = validate_tree(tree);
    CHECK_FALSE(report.ok());
    CHECK(report.to_string().find("no decision states") != std::string::npos);
  }
  SUBCASE("duplicate stage1 ids") {
    tree.stage1[0].id = "b";
    CHECK_FALSE(validate_tree(tree).ok());
  }
  SUBCASE("label with a comma") {
    tree.stage2[1] = "b,1";
    CHECK_FALSE(validate_tree(tree).ok());
  }
  SUBCASE("empty label") {
    tree.alternatives[0][1] = "";
    CHECK_FALSE(validate_tree(tree).ok());
  }
  SUBCASE("missing payoff row") {
    tree.payoff[1].pop_back();
    const auto report = validate_tree(tree);
    CHECK_FALSE(report.ok());
    CHECK(report.to_string().find("c") != std::string::npos);
  }
  SUBCASE("short payoff row") {
    tree.payoff[2][1].pop_back();
    CHECK_FALSE(validate_tree(tree).ok());
  }
  SUBCASE("probabilities off by one entry") {
    tree.stage1_probs->pop_back();
    CHECK_FALSE(validate_tree(tree).ok());
  }
  SUBCASE("probabilities not summing to 1") {
    (*tree.stage2_probs)[0] += Rational(1, 100);
    const auto report = validate_tree(tree);
    CHECK_FALSE(report.ok());
    CHECK(report.to_string().find("do not sum to 1") != std::string::npos);
  }
  SUBCASE("negative probability") {
    (*tree.stage2_probs)[0] = Rational(-1, 10);
    (*tree.stage2_probs)[1] = Rational(7, 10);
    CHECK_FALSE(validate_tree(tree).ok());
  }
  SUBCASE("alternative count mismatch") {
    tree.alternatives.pop_back();
    CHECK_FALSE(validate_tree(tree).ok());
  }
}

TEST_CASE("strategy and compound labels concatenate the parts") {
  const DecisionTree tree = reference_tree();
  CHECK(strategy_label(tree, Strategy{{0, 1, 0}}) == "010");
  CHECK(strategy_label(tree, Strategy{{1, 1, 1}}) == "111");
  CHECK(compound_label({"c", "d"}) == "cd");
}

TEST_CASE("path_payoff walks the tree") {
  const DecisionTree tree = reference_tree();
  CHECK(path_payoff(tree, "c", 1, "d") == 8);
  CHECK(path_payoff(tree, "d", 1, "a") == 0);
  CHECK(path_payoff(tree, "b", 0, "c") == 4);

  CHECK_THROWS_WITH_AS(static_cast<void>(path_payoff(tree, "z", 0, "a")),
                       "unknown stage1 state 'z'", LookupError);
  CHECK_THROWS_WITH_AS(static_cast<void>(path_payoff(tree, "a", 0, "a")),
                       "stage1 state 'a' is not decision-relevant", LookupError);
  CHECK_THROWS_AS(static_cast<void>(path_payoff(tree, "b", 5, "a")), LookupError);
  CHECK_THROWS_WITH_AS(static_cast<void>(path_payoff(tree, "b", 0, "z")),
                       "unknown stage2 state 'z'", LookupError);
}

TEST_CASE("reference log mirrors the worked example") {
  const ObservationLog log = reference_log();
  const DecisionTree tree = reference_tree();
  REQUIRE(log.records.size() == 15);
  CHECK(log.records[0] == ObservationRecord{1, "b", 0, "c", Rational(4)});
  CHECK(log.records[3] == ObservationRecord{4, "c", 1, "d", Rational(8)});
  CHECK(log.records[8] == ObservationRecord{9, "c", 1, "a", Rational(3)});
  CHECK(log.records[14] == ObservationRecord{15, "d", 0, "b", Rational(4)});
  for (const auto& r : log.records) {
    CHECK(path_payoff(tree, r.first, r.decision, r.second) == r.payment);
    CHECK(r.first != "a");  // no decisions happen in the chance-only state
  }
}
