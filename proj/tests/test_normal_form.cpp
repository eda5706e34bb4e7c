#include "hurwicz/normal_form.hpp"
#include "hurwicz/io.hpp"
#include "hurwicz/reference_case.hpp"

#include "doctest.h"

using namespace hurwicz;

TEST_CASE("strategies enumerate lexicographically, first decision state most significant") {
  const auto strategies = enumerate_strategies(reference_tree());
  REQUIRE(strategies.size() == 8);
  CHECK(strategies[0].choices == std::vector<int>{0, 0, 0});
  CHECK(strategies[1].choices == std::vector<int>{0, 0, 1});
  CHECK(strategies[2].choices == std::vector<int>{0, 1, 0});
  CHECK(strategies[7].choices == std::vector<int>{1, 1, 1});
}

TEST_CASE("states pair decision-relevant stage1 with stage2, declaration order") {
  const auto states = enumerate_states(reference_tree());
  REQUIRE(states.size() == 12);
  CHECK(states[0].first == "b");
  CHECK(states[0].second == "a");
  CHECK(states[3].second == "d");
  CHECK(states[4].first == "c");
  CHECK(states[11].first == "d");
  CHECK(states[11].second == "d");
}

TEST_CASE("mixed radix enumeration") {
  DecisionTree tree = reference_tree();
  tree.alternatives[1].push_back("2");  // state c gets a third alternative
  tree.payoff[1].push_back({Rational(1), Rational(1), Rational(1), Rational(1)});
  const auto strategies = enumerate_strategies(tree);
  REQUIRE(strategies.size() == 12);
  CHECK(strategies[0].choices == std::vector<int>{0, 0, 0});
  CHECK(strategies[1].choices == std::vector<int>{0, 0, 1});
  CHECK(strategies[2].choices == std::vector<int>{0, 1, 0});
  CHECK(strategies[5].choices == std::vector<int>{0, 2, 1});
  CHECK(strategies[11].choices == std::vector<int>{1, 2, 1});
}

TEST_CASE("the strategy cap guards the enumeration") {
  CHECK_THROWS_AS(enumerate_strategies(reference_tree(), 7), StrategySpaceError);
  CHECK(enumerate_strategies(reference_tree(), 8).size() == 8);
}

TEST_CASE("normalize reproduces the worked example matrix") {
  const PayoffMatrix m = normalize(reference_tree());
  REQUIRE(m.rows() == 8);
  REQUIRE(m.cols() == 12);
  CHECK(m.row_labels == std::vector<std::string>{"000", "001", "010", "011", "100", "101", "110",
                                                 "111"});
  CHECK(m.col_labels == std::vector<std::string>{"ba", "bb", "bc", "bd", "ca", "cb", "cc", "cd",
                                                 "da", "db", "dc", "dd"});

  // Strategy 010 follows alternative 1 only in state c.
  CHECK(m.cells[2] == std::vector<Rational>{4, 4, 4, 4, 3, 5, 6, 8, 4, 4, 4, 4});
  // Strategy 111 spreads everywhere.
  CHECK(m.cells[7] == std::vector<Rational>{1, 2, 3, 4, 3, 5, 6, 8, 0, 4, 7, 10});
  // Flat strategy.
  CHECK(m.cells[0] == std::vector<Rational>(12, Rational(4)));
  // Cell (010, cd) from the worked example.
  CHECK(m.cells[2][7] == 8);
  CHECK(m.cells[7][8] == 0);

  // Every cell agrees with a direct path traversal.
  for (std::size_t h = 0; h < m.rows(); ++h)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const CompoundState& s = m.states[j];
      const auto ord = reference_tree().decision_ordinal(s.first);
      const int alt = m.strategies[h].choices[*ord];
      CHECK(m.cells[h][j] == path_payoff(reference_tree(), s.first, alt, s.second));
    }
}

TEST_CASE("normalize rejects invalid trees with a report") {
  DecisionTree tree = reference_tree();
  (*tree.stage1_probs)[0] = Rational(1, 2);
  CHECK_THROWS_AS(static_cast<void>(normalize(tree)), ValidationError);
  try {
    static_cast<void>(normalize(tree));
  } catch (const ValidationError& e) {
    CHECK_FALSE(e.report.ok());
    CHECK(std::string(e.what()).find("sum to 1") != std::string::npos);
  }
}

TEST_CASE("single decision state, single alternative") {
  DecisionTree tree;
  tree.name = "tiny";
  tree.stage1 = {{"x", true}};
  tree.alternatives = {{"go"}};
  tree.stage2 = {"u", "v"};
  tree.payoff = {{{Rational(1), Rational(2)}}};
  const PayoffMatrix m = normalize(tree);
  CHECK(m.rows() == 1);
  CHECK(m.cols() == 2);
  CHECK(m.row_labels[0] == "go");
  CHECK(m.col_labels == std::vector<std::string>{"xu", "xv"});
}
