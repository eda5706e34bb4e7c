#include "hurwicz/reference_case.hpp"

namespace hurwicz {

DecisionTree reference_tree() {
  DecisionTree tree;
  tree.name = "reference";
  tree.stage1 = {{"a", false}, {"b", true}, {"c", true}, {"d", true}};
  tree.alternatives = {{"0", "1"}, {"0", "1"}, {"0", "1"}};
  tree.stage2 = {"a", "b", "c", "d"};
  // Alternative 0 is the flat option; alternative 1 spreads with the stage-2 state.
  tree.payoff = {
      {{4, 4, 4, 4}, {1, 2, 3, 4}},
      {{4, 4, 4, 4}, {3, 5, 6, 8}},
      {{4, 4, 4, 4}, {0, 4, 7, 10}},
  };
  const std::vector<Rational> probs = {Rational(3, 10), Rational(3, 10), Rational(3, 10),
                                       Rational(1, 10)};
  tree.stage1_probs = probs;
  tree.stage2_probs = probs;
  return tree;
}

ObservationLog reference_log() {
  ObservationLog log;
  log.tree_name = "reference";
  const char* first = "bbdcbbbbcbbcdcd";
  const int decision[] = {0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 1, 0, 1, 0};
  const char* second = "caddccabacbacdb";
  const int payment[] = {4, 4, 4, 8, 4, 4, 4, 4, 3, 4, 4, 3, 4, 8, 4};
  for (std::size_t i = 0; i < 15; ++i)
    log.records.push_back({i + 1, std::string(1, first[i]), decision[i],
                           std::string(1, second[i]), Rational(payment[i])});
  return log;
}

}  // namespace hurwicz
