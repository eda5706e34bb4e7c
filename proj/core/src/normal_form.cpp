#include "hurwicz/normal_form.hpp"

#include "hurwicz/io.hpp"

namespace hurwicz {

std::vector<Strategy> enumerate_strategies(const DecisionTree& tree, std::uint64_t cap) {
  const auto decision_idx = tree.decision_state_indices();
  const std::size_t n = decision_idx.size();

  std::uint64_t total = 1;
  for (std::size_t d = 0; d < n; ++d) {
    const std::uint64_t k = tree.alternatives.at(d).size();
    if (k == 0) return {};
    if (total > cap / k)
      throw StrategySpaceError("strategy space too large (cap " + std::to_string(cap) + ")");
    total *= k;
  }

  std::vector<Strategy> out;
  out.reserve(static_cast<std::size_t>(total));
  Strategy current{std::vector<int>(n, 0)};
  while (true) {
    out.push_back(current);
    // Odometer increment, least significant digit last.
    std::size_t d = n;
    while (d > 0) {
      --d;
      if (++current.choices[d] < static_cast<int>(tree.alternatives[d].size())) break;
      current.choices[d] = 0;
      if (d == 0) return out;
    }
    if (n == 0) return out;
  }
}

std::vector<CompoundState> enumerate_states(const DecisionTree& tree) {
  std::vector<CompoundState> out;
  for (std::size_t i : tree.decision_state_indices())
    for (const std::string& s2 : tree.stage2) out.push_back({tree.stage1[i].id, s2});
  return out;
}

PayoffMatrix normalize(const DecisionTree& tree, std::uint64_t cap) {
  ValidationReport report = validate_tree(tree);
  if (!report.ok()) throw ValidationError(std::move(report));

  PayoffMatrix m;
  m.strategies = enumerate_strategies(tree, cap);
  m.states = enumerate_states(tree);

  const auto decision_idx = tree.decision_state_indices();
  for (const Strategy& s : m.strategies) m.row_labels.push_back(strategy_label(tree, s));
  for (const CompoundState& st : m.states) m.col_labels.push_back(compound_label(st));

  const std::size_t n2 = tree.stage2.size();
  m.cells.reserve(m.strategies.size());
  for (const Strategy& s : m.strategies) {
    std::vector<Rational> row;
    row.reserve(m.states.size());
    for (std::size_t d = 0; d < decision_idx.size(); ++d) {
      const auto& payoffs = tree.payoff[d][static_cast<std::size_t>(s.choices[d])];
      for (std::size_t j = 0; j < n2; ++j) row.push_back(payoffs[j]);
    }
    m.cells.push_back(std::move(row));
  }
  return m;
}

}  // namespace hurwicz
