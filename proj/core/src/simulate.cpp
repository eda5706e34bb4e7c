#include "hurwicz/simulate.hpp"

#include "hurwicz/io.hpp"

#include <random>

namespace hurwicz {

namespace {

// Uniform rational in [0, 1) with 64 bits of resolution.
Rational uniform_draw(std::mt19937_64& rng) {
  return Rational(BigInt(rng()), BigInt(1) << 64);
}

// Index of the first state whose cumulative probability exceeds u.
std::size_t pick(const std::vector<Rational>& probs, const Rational& u) {
  Rational cum(0);
  for (std::size_t i = 0; i + 1 < probs.size(); ++i) {
    cum += probs[i];
    if (u < cum) return i;
  }
  return probs.size() - 1;
}

}  // namespace

ObservationLog simulate(const DecisionTree& tree, const Behavior& behavior, std::size_t n,
                        std::uint64_t seed, std::uint64_t cap) {
  ValidationReport report = validate_tree(tree);
  if (!report.ok()) throw ValidationError(std::move(report));
  if (!tree.stage1_probs || !tree.stage2_probs)
    throw std::invalid_argument("simulation needs both stage probability vectors");
  if (n == 0) throw std::invalid_argument("need at least one observation");

  Rational decision_mass(0);
  for (std::size_t i = 0; i < tree.stage1.size(); ++i)
    if (tree.stage1[i].decision) decision_mass += (*tree.stage1_probs)[i];
  if (decision_mass == 0)
    throw std::invalid_argument("no probability mass on decision-relevant states");

  Strategy strategy;
  if (const RiskParameter* lambda = std::get_if<RiskParameter>(&behavior)) {
    const PayoffMatrix matrix = normalize(tree, cap);
    strategy = matrix.strategies[static_cast<std::size_t>(best_strategy(matrix, *lambda).strategy)];
  } else {
    strategy = std::get<Strategy>(behavior);
    const auto decision_idx = tree.decision_state_indices();
    if (strategy.choices.size() != decision_idx.size())
      throw std::invalid_argument("strategy has " + std::to_string(strategy.choices.size()) +
                                  " choices, tree has " + std::to_string(decision_idx.size()) +
                                  " decision states");
    for (std::size_t d = 0; d < decision_idx.size(); ++d)
      if (strategy.choices[d] < 0 ||
          static_cast<std::size_t>(strategy.choices[d]) >= tree.alternatives[d].size())
        throw std::invalid_argument("strategy choice out of range for state '" +
                                    tree.stage1[decision_idx[d]].id + "'");
  }

  std::mt19937_64 rng(seed);
  ObservationLog log;
  log.tree_name = tree.name;
  log.records.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t s1;
    do {
      s1 = pick(*tree.stage1_probs, uniform_draw(rng));
    } while (!tree.stage1[s1].decision);
    const std::size_t ord = *tree.decision_ordinal(tree.stage1[s1].id);
    const int alt = strategy.choices[ord];
    const std::size_t s2 = pick(*tree.stage2_probs, uniform_draw(rng));
    log.records.push_back({i + 1, tree.stage1[s1].id, alt, tree.stage2[s2],
                           tree.payoff[ord][static_cast<std::size_t>(alt)][s2]});
  }
  return log;
}

}  // namespace hurwicz
