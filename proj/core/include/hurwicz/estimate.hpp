#pragma once

#include "hurwicz/simulate.hpp"

#include <optional>

namespace hurwicz {

struct StateInference {
  std::string state;
  long observations = 0;
  std::vector<long> alternative_counts;
  /// Majority alternative; unset when the state never appears in the log.
  std::optional<int> inferred;
  /// A majority tie was resolved to the lowest alternative index.
  bool ambiguous = false;
};

struct StrategyInference {
  std::vector<StateInference> per_state;  // decision states, declaration order
  /// Set when every decision state was observed.
  std::optional<Strategy> strategy;
  std::optional<int> strategy_index;  // index in enumerate_strategies order
  /// Strategies agreeing with every inferred alternative; the singleton when
  /// the inference is total.
  std::vector<int> completion;

  bool total() const { return strategy.has_value(); }
};

/// Per-state majority vote over the log. Throws LookupError naming the
/// record index when a record references an unknown state or alternative.
StrategyInference infer_strategy(const ObservationLog& log, const DecisionTree& tree,
                                 std::uint64_t cap = kDefaultStrategyCap);

enum class Identifiability {
  identified,            // total inference, nonempty inversion
  partially_identified,  // some states unobserved, union over completions nonempty
  non_rationalizable,    // no lambda selects any candidate strategy
};

/// Regret-minimizing diagnostic for strategies no Hurwicz agent would pick.
struct RegretFallback {
  int strategy = 0;
  Rational lambda_hat;
  Rational regret;
};

struct RiskProfile {
  StrategyInference inference;
  Identifiability status = Identifiability::identified;
  bool grid_mode = false;
  std::vector<LambdaInterval> intervals;  // exact mode estimate
  std::vector<Rational> points;           // grid mode estimate
  /// Present exactly when status == non_rationalizable.
  std::optional<RegretFallback> fallback;
};

/// Infers the strategy from the log and inverts the selection map.
/// grid_step empty = exact intervals; grid_step set = grid points
/// (invert_on_grid), default step 1/10.
RiskProfile estimate_lambda(const ObservationLog& log, const DecisionTree& tree,
                            std::optional<Rational> grid_step = std::nullopt,
                            std::uint64_t cap = kDefaultStrategyCap);

/// Minimizer of V(lambda) - L(strategy, lambda) over [0, 1]. The objective is
/// convex piecewise-linear, so the minimum sits on an envelope breakpoint or
/// an endpoint; ties take the smallest lambda. Regret 0 exactly when the
/// strategy has a nonempty admissible inversion.
RegretFallback regret_fallback(const PayoffMatrix& matrix, int strategy);

}  // namespace hurwicz
