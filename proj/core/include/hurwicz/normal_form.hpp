#pragma once

#include "hurwicz/model.hpp"

#include <cstdint>

namespace hurwicz {

inline constexpr std::uint64_t kDefaultStrategyCap = std::uint64_t{1} << 20;

/// The pure-strategy space exceeds the configured cap.
struct StrategySpaceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Pure strategies (rows) against compound nature states (columns) with
/// exact payoffs. Built from a tree by normalize(), or loaded directly from
/// CSV, in which case only the labels and cells are populated.
struct PayoffMatrix {
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::vector<std::vector<Rational>> cells;  // row-major, rows() x cols()
  std::vector<Strategy> strategies;          // empty for bare matrices
  std::vector<CompoundState> states;         // empty for bare matrices

  std::size_t rows() const { return cells.size(); }
  std::size_t cols() const { return cells.empty() ? 0 : cells.front().size(); }
};

/// All pure strategies in lexicographic order: the first decision-relevant
/// stage1 state is the most significant digit, alternative indices ascend.
/// Throws StrategySpaceError ("strategy space too large") past `cap`.
std::vector<Strategy> enumerate_strategies(const DecisionTree& tree,
                                           std::uint64_t cap = kDefaultStrategyCap);

/// Compound states: outer loop over decision-relevant stage1 states, inner
/// loop over stage2 states, both in declaration order.
std::vector<CompoundState> enumerate_states(const DecisionTree& tree);

/// Normal form of the tree: cell (h, j) is the payoff of following strategy
/// h through compound state j. Deterministic, labels included.
PayoffMatrix normalize(const DecisionTree& tree,
                       std::uint64_t cap = kDefaultStrategyCap);

}  // namespace hurwicz
