#pragma once

#include "hurwicz/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hurwicz {

/// A state or alternative lookup failed; the message names the missing
/// component.
struct LookupError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Stage1State {
  std::string id;
  bool decision = false;  // the operator chooses an alternative here

  bool operator==(const Stage1State&) const = default;
};

/// Two-stage chance/decision/chance tree. Nature picks a first-stage state,
/// the operator picks an alternative at decision-relevant states, nature
/// picks a second-stage state and the leaf pays out. Immutable by
/// convention once built; every operation on it is pure.
struct DecisionTree {
  std::string name;
  std::vector<Stage1State> stage1;
  /// One label list per decision-relevant stage1 state, in declaration order.
  std::vector<std::vector<std::string>> alternatives;
  std::vector<std::string> stage2;
  /// payoff[d][a][j]: d = decision-state ordinal, a = alternative index,
  /// j = stage2 index. Total by construction when the sizes line up
  /// (validate_tree checks that they do).
  std::vector<std::vector<std::vector<Rational>>> payoff;
  std::optional<std::vector<Rational>> stage1_probs;  // per stage1 state
  std::optional<std::vector<Rational>> stage2_probs;  // per stage2 state

  std::size_t decision_state_count() const;
  /// Indices into stage1 of the decision-relevant states, declaration order.
  std::vector<std::size_t> decision_state_indices() const;
  std::optional<std::size_t> stage1_index(std::string_view id) const;
  std::optional<std::size_t> stage2_index(std::string_view id) const;
  /// Ordinal among the decision-relevant states, or nullopt when `id` is
  /// unknown or not decision-relevant.
  std::optional<std::size_t> decision_ordinal(std::string_view id) const;

  bool operator==(const DecisionTree&) const = default;
};

struct Violation {
  std::string field;    // offending field ("stage1", "payoff", ...)
  std::string where;    // offending state / cell, empty when global
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

/// Checks every DecisionTree invariant; violations are the return value,
/// never an exception.
ValidationReport validate_tree(const DecisionTree& tree);

/// One alternative index per decision-relevant stage1 state, in stage1
/// declaration order.
struct Strategy {
  std::vector<int> choices;
  bool operator==(const Strategy&) const = default;
};

/// Pair of first- and second-stage chance outcomes; indexes one column of
/// the normalized payoff matrix. `first` is always decision-relevant.
struct CompoundState {
  std::string first;
  std::string second;
  bool operator==(const CompoundState&) const = default;
};

/// Concatenated alternative labels, e.g. "010".
std::string strategy_label(const DecisionTree& tree, const Strategy& s);

/// Concatenated state ids, e.g. "ba".
std::string compound_label(const CompoundState& s);

/// Leaf payment of the (first, alternative, second) path. Pure lookup;
/// throws LookupError naming the missing component.
const Rational& path_payoff(const DecisionTree& tree, std::string_view first,
                            int alternative, std::string_view second);

}  // namespace hurwicz
