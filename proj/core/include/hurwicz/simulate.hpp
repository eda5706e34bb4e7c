#pragma once

#include "hurwicz/criterion.hpp"

#include <cstdint>
#include <variant>

namespace hurwicz {

struct ObservationRecord {
  std::uint64_t index = 0;  // 1-based, consecutive within a log
  std::string first;        // decision-relevant stage1 state
  int decision = 0;         // alternative index
  std::string second;       // stage2 state
  Rational payment;

  bool operator==(const ObservationRecord&) const = default;
};

struct ObservationLog {
  std::string tree_name;
  std::vector<ObservationRecord> records;

  bool operator==(const ObservationLog&) const = default;
};

/// Decision-taker model: a fixed risk attitude (the applied strategy is the
/// Hurwicz-optimal one for that lambda) or an explicitly given strategy.
using Behavior = std::variant<RiskParameter, Strategy>;

/// Samples n observation records. Stage1 draws that land on non-decision
/// states are discarded and redrawn, so records condition on the
/// decision-relevant states with renormalized probabilities. Sampling is
/// cumulative-probability inversion of exact rationals against a uniform
/// 64-bit draw; identical (tree, behavior, n, seed) inputs give
/// byte-identical logs.
///
/// Requires both probability vectors and n >= 1; throws
/// std::invalid_argument otherwise, or when no probability mass lies on
/// decision-relevant states.
ObservationLog simulate(const DecisionTree& tree, const Behavior& behavior,
                        std::size_t n, std::uint64_t seed,
                        std::uint64_t cap = kDefaultStrategyCap);

}  // namespace hurwicz
