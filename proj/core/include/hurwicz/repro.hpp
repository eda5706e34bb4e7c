#pragma once

#include "hurwicz/io.hpp"

#include <optional>

namespace hurwicz {

struct ReferenceCheck {
  bool ok = false;
  std::string report;                   // all tables plus one line per check
  std::vector<std::string> mismatches;  // expected-vs-computed diffs, empty on success
};

/// End-to-end reproduction of the bundled reference case: normalize, sweep,
/// exact regions and both estimate modes, each diffed against the expected
/// tables embedded here. The expected matrix and the path semantics disagree
/// on eight cells of row 001; those cells are checked through the row
/// minimum/maximum only, which both readings share.
///
/// The sweep runs at `step`; the digit-exact expected-value table applies at
/// the default step 1/10, other steps are checked against line evaluations
/// derived from the expected matrix. `tree_override` substitutes the input
/// tree (exercises the mismatch path).
ReferenceCheck run_reference_check(
    const Rational& step = Rational(1, 10),
    const std::optional<DecisionTree>& tree_override = std::nullopt);

}  // namespace hurwicz
