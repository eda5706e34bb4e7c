#pragma once

#include "hurwicz/normal_form.hpp"

#include <span>

namespace hurwicz {

/// Pessimism weight of the Hurwicz rule, in [0, 1]. 1 weighs the row minimum
/// only (extreme caution, maximin); 0 weighs the row maximum only (extreme
/// optimism, maximax).
class RiskParameter {
 public:
  /// Throws std::domain_error outside [0, 1].
  explicit RiskParameter(Rational value);
  const Rational& value() const { return value_; }

 private:
  Rational value_;
};

/// The per-strategy criterion as a line in lambda:
/// L(h, lambda) = intercept + slope * lambda with intercept = row max and
/// slope = row min - row max (always <= 0).
struct CriterionLine {
  int strategy = 0;
  Rational intercept;
  Rational slope;

  Rational at(const Rational& lambda) const { return intercept + slope * lambda; }
};

std::vector<CriterionLine> criterion_lines(const PayoffMatrix& matrix);

/// lambda * min(row) + (1 - lambda) * max(row), exact.
/// Throws std::invalid_argument on an empty row.
Rational hurwicz_value(std::span<const Rational> row, const RiskParameter& lambda);

struct BestStrategy {
  int strategy = 0;  // row index; ties go to the lowest index
  Rational value;
};

BestStrategy best_strategy(const PayoffMatrix& matrix, const RiskParameter& lambda);

/// Criterion values over a regular lambda grid, plus the per-point optimum.
struct SweepTable {
  std::vector<std::string> row_labels;
  std::vector<Rational> grid;
  std::vector<std::vector<Rational>> values;  // [row][grid point]
  std::vector<Rational> best_value;           // per grid point
  std::vector<int> best_strategy;             // per grid point, lowest-index ties
};

/// Grid = {0, step, 2*step, ...} clipped to [0, 1] with 1 always included.
/// Throws std::domain_error unless 0 < step <= 1.
SweepTable sweep(const PayoffMatrix& matrix, const Rational& step);

struct LambdaRegion {
  int strategy = 0;
  Rational lo;
  Rational hi;  // lo == hi marks a single-point region
};

/// Partition of [0, 1] by selected strategy: closed intervals covering the
/// whole range, interiors pairwise disjoint, consecutive regions sharing
/// exactly their boundary point. A zero-width region appears where a
/// tie-break winner differs from both neighbouring segments.
struct LambdaRegionSet {
  std::vector<LambdaRegion> regions;
};

/// Exact upper envelope of the criterion lines; breakpoints are exact
/// rationals. Throws std::invalid_argument on an empty matrix.
LambdaRegionSet strategy_regions(const PayoffMatrix& matrix);

/// Lambda interval with per-endpoint inclusivity; lo == hi with both ends
/// closed is a single point.
struct LambdaInterval {
  Rational lo;
  Rational hi;
  bool lo_closed = true;
  bool hi_closed = true;

  bool contains(const Rational& x) const;
  bool operator==(const LambdaInterval&) const = default;
};

enum class InvertMode {
  selected,    // lambda values where the strategy is the unique tie-broken pick
  admissible,  // lambda values where the strategy attains the maximum, tie or not
};

/// Inverse of the selection map for one strategy, as exact intervals.
/// An empty result means the strategy is never chosen (selected mode) or
/// never optimal (admissible mode).
std::vector<LambdaInterval> invert(const PayoffMatrix& matrix, int strategy,
                                   InvertMode mode);

/// Grid flavour of invert(): the grid points (as in sweep()) where the
/// strategy is selected / admissible.
std::vector<Rational> invert_on_grid(const PayoffMatrix& matrix, int strategy,
                                     InvertMode mode, const Rational& step);

}  // namespace hurwicz
