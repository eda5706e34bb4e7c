#pragma once

#include "hurwicz/estimate.hpp"

#include <string>

namespace hurwicz {

/// Malformed document; the message carries the location (line or field).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Structurally well-formed tree document whose tree breaks an invariant.
struct ValidationError : std::runtime_error {
  explicit ValidationError(ValidationReport r);
  ValidationReport report;
};

struct RunConfig {
  Rational step{1, 10};
  std::uint64_t strategy_cap = kDefaultStrategyCap;
  std::string tie_break = "lowest-index";  // fixed; ships for display only
  int precision = 1;                       // decimal places for display

  /// Throws std::invalid_argument unless step is in (0, 1], cap >= 1 and
  /// precision >= 0.
  void validate() const;
};

// --- tree documents (JSON) ---

/// Parses and validates a tree document. Rational payoffs accept integer,
/// decimal and "p/q" spellings. Throws ParseError with the offending
/// line/field, or ValidationError with the full report.
DecisionTree parse_tree(const std::string& text);
std::string serialize_tree(const DecisionTree& tree);
DecisionTree load_tree(const std::string& path);

// --- payoff matrices (CSV; header = state labels, first column = strategy
// labels, cells as "p/q" or integers) ---

PayoffMatrix parse_matrix_csv(const std::string& text);
std::string serialize_matrix_csv(const PayoffMatrix& matrix);
PayoffMatrix load_matrix(const std::string& path);

// --- observation logs (CSV: index,step1,decision,step3,payment) ---

/// Parses a log and verifies every payment against the tree's payoffs;
/// mismatches and unknown states/alternatives raise ParseError naming the
/// record.
ObservationLog parse_log_csv(const std::string& text, const DecisionTree& tree);
std::string serialize_log_csv(const ObservationLog& log, const DecisionTree& tree);
ObservationLog load_log(const std::string& path, const DecisionTree& tree);

// --- display rendering (deterministic, locale-independent) ---

/// Matrix as delimited text in table layout: header of compound-state
/// labels, strategy labels in the first column. Integer cells render bare,
/// fractional ones at `precision` decimals.
std::string render_matrix(const PayoffMatrix& matrix, int precision = 1);

/// Sweep table: one column per grid point, one row per strategy, then the
/// best-value and best-strategy rows ("L*" / "f*"). Fixed decimals.
std::string render_sweep(const SweepTable& table, int precision = 1);

std::string render_regions(const LambdaRegionSet& regions);
std::string render_intervals(const std::vector<LambdaInterval>& intervals);
std::string render_points(const std::vector<Rational>& points, int precision = 1);
std::string render_profile(const RiskProfile& profile, const DecisionTree& tree,
                           int precision = 1);

/// Display label of row h: "f1", "f2", ...
std::string row_display_label(int strategy);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace hurwicz
