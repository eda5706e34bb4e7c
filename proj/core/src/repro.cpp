#include "hurwicz/repro.hpp"

#include "hurwicz/reference_case.hpp"

#include <algorithm>

namespace hurwicz {

namespace {

const char* const kRowLabels[8] = {"000", "001", "010", "011", "100", "101", "110", "111"};
const char* const kColLabels[12] = {"ba", "bb", "bc", "bd", "ca", "cb",
                                    "cc", "cd", "da", "db", "dc", "dd"};

// Payment matrix as printed. Row 001 columns ba..cd contradict the path
// semantics (the flat alternative pays 4, not 3); those eight cells are
// masked below and covered through the row extrema, which both readings
// share.
const int kMatrix[8][12] = {
    {4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4},
    {3, 3, 3, 3, 3, 3, 3, 3, 0, 4, 7, 10},
    {4, 4, 4, 4, 3, 5, 6, 8, 4, 4, 4, 4},
    {4, 4, 4, 4, 3, 5, 6, 8, 0, 4, 7, 10},
    {1, 2, 3, 4, 4, 4, 4, 4, 4, 4, 4, 4},
    {1, 2, 3, 4, 4, 4, 4, 4, 0, 4, 7, 10},
    {1, 2, 3, 4, 3, 5, 6, 8, 4, 4, 4, 4},
    {1, 2, 3, 4, 3, 5, 6, 8, 0, 4, 7, 10},
};

bool masked(std::size_t row, std::size_t col) { return row == 1 && col < 8; }

// Criterion table at step 1/10, digits as printed.
const char* const kSweep[8][11] = {
    {"4.0", "4.0", "4.0", "4.0", "4.0", "4.0", "4.0", "4.0", "4.0", "4.0", "4.0"},
    {"10.0", "9.0", "8.0", "7.0", "6.0", "5.0", "4.0", "3.0", "2.0", "1.0", "0.0"},
    {"8.0", "7.5", "7.0", "6.5", "6.0", "5.5", "5.0", "4.5", "4.0", "3.5", "3.0"},
    {"10.0", "9.0", "8.0", "7.0", "6.0", "5.0", "4.0", "3.0", "2.0", "1.0", "0.0"},
    {"4.0", "3.7", "3.4", "3.1", "2.8", "2.5", "2.2", "1.9", "1.6", "1.3", "1.0"},
    {"10.0", "9.0", "8.0", "7.0", "6.0", "5.0", "4.0", "3.0", "2.0", "1.0", "0.0"},
    {"8.0", "7.3", "6.6", "5.9", "5.2", "4.5", "3.8", "3.1", "2.4", "1.7", "1.0"},
    {"10.0", "9.0", "8.0", "7.0", "6.0", "5.0", "4.0", "3.0", "2.0", "1.0", "0.0"},
};
const char* const kSweepBest[11] = {"10.0", "9.0", "8.0", "7.0", "6.0", "5.5",
                                    "5.0",  "4.5", "4.0", "4.0", "4.0"};
const int kSweepPick[11] = {1, 1, 1, 1, 1, 2, 2, 2, 0, 0, 0};

struct Check {
  std::string report;                   // one line per named check
  std::vector<std::string> mismatches;  // detailed diffs

  void run(const std::string& name, std::vector<std::string> diffs) {
    report += diffs.empty() ? "[ok]   " : "[FAIL] ";
    report += name + "\n";
    for (std::string& d : diffs) mismatches.push_back(std::move(d));
  }
};

}  // namespace

ReferenceCheck run_reference_check(const Rational& step,
                                   const std::optional<DecisionTree>& tree_override) {
  const DecisionTree tree = tree_override ? *tree_override : reference_tree();
  const ObservationLog log = reference_log();
  const bool default_step = step == Rational(1, 10);

  const PayoffMatrix matrix = normalize(tree);
  const SweepTable table = sweep(matrix, step);
  const LambdaRegionSet regions = strategy_regions(matrix);
  const RiskProfile grid_profile = estimate_lambda(log, tree, step);
  const RiskProfile exact_profile = estimate_lambda(log, tree);

  Check check;

  {
    std::vector<std::string> diffs;
    if (matrix.rows() != 8 || matrix.cols() != 12)
      diffs.push_back("matrix: expected 8x12, computed " + std::to_string(matrix.rows()) + "x" +
                      std::to_string(matrix.cols()));
    for (std::size_t h = 0; h < std::min<std::size_t>(8, matrix.rows()); ++h)
      if (matrix.row_labels[h] != kRowLabels[h])
        diffs.push_back("matrix row " + std::to_string(h) + ": expected label " + kRowLabels[h] +
                        ", computed " + matrix.row_labels[h]);
    for (std::size_t j = 0; j < std::min<std::size_t>(12, matrix.cols()); ++j)
      if (matrix.col_labels[j] != kColLabels[j])
        diffs.push_back("matrix column " + std::to_string(j) + ": expected label " + kColLabels[j] +
                        ", computed " + matrix.col_labels[j]);
    check.run("matrix shape and labels", std::move(diffs));
  }

  const bool shape_ok = matrix.rows() == 8 && matrix.cols() == 12;
  {
    std::vector<std::string> diffs;
    for (std::size_t h = 0; shape_ok && h < 8; ++h)
      for (std::size_t j = 0; j < 12; ++j)
        if (!masked(h, j) && matrix.cells[h][j] != kMatrix[h][j])
          diffs.push_back(std::string("matrix (") + kRowLabels[h] + ", " + kColLabels[j] +
                          "): expected " + std::to_string(kMatrix[h][j]) + ", computed " +
                          format_fraction(matrix.cells[h][j]));
    check.run("matrix cells (eight masked cells of row 001 excluded)", std::move(diffs));
  }
  {
    std::vector<std::string> diffs;
    for (std::size_t h = 0; shape_ok && h < 8; ++h) {
      const auto [lo, hi] = std::minmax_element(matrix.cells[h].begin(), matrix.cells[h].end());
      const auto [elo, ehi] = std::minmax_element(std::begin(kMatrix[h]), std::end(kMatrix[h]));
      if (*lo != *elo || *hi != *ehi)
        diffs.push_back(std::string("matrix row ") + kRowLabels[h] + ": expected extrema (" +
                        std::to_string(*elo) + ", " + std::to_string(*ehi) + "), computed (" +
                        format_fraction(*lo) + ", " + format_fraction(*hi) + ")");
    }
    check.run("matrix row extrema (covers the masked cells)", std::move(diffs));
  }

  // Expected criterion lines come from the printed matrix; its extrema agree
  // with the path reading, so both give the same lines.
  std::vector<CriterionLine> expected_lines;
  for (int h = 0; h < 8; ++h) {
    const auto [lo, hi] = std::minmax_element(std::begin(kMatrix[h]), std::end(kMatrix[h]));
    expected_lines.push_back({h, Rational(*hi), Rational(*lo - *hi)});
  }
  auto expected_best = [&](const Rational& x) {
    int best = 0;
    Rational value = expected_lines[0].at(x);
    for (int h = 1; h < 8; ++h)
      if (expected_lines[static_cast<std::size_t>(h)].at(x) > value) {
        value = expected_lines[static_cast<std::size_t>(h)].at(x);
        best = h;
      }
    return best;
  };

  std::vector<Rational> expected_grid;
  for (Rational x(0); x < 1; x += step) expected_grid.push_back(x);
  expected_grid.push_back(Rational(1));
  {
    std::vector<std::string> diffs;
    if (table.grid != expected_grid)
      diffs.push_back("sweep grid: expected " + std::to_string(expected_grid.size()) +
                      " points from 0 to 1 in steps of " + format_fraction(step));
    check.run("sweep grid", std::move(diffs));
  }

  const bool grid_ok = shape_ok && table.grid == expected_grid;
  {
    std::vector<std::string> diffs;
    for (std::size_t h = 0; grid_ok && h < 8; ++h)
      for (std::size_t p = 0; p < expected_grid.size(); ++p) {
        const Rational expected = expected_lines[h].at(expected_grid[p]);
        if (table.values[h][p] != expected)
          diffs.push_back(std::string("sweep (") + kRowLabels[h] + ", λ = " +
                          format_fraction(expected_grid[p]) + "): expected " +
                          format_fraction(expected) + ", computed " +
                          format_fraction(table.values[h][p]));
      }
    check.run("sweep values against the printed matrix lines", std::move(diffs));
  }
  if (default_step) {
    std::vector<std::string> diffs;
    for (std::size_t h = 0; grid_ok && h < 8; ++h)
      for (std::size_t p = 0; p < 11; ++p)
        if (format_fixed(table.values[h][p], 1) != kSweep[h][p])
          diffs.push_back(std::string("sweep (") + kRowLabels[h] + ", column " +
                          std::to_string(p) + "): expected " + kSweep[h][p] + ", rendered " +
                          format_fixed(table.values[h][p], 1));
    for (std::size_t p = 0; grid_ok && p < 11; ++p) {
      if (format_fixed(table.best_value[p], 1) != kSweepBest[p])
        diffs.push_back("optimal value column " + std::to_string(p) + ": expected " +
                        kSweepBest[p] + ", rendered " + format_fixed(table.best_value[p], 1));
      if (table.best_strategy[p] != kSweepPick[p])
        diffs.push_back("optimal strategy column " + std::to_string(p) + ": expected " +
                        row_display_label(kSweepPick[p]) + ", computed " +
                        row_display_label(table.best_strategy[p]));
    }
    check.run("sweep digits as printed (step 1/10)", std::move(diffs));
  } else {
    std::vector<std::string> diffs;
    for (std::size_t p = 0; grid_ok && p < expected_grid.size(); ++p) {
      const int expected = expected_best(expected_grid[p]);
      if (table.best_strategy[p] != expected)
        diffs.push_back("optimal strategy at λ = " + format_fraction(expected_grid[p]) +
                        ": expected " + row_display_label(expected) + ", computed " +
                        row_display_label(table.best_strategy[p]));
    }
    check.run("optimal-strategy row from the printed matrix lines", std::move(diffs));
  }

  {
    std::vector<std::string> diffs;
    const std::vector<LambdaRegion> expected = {{1, Rational(0), Rational(2, 5)},
                                                {2, Rational(2, 5), Rational(4, 5)},
                                                {0, Rational(4, 5), Rational(1)}};
    bool equal = regions.regions.size() == expected.size();
    for (std::size_t k = 0; equal && k < expected.size(); ++k)
      equal = regions.regions[k].strategy == expected[k].strategy &&
              regions.regions[k].lo == expected[k].lo && regions.regions[k].hi == expected[k].hi;
    if (!equal) {
      std::string got;
      for (const LambdaRegion& r : regions.regions)
        got += " " + row_display_label(r.strategy) + "[" + format_fraction(r.lo) + ", " +
               format_fraction(r.hi) + "]";
      diffs.push_back("regions: expected f2[0, 2/5] f3[2/5, 4/5] f1[4/5, 1], computed" + got);
    }
    check.run("selection regions", std::move(diffs));
  }

  {
    std::vector<std::string> diffs;
    if (grid_profile.inference.strategy_index != std::optional<int>(2))
      diffs.push_back("grid estimate: expected inferred strategy f3");
    std::vector<Rational> expected_points;
    for (const Rational& x : expected_grid)
      if (expected_best(x) == 2) expected_points.push_back(x);
    if (grid_profile.points != expected_points) {
      std::string got = render_points(grid_profile.points, 1);
      diffs.push_back("grid estimate: expected λ ∈ " + render_points(expected_points, 1) +
                      ", computed λ ∈ " + got);
    }
    const Identifiability expected_status = expected_points.empty()
                                                ? Identifiability::non_rationalizable
                                                : Identifiability::identified;
    if (grid_profile.status != expected_status) diffs.push_back("grid estimate: status mismatch");
    check.run("grid risk estimate", std::move(diffs));
  }
  {
    std::vector<std::string> diffs;
    if (exact_profile.inference.strategy_index != std::optional<int>(2))
      diffs.push_back("exact estimate: expected inferred strategy f3");
    const std::vector<LambdaInterval> expected = {
        {Rational(2, 5), Rational(4, 5), false, false}};
    if (exact_profile.intervals != expected)
      diffs.push_back("exact estimate: expected λ ∈ (2/5, 4/5), computed λ ∈ " +
                      render_intervals(exact_profile.intervals));
    if (exact_profile.status != Identifiability::identified)
      diffs.push_back("exact estimate: status mismatch");
    check.run("exact risk estimate", std::move(diffs));
  }

  ReferenceCheck result;
  result.ok = check.mismatches.empty();
  result.mismatches = check.mismatches;

  std::string& report = result.report;
  report = "reference reproduction (step " + format_fraction(step) + ")\n";
  report += "\nnormalized payment matrix\n" + render_matrix(matrix);
  report += "\ncriterion sweep\n" + render_sweep(table);
  report += "\nselection regions\n" + render_regions(regions);
  report += "\nrisk profile (grid)\n" + render_profile(grid_profile, tree);
  report += "\nrisk profile (exact)\n" + render_profile(exact_profile, tree);
  report += "\nchecks\n" + check.report;
  if (!result.ok) {
    report += "\nmismatches\n";
    for (const std::string& m : result.mismatches) report += m + "\n";
  }
  return result;
}

}  // namespace hurwicz
