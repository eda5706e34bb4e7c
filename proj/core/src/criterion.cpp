#include "hurwicz/criterion.hpp"

#include <algorithm>
#include <stdexcept>

namespace hurwicz {

RiskParameter::RiskParameter(Rational value) : value_(std::move(value)) {
  if (value_ < 0 || value_ > 1)
    throw std::domain_error("risk parameter must lie in [0, 1]");
}

std::vector<CriterionLine> criterion_lines(const PayoffMatrix& matrix) {
  std::vector<CriterionLine> lines;
  lines.reserve(matrix.rows());
  for (std::size_t h = 0; h < matrix.rows(); ++h) {
    const auto& row = matrix.cells[h];
    if (row.empty()) throw std::invalid_argument("matrix row is empty");
    const auto [mn, mx] = std::minmax_element(row.begin(), row.end());
    lines.push_back({static_cast<int>(h), *mx, *mn - *mx});
  }
  return lines;
}

Rational hurwicz_value(std::span<const Rational> row, const RiskParameter& lambda) {
  if (row.empty()) throw std::invalid_argument("matrix row is empty");
  const auto [mn, mx] = std::minmax_element(row.begin(), row.end());
  return lambda.value() * *mn + (1 - lambda.value()) * *mx;
}

namespace {

// Lowest-index line attaining the maximum at x.
int best_line_at(const std::vector<CriterionLine>& lines, const Rational& x) {
  int best = lines.front().strategy;
  Rational best_value = lines.front().at(x);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    Rational v = lines[i].at(x);
    if (v > best_value) {
      best_value = std::move(v);
      best = lines[i].strategy;
    }
  }
  return best;
}

struct Segment {
  CriterionLine line;  // owner; ties over positive width resolve to lowest index
  Rational lo;
  Rational hi;
};

// Upper envelope of the criterion lines clipped to [0, 1], as segments of
// positive width. Assumes at least one line.
std::vector<Segment> envelope(const std::vector<CriterionLine>& lines) {
  // One candidate per slope: highest intercept, then lowest strategy index.
  std::vector<CriterionLine> dd = lines;
  std::sort(dd.begin(), dd.end(), [](const CriterionLine& a, const CriterionLine& b) {
    if (a.slope != b.slope) return a.slope < b.slope;
    if (a.intercept != b.intercept) return a.intercept > b.intercept;
    return a.strategy < b.strategy;
  });
  dd.erase(std::unique(dd.begin(), dd.end(),
                       [](const CriterionLine& a, const CriterionLine& b) {
                         return a.slope == b.slope;
                       }),
           dd.end());

  // Hull scan in slope-ascending order. bp[i] is where hull[i] hands over to
  // hull[i + 1]; a handover at or before the previous one evicts the top.
  std::vector<CriterionLine> hull;
  std::vector<Rational> bp;
  for (const CriterionLine& line : dd) {
    while (true) {
      if (hull.empty()) {
        hull.push_back(line);
        break;
      }
      Rational x = (hull.back().intercept - line.intercept) / (line.slope - hull.back().slope);
      if (!bp.empty() && x <= bp.back()) {
        hull.pop_back();
        bp.pop_back();
        continue;
      }
      hull.push_back(line);
      bp.push_back(std::move(x));
      break;
    }
  }

  std::vector<Segment> segments;
  for (std::size_t k = 0; k < hull.size(); ++k) {
    Rational lo = k == 0 ? Rational(0) : std::max(bp[k - 1], Rational(0));
    Rational hi = k + 1 == hull.size() ? Rational(1) : std::min(bp[k], Rational(1));
    if (lo < hi) segments.push_back({hull[k], std::move(lo), std::move(hi)});
  }
  return segments;
}

std::vector<Rational> make_grid(const Rational& step) {
  if (step <= 0 || step > 1) throw std::domain_error("step must lie in (0, 1]");
  std::vector<Rational> grid;
  for (Rational x(0); x < 1; x += step) grid.push_back(x);
  grid.push_back(Rational(1));
  return grid;
}

}  // namespace

BestStrategy best_strategy(const PayoffMatrix& matrix, const RiskParameter& lambda) {
  if (matrix.rows() == 0) throw std::invalid_argument("matrix has no rows");
  const auto lines = criterion_lines(matrix);
  const int h = best_line_at(lines, lambda.value());
  return {h, lines[static_cast<std::size_t>(h)].at(lambda.value())};
}

SweepTable sweep(const PayoffMatrix& matrix, const Rational& step) {
  if (matrix.rows() == 0) throw std::invalid_argument("matrix has no rows");
  const auto lines = criterion_lines(matrix);

  SweepTable table;
  table.row_labels = matrix.row_labels;
  table.grid = make_grid(step);
  table.values.resize(lines.size());
  for (std::size_t h = 0; h < lines.size(); ++h) {
    table.values[h].reserve(table.grid.size());
    for (const Rational& x : table.grid) table.values[h].push_back(lines[h].at(x));
  }
  for (std::size_t p = 0; p < table.grid.size(); ++p) {
    std::size_t best = 0;
    for (std::size_t h = 1; h < lines.size(); ++h)
      if (table.values[h][p] > table.values[best][p]) best = h;
    table.best_strategy.push_back(static_cast<int>(best));
    table.best_value.push_back(table.values[best][p]);
  }
  return table;
}

LambdaRegionSet strategy_regions(const PayoffMatrix& matrix) {
  if (matrix.rows() == 0) throw std::invalid_argument("matrix has no rows");
  const auto lines = criterion_lines(matrix);
  const auto segments = envelope(lines);

  std::vector<LambdaRegion> regions;
  for (const Segment& s : segments) regions.push_back({s.line.strategy, s.lo, s.hi});

  // Single-point regions where a tie-break winner beats both neighbours.
  std::vector<LambdaRegion> out;
  const int at0 = best_line_at(lines, Rational(0));
  if (at0 != regions.front().strategy) out.push_back({at0, Rational(0), Rational(0)});
  for (std::size_t k = 0; k < regions.size(); ++k) {
    if (k > 0) {
      const int atx = best_line_at(lines, regions[k].lo);
      if (atx != regions[k - 1].strategy && atx != regions[k].strategy)
        out.push_back({atx, regions[k].lo, regions[k].lo});
    }
    out.push_back(regions[k]);
  }
  const int at1 = best_line_at(lines, Rational(1));
  if (at1 != regions.back().strategy) out.push_back({at1, Rational(1), Rational(1)});
  return {std::move(out)};
}

bool LambdaInterval::contains(const Rational& x) const {
  if (x < lo || x > hi) return false;
  if (x == lo && !lo_closed) return false;
  if (x == hi && !hi_closed) return false;
  return true;
}

std::vector<LambdaInterval> invert(const PayoffMatrix& matrix, int strategy, InvertMode mode) {
  if (matrix.rows() == 0) throw std::invalid_argument("matrix has no rows");
  if (strategy < 0 || static_cast<std::size_t>(strategy) >= matrix.rows())
    throw std::invalid_argument("strategy index out of range");

  const auto lines = criterion_lines(matrix);
  const CriterionLine& h = lines[static_cast<std::size_t>(strategy)];
  const auto segments = envelope(lines);

  // Admissible set: where h's line meets the envelope. The gap between the
  // envelope and any one line is convex, so the set is one closed interval.
  bool any = false;
  Rational lo, hi;
  auto add = [&](const Rational& a, const Rational& b) {
    if (!any) {
      lo = a;
      hi = b;
      any = true;
    } else {
      lo = std::min(lo, a);
      hi = std::max(hi, b);
    }
  };
  for (const Segment& s : segments) {
    if (s.line.slope == h.slope) {
      if (s.line.intercept == h.intercept) add(s.lo, s.hi);
      continue;  // parallel below the envelope
    }
    Rational x = (s.line.intercept - h.intercept) / (h.slope - s.line.slope);
    if (s.lo <= x && x <= s.hi) add(x, x);
  }
  if (!any) return {};

  if (mode == InvertMode::admissible) return {LambdaInterval{lo, hi, true, true}};

  // Selected: a lower-index strategy wins every tie. An identical lower line
  // shadows h everywhere; otherwise lower lines can touch only the endpoints.
  auto lower_ties_at = [&](const Rational& x) {
    const Rational vh = h.at(x);
    for (int k = 0; k < strategy; ++k)
      if (lines[static_cast<std::size_t>(k)].at(x) == vh) return true;
    return false;
  };
  for (int k = 0; k < strategy; ++k)
    if (lines[static_cast<std::size_t>(k)].slope == h.slope &&
        lines[static_cast<std::size_t>(k)].intercept == h.intercept)
      return {};
  const bool lo_closed = !lower_ties_at(lo);
  const bool hi_closed = !lower_ties_at(hi);
  if (lo == hi && !(lo_closed && hi_closed)) return {};
  return {LambdaInterval{lo, hi, lo_closed, hi_closed}};
}

std::vector<Rational> invert_on_grid(const PayoffMatrix& matrix, int strategy, InvertMode mode,
                                     const Rational& step) {
  if (matrix.rows() == 0) throw std::invalid_argument("matrix has no rows");
  if (strategy < 0 || static_cast<std::size_t>(strategy) >= matrix.rows())
    throw std::invalid_argument("strategy index out of range");

  const auto lines = criterion_lines(matrix);
  const CriterionLine& h = lines[static_cast<std::size_t>(strategy)];

  std::vector<Rational> out;
  for (const Rational& x : make_grid(step)) {
    if (mode == InvertMode::selected) {
      if (best_line_at(lines, x) == strategy) out.push_back(x);
    } else {
      Rational best = lines.front().at(x);
      for (std::size_t i = 1; i < lines.size(); ++i) best = std::max(best, lines[i].at(x));
      if (h.at(x) == best) out.push_back(x);
    }
  }
  return out;
}

}  // namespace hurwicz
