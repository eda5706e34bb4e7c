#include "hurwicz/estimate.hpp"

#include "hurwicz/io.hpp"

#include <algorithm>

namespace hurwicz {

StrategyInference infer_strategy(const ObservationLog& log, const DecisionTree& tree,
                                 std::uint64_t cap) {
  ValidationReport report = validate_tree(tree);
  if (!report.ok()) throw ValidationError(std::move(report));

  const auto decision_idx = tree.decision_state_indices();
  StrategyInference inf;
  for (std::size_t d = 0; d < decision_idx.size(); ++d) {
    StateInference s;
    s.state = tree.stage1[decision_idx[d]].id;
    s.alternative_counts.assign(tree.alternatives[d].size(), 0);
    inf.per_state.push_back(std::move(s));
  }

  for (const ObservationRecord& r : log.records) {
    const auto ord = tree.decision_ordinal(r.first);
    if (!ord)
      throw LookupError("record " + std::to_string(r.index) + ": '" + r.first +
                        "' is not a decision-relevant stage1 state");
    StateInference& s = inf.per_state[*ord];
    if (r.decision < 0 || static_cast<std::size_t>(r.decision) >= s.alternative_counts.size())
      throw LookupError("record " + std::to_string(r.index) + ": alternative index " +
                        std::to_string(r.decision) + " out of range for state '" + r.first + "'");
    ++s.observations;
    ++s.alternative_counts[static_cast<std::size_t>(r.decision)];
  }

  bool total = true;
  for (StateInference& s : inf.per_state) {
    if (s.observations == 0) {
      total = false;
      continue;
    }
    const auto top = std::max_element(s.alternative_counts.begin(), s.alternative_counts.end());
    s.inferred = static_cast<int>(top - s.alternative_counts.begin());
    s.ambiguous = std::count(s.alternative_counts.begin(), s.alternative_counts.end(), *top) > 1;
  }

  const auto strategies = enumerate_strategies(tree, cap);
  for (std::size_t h = 0; h < strategies.size(); ++h) {
    bool agrees = true;
    for (std::size_t d = 0; d < inf.per_state.size(); ++d)
      if (inf.per_state[d].inferred && strategies[h].choices[d] != *inf.per_state[d].inferred) {
        agrees = false;
        break;
      }
    if (agrees) inf.completion.push_back(static_cast<int>(h));
  }

  if (total) {
    Strategy s;
    for (const StateInference& st : inf.per_state) s.choices.push_back(*st.inferred);
    inf.strategy = std::move(s);
    inf.strategy_index = inf.completion.front();
  }
  return inf;
}

namespace {

// Union of per-candidate selected intervals. Selected sets of distinct
// strategies are disjoint, so pieces at most touch; a shared endpoint merges
// when either side covers it.
std::vector<LambdaInterval> merge_intervals(std::vector<LambdaInterval> parts) {
  std::sort(parts.begin(), parts.end(), [](const LambdaInterval& a, const LambdaInterval& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.lo_closed && !b.lo_closed;
  });
  std::vector<LambdaInterval> out;
  for (LambdaInterval& p : parts) {
    if (!out.empty() && out.back().hi == p.lo && (out.back().hi_closed || p.lo_closed)) {
      out.back().hi = p.hi;
      out.back().hi_closed = p.hi_closed;
    } else {
      out.push_back(std::move(p));
    }
  }
  return out;
}

}  // namespace

RegretFallback regret_fallback(const PayoffMatrix& matrix, int strategy) {
  if (matrix.rows() == 0) throw std::invalid_argument("matrix has no rows");
  if (strategy < 0 || static_cast<std::size_t>(strategy) >= matrix.rows())
    throw std::invalid_argument("strategy index out of range");

  const auto lines = criterion_lines(matrix);
  const CriterionLine& h = lines[static_cast<std::size_t>(strategy)];

  std::vector<Rational> candidates{Rational(0), Rational(1)};
  for (const LambdaRegion& r : strategy_regions(matrix).regions) {
    candidates.push_back(r.lo);
    candidates.push_back(r.hi);
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  RegretFallback best{strategy, candidates.front(), Rational(-1)};
  for (const Rational& x : candidates) {
    Rational v = lines.front().at(x);
    for (std::size_t i = 1; i < lines.size(); ++i) v = std::max(v, lines[i].at(x));
    Rational regret = v - h.at(x);
    if (best.regret < 0 || regret < best.regret) {
      best.lambda_hat = x;
      best.regret = std::move(regret);
    }
  }
  return best;
}

RiskProfile estimate_lambda(const ObservationLog& log, const DecisionTree& tree,
                            std::optional<Rational> grid_step, std::uint64_t cap) {
  RiskProfile profile;
  profile.inference = infer_strategy(log, tree, cap);
  profile.grid_mode = grid_step.has_value();

  const PayoffMatrix matrix = normalize(tree, cap);
  const std::vector<int>& candidates = profile.inference.completion;

  if (profile.grid_mode) {
    std::vector<Rational> points;
    for (int h : candidates) {
      const auto pts = invert_on_grid(matrix, h, InvertMode::selected, *grid_step);
      points.insert(points.end(), pts.begin(), pts.end());
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    profile.points = std::move(points);
  } else {
    std::vector<LambdaInterval> parts;
    for (int h : candidates) {
      const auto ivs = invert(matrix, h, InvertMode::selected);
      parts.insert(parts.end(), ivs.begin(), ivs.end());
    }
    profile.intervals = merge_intervals(std::move(parts));
  }

  const bool empty = profile.grid_mode ? profile.points.empty() : profile.intervals.empty();
  if (!empty) {
    profile.status = profile.inference.total() ? Identifiability::identified
                                               : Identifiability::partially_identified;
    return profile;
  }

  profile.status = Identifiability::non_rationalizable;
  std::optional<RegretFallback> best;
  for (int h : candidates) {
    RegretFallback fb = regret_fallback(matrix, h);
    if (!best || fb.regret < best->regret) best = std::move(fb);
  }
  profile.fallback = std::move(best);
  return profile;
}

}  // namespace hurwicz
