#include "hurwicz/model.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace hurwicz {

std::size_t DecisionTree::decision_state_count() const {
  return static_cast<std::size_t>(
      std::count_if(stage1.begin(), stage1.end(), [](const Stage1State& s) { return s.decision; }));
}

std::vector<std::size_t> DecisionTree::decision_state_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < stage1.size(); ++i)
    if (stage1[i].decision) out.push_back(i);
  return out;
}

std::optional<std::size_t> DecisionTree::stage1_index(std::string_view id) const {
  for (std::size_t i = 0; i < stage1.size(); ++i)
    if (stage1[i].id == id) return i;
  return std::nullopt;
}

std::optional<std::size_t> DecisionTree::stage2_index(std::string_view id) const {
  for (std::size_t i = 0; i < stage2.size(); ++i)
    if (stage2[i] == id) return i;
  return std::nullopt;
}

std::optional<std::size_t> DecisionTree::decision_ordinal(std::string_view id) const {
  std::size_t ordinal = 0;
  for (const Stage1State& s : stage1) {
    if (s.id == id) return s.decision ? std::optional(ordinal) : std::nullopt;
    if (s.decision) ++ordinal;
  }
  return std::nullopt;
}

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  for (const Violation& v : violations) {
    os << v.field;
    if (!v.where.empty()) os << " (" << v.where << ")";
    os << ": " << v.message << "\n";
  }
  return os.str();
}

namespace {

bool clean_label(const std::string& s) {
  return !s.empty() && s.find(',') == std::string::npos && s.find('\n') == std::string::npos &&
         s.find('\r') == std::string::npos;
}

void check_labels(const std::vector<std::string>& labels, const char* field,
                  const std::string& where, ValidationReport& report) {
  std::unordered_set<std::string> seen;
  for (const std::string& l : labels) {
    if (!clean_label(l))
      report.violations.push_back({field, where, "label '" + l + "' is empty or contains ,/newline"});
    else if (!seen.insert(l).second)
      report.violations.push_back({field, where, "duplicate label '" + l + "'"});
  }
}

void check_probs(const std::vector<Rational>& probs, std::size_t expected, const char* field,
                 ValidationReport& report) {
  if (probs.size() != expected) {
    report.violations.push_back(
        {field, "", "expected " + std::to_string(expected) + " probabilities, got " +
                        std::to_string(probs.size())});
    return;
  }
  Rational sum(0);
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] < 0)
      report.violations.push_back({field, "entry " + std::to_string(i), "negative probability"});
    sum += probs[i];
  }
  if (sum != 1) report.violations.push_back({field, "", "probabilities do not sum to 1"});
}

}  // namespace

ValidationReport validate_tree(const DecisionTree& tree) {
  ValidationReport report;

  std::vector<std::string> s1_ids;
  for (const Stage1State& s : tree.stage1) s1_ids.push_back(s.id);
  check_labels(s1_ids, "stage1", "", report);
  check_labels(tree.stage2, "stage2", "", report);

  const auto decision_idx = tree.decision_state_indices();
  if (decision_idx.empty())
    report.violations.push_back({"stage1", "", "no decision states"});
  if (tree.stage2.empty()) report.violations.push_back({"stage2", "", "no stage2 states"});

  if (tree.alternatives.size() != decision_idx.size()) {
    report.violations.push_back(
        {"alternatives", "",
         "expected one alternative list per decision state (" + std::to_string(decision_idx.size()) +
             "), got " + std::to_string(tree.alternatives.size())});
  } else {
    for (std::size_t d = 0; d < decision_idx.size(); ++d) {
      const std::string& id = tree.stage1[decision_idx[d]].id;
      if (tree.alternatives[d].empty())
        report.violations.push_back({"alternatives", id, "decision state has no alternatives"});
      check_labels(tree.alternatives[d], "alternatives", id, report);
    }
  }

  if (tree.payoff.size() != decision_idx.size()) {
    report.violations.push_back(
        {"payoff", "",
         "expected one payoff block per decision state (" + std::to_string(decision_idx.size()) +
             "), got " + std::to_string(tree.payoff.size())});
  } else if (tree.alternatives.size() == decision_idx.size()) {
    for (std::size_t d = 0; d < decision_idx.size(); ++d) {
      const std::string& id = tree.stage1[decision_idx[d]].id;
      if (tree.payoff[d].size() != tree.alternatives[d].size()) {
        report.violations.push_back(
            {"payoff", id, "expected " + std::to_string(tree.alternatives[d].size()) +
                               " alternative rows, got " + std::to_string(tree.payoff[d].size())});
        continue;
      }
      for (std::size_t a = 0; a < tree.payoff[d].size(); ++a)
        if (tree.payoff[d][a].size() != tree.stage2.size())
          report.violations.push_back(
              {"payoff", id + ", alternative " + tree.alternatives[d][a],
               "expected " + std::to_string(tree.stage2.size()) + " stage2 payoffs, got " +
                   std::to_string(tree.payoff[d][a].size())});
    }
  }

  if (tree.stage1_probs) check_probs(*tree.stage1_probs, tree.stage1.size(), "stage1_probs", report);
  if (tree.stage2_probs) check_probs(*tree.stage2_probs, tree.stage2.size(), "stage2_probs", report);

  return report;
}

std::string strategy_label(const DecisionTree& tree, const Strategy& s) {
  std::string out;
  for (std::size_t d = 0; d < s.choices.size(); ++d)
    out += tree.alternatives.at(d).at(static_cast<std::size_t>(s.choices[d]));
  return out;
}

std::string compound_label(const CompoundState& s) { return s.first + s.second; }

const Rational& path_payoff(const DecisionTree& tree, std::string_view first, int alternative,
                            std::string_view second) {
  auto s1 = tree.stage1_index(first);
  if (!s1) throw LookupError("unknown stage1 state '" + std::string(first) + "'");
  if (!tree.stage1[*s1].decision)
    throw LookupError("stage1 state '" + std::string(first) + "' is not decision-relevant");
  auto ord = tree.decision_ordinal(first);
  if (alternative < 0 || static_cast<std::size_t>(alternative) >= tree.alternatives.at(*ord).size())
    throw LookupError("alternative index " + std::to_string(alternative) +
                      " out of range for state '" + std::string(first) + "'");
  auto s2 = tree.stage2_index(second);
  if (!s2) throw LookupError("unknown stage2 state '" + std::string(second) + "'");
  return tree.payoff.at(*ord).at(static_cast<std::size_t>(alternative)).at(*s2);
}

}  // namespace hurwicz
