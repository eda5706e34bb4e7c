#include "hurwicz/repro.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace hurwicz;

Rational rational_option(const std::string& text, const std::string& flag) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(flag + ": " + e.what());
  }
}

// "010" (one character per decision state) or "0,1,0" for multi-character
// alternative labels.
Strategy strategy_option(const std::string& text, const DecisionTree& tree) {
  std::vector<std::string> labels;
  if (text.find(',') != std::string::npos) {
    std::string current;
    for (char c : text) {
      if (c == ',') {
        labels.push_back(current);
        current.clear();
      } else {
        current += c;
      }
    }
    labels.push_back(current);
  } else {
    for (char c : text) labels.emplace_back(1, c);
  }
  const auto decision_idx = tree.decision_state_indices();
  if (labels.size() != decision_idx.size())
    throw ParseError("--strategy: expected " + std::to_string(decision_idx.size()) +
                     " alternative labels, got " + std::to_string(labels.size()));
  Strategy s;
  for (std::size_t d = 0; d < labels.size(); ++d) {
    const auto& alts = tree.alternatives[d];
    const auto it = std::find(alts.begin(), alts.end(), labels[d]);
    if (it == alts.end())
      throw ParseError("--strategy: state '" + tree.stage1[decision_idx[d]].id +
                       "' has no alternative '" + labels[d] + "'");
    s.choices.push_back(static_cast<int>(it - alts.begin()));
  }
  return s;
}

PayoffMatrix matrix_input(const std::string& tree_path, const std::string& matrix_path,
                          std::uint64_t cap) {
  if (!tree_path.empty()) return normalize(load_tree(tree_path), cap);
  return load_matrix(matrix_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-stage decision analysis under the Hurwicz criterion"};
  app.require_subcommand(1);
  std::function<int()> action;

  std::string tree_path, matrix_path, log_path, out_path;
  std::string step_text, lambda_text, strategy_text;
  RunConfig config;
  std::uint64_t seed = 0;
  std::size_t count = 0;
  bool exact = false, strict = false;

  auto* normalize_cmd = app.add_subcommand("normalize", "Tree to normal-form payoff matrix");
  normalize_cmd->add_option("--tree", tree_path, "Tree document (JSON)")->required();
  normalize_cmd->add_option("--out", out_path, "Also write the matrix as CSV");
  normalize_cmd->add_option("--cap", config.strategy_cap, "Strategy-space cap");
  normalize_cmd->add_option("--precision", config.precision, "Display decimals");
  normalize_cmd->callback([&] {
    action = [&] {
      config.validate();
      const PayoffMatrix matrix = normalize(load_tree(tree_path), config.strategy_cap);
      std::cout << render_matrix(matrix, config.precision);
      if (!out_path.empty()) write_text_file(out_path, serialize_matrix_csv(matrix));
      return 0;
    };
  });

  auto* sweep_cmd = app.add_subcommand("sweep", "Criterion values over a lambda grid");
  auto* sweep_tree = sweep_cmd->add_option("--tree", tree_path, "Tree document (JSON)");
  sweep_cmd->add_option("--matrix", matrix_path, "Payoff matrix (CSV)")
      ->excludes(sweep_tree);
  sweep_cmd->add_option("--step", step_text, "Grid step (default 1/10)");
  sweep_cmd->add_option("--cap", config.strategy_cap, "Strategy-space cap");
  sweep_cmd->add_option("--precision", config.precision, "Display decimals");
  sweep_cmd->callback([&] {
    action = [&] {
      if (tree_path.empty() && matrix_path.empty())
        throw ParseError("sweep needs --tree or --matrix");
      if (!step_text.empty()) config.step = rational_option(step_text, "--step");
      config.validate();
      const PayoffMatrix matrix = matrix_input(tree_path, matrix_path, config.strategy_cap);
      std::cout << render_sweep(sweep(matrix, config.step), config.precision);
      return 0;
    };
  });

  auto* regions_cmd = app.add_subcommand("regions", "Exact lambda regions per strategy");
  auto* regions_tree = regions_cmd->add_option("--tree", tree_path, "Tree document (JSON)");
  regions_cmd->add_option("--matrix", matrix_path, "Payoff matrix (CSV)")
      ->excludes(regions_tree);
  regions_cmd->add_option("--cap", config.strategy_cap, "Strategy-space cap");
  regions_cmd->callback([&] {
    action = [&] {
      if (tree_path.empty() && matrix_path.empty())
        throw ParseError("regions needs --tree or --matrix");
      config.validate();
      const PayoffMatrix matrix = matrix_input(tree_path, matrix_path, config.strategy_cap);
      std::cout << render_regions(strategy_regions(matrix));
      return 0;
    };
  });

  auto* simulate_cmd = app.add_subcommand("simulate", "Sample an observation log");
  simulate_cmd->add_option("--tree", tree_path, "Tree document (JSON)")->required();
  auto* sim_lambda = simulate_cmd->add_option("--lambda", lambda_text,
                                              "Risk parameter; plays the optimal strategy");
  simulate_cmd->add_option("--strategy", strategy_text, "Explicit strategy, e.g. 010")
      ->excludes(sim_lambda);
  simulate_cmd->add_option("--n", count, "Number of records")->required();
  simulate_cmd->add_option("--seed", seed, "RNG seed")->required();
  simulate_cmd->add_option("--out", out_path, "Write the log here instead of stdout");
  simulate_cmd->add_option("--cap", config.strategy_cap, "Strategy-space cap");
  simulate_cmd->callback([&] {
    action = [&] {
      if (lambda_text.empty() == strategy_text.empty())
        throw ParseError("simulate needs exactly one of --lambda and --strategy");
      config.validate();
      const DecisionTree tree = load_tree(tree_path);
      const Behavior behavior =
          lambda_text.empty()
              ? Behavior(strategy_option(strategy_text, tree))
              : Behavior(RiskParameter(rational_option(lambda_text, "--lambda")));
      const ObservationLog log = simulate(tree, behavior, count, seed, config.strategy_cap);
      const std::string csv = serialize_log_csv(log, tree);
      if (out_path.empty())
        std::cout << csv;
      else
        write_text_file(out_path, csv);
      return 0;
    };
  });

  auto* estimate_cmd = app.add_subcommand("estimate", "Risk profile from an observation log");
  estimate_cmd->add_option("--tree", tree_path, "Tree document (JSON)")->required();
  estimate_cmd->add_option("--log", log_path, "Observation log (CSV)")->required();
  auto* est_exact = estimate_cmd->add_flag("--exact", exact, "Exact intervals (default)");
  estimate_cmd->add_option("--step", step_text, "Grid mode with this step")->excludes(est_exact);
  estimate_cmd->add_flag("--strict", strict, "Exit 2 on a non-rationalizable log");
  estimate_cmd->add_option("--cap", config.strategy_cap, "Strategy-space cap");
  estimate_cmd->add_option("--precision", config.precision, "Display decimals");
  estimate_cmd->callback([&] {
    action = [&] {
      std::optional<Rational> grid_step;
      if (!step_text.empty()) grid_step = rational_option(step_text, "--step");
      if (grid_step) config.step = *grid_step;
      config.validate();
      const DecisionTree tree = load_tree(tree_path);
      const ObservationLog log = load_log(log_path, tree);
      const RiskProfile profile = estimate_lambda(log, tree, grid_step, config.strategy_cap);
      std::cout << render_profile(profile, tree, config.precision);
      return strict && profile.status == Identifiability::non_rationalizable ? 2 : 0;
    };
  });

  auto* repro_cmd = app.add_subcommand("repro-paper", "Reproduce the bundled reference case");
  repro_cmd->add_option("--step", step_text, "Sweep step (default 1/10)");
  repro_cmd->callback([&] {
    action = [&] {
      Rational step(1, 10);
      if (!step_text.empty()) step = rational_option(step_text, "--step");
      if (step <= 0 || step > 1) throw ParseError("--step must lie in (0, 1]");
      const ReferenceCheck result = run_reference_check(step);
      std::cout << result.report;
      return result.ok ? 0 : 2;
    };
  });

  try {
    app.parse(argc, argv);
    return action();
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
