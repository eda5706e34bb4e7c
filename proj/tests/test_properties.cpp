#include "support/property_checks.hpp"

#include "doctest.h"

#include <numeric>

using namespace hurwicz;
using namespace hurwicz::testing;

namespace {
std::string digest(const std::vector<std::string>& violations) {
  std::string out;
  for (std::size_t i = 0; i < std::min<std::size_t>(violations.size(), 8); ++i)
    out += violations[i] + "\n";
  if (violations.size() > 8) out += "… " + std::to_string(violations.size()) + " in total\n";
  return out;
}
}  // namespace

TEST_CASE("criterion invariants hold on random matrices") {
  std::mt19937_64 rng(0x5eed0001ULL);
  std::vector<std::string> violations;
  for (int i = 0; i < 120; ++i) {
    const PayoffMatrix m = random_matrix(rng);
    for (const std::string& v : check_matrix_properties(m, rng))
      violations.push_back("matrix " + std::to_string(i) + ": " + v);
  }
  REQUIRE_MESSAGE(violations.empty(), digest(violations));
}

TEST_CASE("pipeline invariants hold on random trees") {
  std::mt19937_64 rng(0x5eed0002ULL);
  std::vector<std::string> violations;
  for (int i = 0; i < 120; ++i) {
    const DecisionTree tree = random_tree(rng);
    for (const std::string& v : check_tree_properties(tree, rng))
      violations.push_back("tree " + std::to_string(i) + ": " + v);
  }
  REQUIRE_MESSAGE(violations.empty(), digest(violations));
}

TEST_CASE("trees without probabilities still normalize and sweep") {
  std::mt19937_64 rng(0x5eed0003ULL);
  for (int i = 0; i < 20; ++i) {
    const DecisionTree tree = random_tree(rng, false);
    const PayoffMatrix m = normalize(tree);
    const SweepTable table = sweep(m, Rational(1, 4));
    CHECK(table.grid.size() == 5);
    CHECK_THROWS_AS(simulate(tree, Strategy{std::vector<int>(tree.alternatives.size(), 0)},
                             5, 1),
                    std::invalid_argument);
  }
}
