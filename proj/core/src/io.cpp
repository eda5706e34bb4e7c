#include "hurwicz/io.hpp"

#include "json.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

namespace hurwicz {

ValidationError::ValidationError(ValidationReport r)
    : std::runtime_error("invalid tree:\n" + r.to_string()), report(std::move(r)) {}

void RunConfig::validate() const {
  if (step <= 0 || step > 1) throw std::invalid_argument("step must lie in (0, 1]");
  if (strategy_cap < 1) throw std::invalid_argument("strategy cap must be at least 1");
  if (precision < 0) throw std::invalid_argument("precision must be non-negative");
}

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& message) { throw ParseError(message); }

const json& need(const json& obj, const std::string& field) {
  const auto it = obj.find(field);
  if (it == obj.end()) fail("missing field '" + field + "'");
  return *it;
}

Rational to_rational(const json& v, const std::string& where) {
  try {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    if (v.is_number_unsigned()) return Rational(v.get<std::uint64_t>());
    // Doubles print as the shortest decimal that round-trips, which is the
    // literal the document author most plausibly wrote; parse that exactly.
    if (v.is_number_float()) return parse_rational(v.dump());
  } catch (const std::invalid_argument& e) {
    fail(where + ": " + e.what());
  }
  fail(where + ": expected a number or \"p/q\" string");
}

json rational_to_json(const Rational& r) {
  static const Rational lo(std::numeric_limits<std::int64_t>::min());
  static const Rational hi(std::numeric_limits<std::int64_t>::max());
  if (is_integer(r) && lo <= r && r <= hi)
    return json(numerator(r).convert_to<std::int64_t>());
  return json(format_fraction(r));
}

std::size_t line_of(const std::string& text, std::size_t byte) {
  return 1 + static_cast<std::size_t>(
                 std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(
                                                             std::min(byte, text.size())),
                            '\n'));
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string current;
  for (char c : text) {
    if (c == '\n') {
      if (!current.empty() && current.back() == '\r') current.pop_back();
      lines.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) {
    if (current.back() == '\r') current.pop_back();
    lines.push_back(std::move(current));
  }
  return lines;
}

std::vector<std::string> split_cells(const std::string& line) {
  std::vector<std::string> cells;
  std::string current;
  for (char c : line) {
    if (c == ',') {
      cells.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  cells.push_back(std::move(current));
  return cells;
}

long parse_count(const std::string& text, const std::string& where) {
  long value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    fail(where + ": '" + text + "' is not an integer");
  return value;
}

// Strategy with the given rank in enumerate_strategies order.
Strategy strategy_from_index(const DecisionTree& tree, int index) {
  const std::size_t n = tree.alternatives.size();
  Strategy s{std::vector<int>(n, 0)};
  auto rest = static_cast<std::uint64_t>(index);
  for (std::size_t d = n; d-- > 0;) {
    const auto k = static_cast<std::uint64_t>(tree.alternatives[d].size());
    s.choices[d] = static_cast<int>(rest % k);
    rest /= k;
  }
  return s;
}

std::string align_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c >= width.size()) width.push_back(0);
      width[c] = std::max(width[c], row[c].size());
    }
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out += "  ";
      // Left-align the stub column, right-align the numeric body.
      const std::string& cell = row[c];
      const std::string pad(width[c] - cell.size(), ' ');
      out += c == 0 ? cell + pad : pad + cell;
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    out += '\n';
  }
  return out;
}

}  // namespace

// --- tree documents ---

DecisionTree parse_tree(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail("line " + std::to_string(line_of(text, e.byte)) + ": " + e.what());
  }
  if (!doc.is_object()) fail("tree document must be a JSON object");
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    const std::string& key = it.key();
    if (key != "name" && key != "stage1" && key != "alternatives" && key != "stage2" &&
        key != "payoff" && key != "p1" && key != "p2")
      fail("unknown field '" + key + "'");
  }

  DecisionTree tree;
  const json& name = need(doc, "name");
  if (!name.is_string()) fail("field 'name': expected a string");
  tree.name = name.get<std::string>();

  const json& stage1 = need(doc, "stage1");
  if (!stage1.is_array()) fail("field 'stage1': expected an array");
  for (const json& entry : stage1) {
    if (!entry.is_object()) fail("stage1: expected objects {id, decision}");
    for (auto it = entry.begin(); it != entry.end(); ++it)
      if (it.key() != "id" && it.key() != "decision")
        fail("stage1: unknown field '" + it.key() + "'");
    const json& id = need(entry, "id");
    const json& decision = need(entry, "decision");
    if (!id.is_string()) fail("stage1: field 'id': expected a string");
    if (!decision.is_boolean()) fail("stage1: field 'decision': expected a boolean");
    tree.stage1.push_back({id.get<std::string>(), decision.get<bool>()});
  }

  const json& stage2 = need(doc, "stage2");
  if (!stage2.is_array()) fail("field 'stage2': expected an array");
  for (const json& id : stage2) {
    if (!id.is_string()) fail("stage2: expected strings");
    tree.stage2.push_back(id.get<std::string>());
  }

  const json& alternatives = need(doc, "alternatives");
  if (!alternatives.is_object()) fail("field 'alternatives': expected an object");
  for (auto it = alternatives.begin(); it != alternatives.end(); ++it)
    if (!tree.decision_ordinal(it.key()))
      fail("alternatives: '" + it.key() + "' is not a decision-relevant stage1 state");
  for (std::size_t i : tree.decision_state_indices()) {
    const std::string& id = tree.stage1[i].id;
    const auto it = alternatives.find(id);
    if (it == alternatives.end()) fail("alternatives: missing state '" + id + "'");
    if (!it->is_array()) fail("alternatives (" + id + "): expected an array of labels");
    std::vector<std::string> labels;
    for (const json& label : *it) {
      if (!label.is_string()) fail("alternatives (" + id + "): expected strings");
      labels.push_back(label.get<std::string>());
    }
    tree.alternatives.push_back(std::move(labels));
  }

  const json& payoff = need(doc, "payoff");
  if (!payoff.is_object()) fail("field 'payoff': expected an object");
  for (auto it = payoff.begin(); it != payoff.end(); ++it)
    if (!tree.decision_ordinal(it.key()))
      fail("payoff: '" + it.key() + "' is not a decision-relevant stage1 state");
  const auto decision_idx = tree.decision_state_indices();
  for (std::size_t d = 0; d < decision_idx.size(); ++d) {
    const std::string& id = tree.stage1[decision_idx[d]].id;
    const auto block_it = payoff.find(id);
    if (block_it == payoff.end()) fail("payoff: missing state '" + id + "'");
    if (!block_it->is_object()) fail("payoff (" + id + "): expected an object keyed by alternative");
    for (auto it = block_it->begin(); it != block_it->end(); ++it)
      if (std::find(tree.alternatives[d].begin(), tree.alternatives[d].end(), it.key()) ==
          tree.alternatives[d].end())
        fail("payoff (" + id + "): unknown alternative '" + it.key() + "'");
    std::vector<std::vector<Rational>> block;
    for (const std::string& alt : tree.alternatives[d]) {
      const auto row_it = block_it->find(alt);
      if (row_it == block_it->end()) fail("payoff (" + id + "): missing alternative '" + alt + "'");
      if (!row_it->is_array()) fail("payoff (" + id + ", " + alt + "): expected an array");
      if (row_it->size() > tree.stage2.size())
        fail("payoff (" + id + ", " + alt + "): " + std::to_string(row_it->size()) +
             " entries for " + std::to_string(tree.stage2.size()) + " stage2 states");
      if (row_it->size() < tree.stage2.size())
        fail("payoff (" + id + ", " + alt + "): missing entry for stage2 state '" +
             tree.stage2[row_it->size()] + "'");
      std::vector<Rational> row;
      for (std::size_t j = 0; j < row_it->size(); ++j)
        row.push_back(
            to_rational((*row_it)[j], "payoff (" + id + ", " + alt + ", " + tree.stage2[j] + ")"));
      block.push_back(std::move(row));
    }
    tree.payoff.push_back(std::move(block));
  }

  for (const char* field : {"p1", "p2"}) {
    const auto it = doc.find(field);
    if (it == doc.end()) continue;
    if (!it->is_object()) fail(std::string("field '") + field + "': expected an object");
    const bool first = std::string_view(field) == "p1";
    const std::size_t count = first ? tree.stage1.size() : tree.stage2.size();
    auto id_of = [&](std::size_t i) { return first ? tree.stage1[i].id : tree.stage2[i]; };
    for (auto entry = it->begin(); entry != it->end(); ++entry) {
      const bool known = first ? tree.stage1_index(entry.key()).has_value()
                               : tree.stage2_index(entry.key()).has_value();
      if (!known) fail(std::string(field) + ": unknown state '" + entry.key() + "'");
    }
    std::vector<Rational> probs;
    for (std::size_t i = 0; i < count; ++i) {
      const auto entry = it->find(id_of(i));
      if (entry == it->end()) fail(std::string(field) + ": missing state '" + id_of(i) + "'");
      probs.push_back(to_rational(*entry, std::string(field) + " (" + id_of(i) + ")"));
    }
    (first ? tree.stage1_probs : tree.stage2_probs) = std::move(probs);
  }

  ValidationReport report = validate_tree(tree);
  if (!report.ok()) throw ValidationError(std::move(report));
  return tree;
}

std::string serialize_tree(const DecisionTree& tree) {
  json doc;
  doc["name"] = tree.name;
  doc["stage1"] = json::array();
  for (const Stage1State& s : tree.stage1)
    doc["stage1"].push_back({{"id", s.id}, {"decision", s.decision}});
  doc["alternatives"] = json::object();
  const auto decision_idx = tree.decision_state_indices();
  for (std::size_t d = 0; d < decision_idx.size(); ++d)
    doc["alternatives"][tree.stage1[decision_idx[d]].id] = tree.alternatives[d];
  doc["stage2"] = tree.stage2;
  doc["payoff"] = json::object();
  for (std::size_t d = 0; d < decision_idx.size(); ++d) {
    json block = json::object();
    for (std::size_t a = 0; a < tree.alternatives[d].size(); ++a) {
      json row = json::array();
      for (const Rational& cell : tree.payoff[d][a]) row.push_back(rational_to_json(cell));
      block[tree.alternatives[d][a]] = std::move(row);
    }
    doc["payoff"][tree.stage1[decision_idx[d]].id] = std::move(block);
  }
  if (tree.stage1_probs) {
    json probs = json::object();
    for (std::size_t i = 0; i < tree.stage1.size(); ++i)
      probs[tree.stage1[i].id] = rational_to_json((*tree.stage1_probs)[i]);
    doc["p1"] = std::move(probs);
  }
  if (tree.stage2_probs) {
    json probs = json::object();
    for (std::size_t i = 0; i < tree.stage2.size(); ++i)
      probs[tree.stage2[i]] = rational_to_json((*tree.stage2_probs)[i]);
    doc["p2"] = std::move(probs);
  }
  return doc.dump(2) + "\n";
}

DecisionTree load_tree(const std::string& path) { return parse_tree(read_text_file(path)); }

// --- payoff matrices ---

PayoffMatrix parse_matrix_csv(const std::string& text) {
  const auto lines = split_lines(text);
  if (lines.size() < 2) fail("matrix needs a header line and at least one row");
  const auto header = split_cells(lines[0]);
  if (header.size() < 2) fail("matrix header needs at least one state column");

  PayoffMatrix m;
  m.col_labels.assign(header.begin() + 1, header.end());
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto cells = split_cells(lines[i]);
    if (cells.size() != header.size())
      fail("line " + std::to_string(i + 1) + ": expected " + std::to_string(header.size()) +
           " cells, got " + std::to_string(cells.size()));
    m.row_labels.push_back(cells[0]);
    std::vector<Rational> row;
    for (std::size_t c = 1; c < cells.size(); ++c) {
      try {
        row.push_back(parse_rational(cells[c]));
      } catch (const std::invalid_argument& e) {
        fail("line " + std::to_string(i + 1) + ", column '" + m.col_labels[c - 1] +
             "': " + e.what());
      }
    }
    m.cells.push_back(std::move(row));
  }
  return m;
}

std::string serialize_matrix_csv(const PayoffMatrix& matrix) {
  std::string out = "strategy";
  for (const std::string& label : matrix.col_labels) out += "," + label;
  out += '\n';
  for (std::size_t h = 0; h < matrix.rows(); ++h) {
    out += matrix.row_labels[h];
    for (const Rational& cell : matrix.cells[h]) out += "," + format_fraction(cell);
    out += '\n';
  }
  return out;
}

PayoffMatrix load_matrix(const std::string& path) { return parse_matrix_csv(read_text_file(path)); }

// --- observation logs ---

static const char* const kLogHeader = "index,step1,decision,step3,payment";

ObservationLog parse_log_csv(const std::string& text, const DecisionTree& tree) {
  const auto lines = split_lines(text);
  if (lines.empty() || lines[0] != kLogHeader)
    fail(std::string("log header must be '") + kLogHeader + "'");

  ObservationLog log;
  log.tree_name = tree.name;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto cells = split_cells(lines[i]);
    const std::string where = "record " + std::to_string(i);
    if (cells.size() != 5) fail(where + ": expected 5 cells, got " + std::to_string(cells.size()));

    ObservationRecord r;
    r.index = static_cast<std::uint64_t>(parse_count(cells[0], where + ": index"));
    if (r.index != i) fail(where + ": index " + cells[0] + " out of order");
    r.first = cells[1];
    r.decision = static_cast<int>(parse_count(cells[2], where + ": decision"));
    r.second = cells[3];
    try {
      r.payment = parse_rational(cells[4]);
    } catch (const std::invalid_argument& e) {
      fail(where + ": payment: " + e.what());
    }

    const Rational* expected = nullptr;
    try {
      expected = &path_payoff(tree, r.first, r.decision, r.second);
    } catch (const LookupError& e) {
      fail(where + ": " + e.what());
    }
    if (*expected != r.payment)
      fail(where + ": payment mismatch for (" + r.first + ", " + std::to_string(r.decision) +
           ", " + r.second + "): expected " + format_fraction(*expected) + ", got " +
           format_fraction(r.payment));
    log.records.push_back(std::move(r));
  }
  return log;
}

std::string serialize_log_csv(const ObservationLog& log, const DecisionTree& tree) {
  std::string out = std::string(kLogHeader) + '\n';
  for (const ObservationRecord& r : log.records) {
    if (path_payoff(tree, r.first, r.decision, r.second) != r.payment)
      throw std::invalid_argument("record " + std::to_string(r.index) +
                                  ": payment disagrees with the tree");
    out += std::to_string(r.index) + "," + r.first + "," + std::to_string(r.decision) + "," +
           r.second + "," + format_fraction(r.payment) + '\n';
  }
  return out;
}

ObservationLog load_log(const std::string& path, const DecisionTree& tree) {
  return parse_log_csv(read_text_file(path), tree);
}

// --- rendering ---

std::string render_matrix(const PayoffMatrix& matrix, int precision) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"strategy"};
  header.insert(header.end(), matrix.col_labels.begin(), matrix.col_labels.end());
  rows.push_back(std::move(header));
  for (std::size_t h = 0; h < matrix.rows(); ++h) {
    std::vector<std::string> row{matrix.row_labels[h]};
    for (const Rational& cell : matrix.cells[h]) row.push_back(format_compact(cell, precision));
    rows.push_back(std::move(row));
  }
  return align_table(rows);
}

std::string render_sweep(const SweepTable& table, int precision) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"strategy"};
  for (const Rational& x : table.grid) header.push_back(format_fixed(x, precision));
  rows.push_back(std::move(header));
  for (std::size_t h = 0; h < table.values.size(); ++h) {
    std::vector<std::string> row{table.row_labels[h]};
    for (const Rational& v : table.values[h]) row.push_back(format_fixed(v, precision));
    rows.push_back(std::move(row));
  }
  std::vector<std::string> best{"L*"};
  for (const Rational& v : table.best_value) best.push_back(format_fixed(v, precision));
  rows.push_back(std::move(best));
  std::vector<std::string> pick{"f*"};
  for (int h : table.best_strategy) pick.push_back(row_display_label(h));
  rows.push_back(std::move(pick));
  return align_table(rows);
}

std::string render_regions(const LambdaRegionSet& regions) {
  std::string out;
  for (const LambdaRegion& r : regions.regions)
    out += row_display_label(r.strategy) + ": λ ∈ [" + format_fraction(r.lo) + ", " +
           format_fraction(r.hi) + "]\n";
  return out;
}

std::string render_intervals(const std::vector<LambdaInterval>& intervals) {
  if (intervals.empty()) return "∅";
  std::string out;
  for (const LambdaInterval& iv : intervals) {
    if (!out.empty()) out += " ∪ ";
    if (iv.lo == iv.hi) {
      out += "{" + format_fraction(iv.lo) + "}";
    } else {
      out += (iv.lo_closed ? "[" : "(") + format_fraction(iv.lo) + ", " + format_fraction(iv.hi) +
             (iv.hi_closed ? "]" : ")");
    }
  }
  return out;
}

std::string render_points(const std::vector<Rational>& points, int precision) {
  if (points.empty()) return "∅";
  std::string out = "{";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_fixed(points[i], precision);
  }
  return out + "}";
}

std::string render_profile(const RiskProfile& profile, const DecisionTree& tree, int precision) {
  std::string out;
  for (std::size_t d = 0; d < profile.inference.per_state.size(); ++d) {
    const StateInference& s = profile.inference.per_state[d];
    out += "state " + s.state + ": ";
    if (!s.inferred) {
      out += "unobserved";
    } else {
      out += "alternative " + tree.alternatives[d][static_cast<std::size_t>(*s.inferred)] + " (" +
             std::to_string(s.alternative_counts[static_cast<std::size_t>(*s.inferred)]) + "/" +
             std::to_string(s.observations) + ")";
      if (s.ambiguous) out += " [tie]";
    }
    out += '\n';
  }

  auto describe = [&](int index) {
    return row_display_label(index) + " (" +
           strategy_label(tree, strategy_from_index(tree, index)) + ")";
  };
  if (profile.inference.total()) {
    out += "strategy: " + describe(*profile.inference.strategy_index) + '\n';
  } else {
    out += "strategy: partial; completions:";
    const auto& completion = profile.inference.completion;
    const std::size_t shown = std::min<std::size_t>(completion.size(), 6);
    for (std::size_t i = 0; i < shown; ++i) out += " " + describe(completion[i]);
    if (completion.size() > shown)
      out += " … (" + std::to_string(completion.size()) + " total)";
    out += '\n';
  }

  switch (profile.status) {
    case Identifiability::identified: out += "status: identified\n"; break;
    case Identifiability::partially_identified: out += "status: partially identified\n"; break;
    case Identifiability::non_rationalizable: out += "status: non-rationalizable\n"; break;
  }

  out += "λ ∈ ";
  out += profile.grid_mode ? render_points(profile.points, precision)
                           : render_intervals(profile.intervals);
  out += '\n';

  if (profile.fallback)
    out += "fallback: " + describe(profile.fallback->strategy) + ", λ̂ = " +
           format_fraction(profile.fallback->lambda_hat) + ", regret = " +
           format_fraction(profile.fallback->regret) + '\n';
  return out;
}

std::string row_display_label(int strategy) { return "f" + std::to_string(strategy + 1); }

// --- files ---

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
  out.flush();
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace hurwicz
