#include "napkin/strategy.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

namespace napkin {

Label IntervallicStrategy::decide(IntervalKind kind, std::uint32_t length) const {
  if (length < 1) throw StrategyError(name_ + ": interval length must be at least 1");
  const Label label = rule_(kind, length);
  const Interval interval{kind, length};
  if (!is_valid_label(interval, label)) {
    throw StrategyError(name_ + ": label " + std::to_string(label) + " is invalid for " +
                        to_string(interval));
  }
  return label;
}

Label trap_label(IntervalKind kind, std::uint32_t length) {
  if (kind != IntervalKind::Inner) return 0;
  if (length <= 3) return 0;
  return length == 4 ? 1 : 2;
}

Label middle_label(std::uint32_t length) { return (length - 1) / 2; }

IntervallicStrategy long_trap_setting() {
  return IntervallicStrategy("long-trap-setting", &trap_label);
}

IntervallicStrategy napkin_shunning() {
  return IntervallicStrategy("napkin-shunning", [](IntervalKind kind, std::uint32_t length) -> Label {
    return kind == IntervalKind::Inner ? middle_label(length) : 0;
  });
}

IntervallicStrategy endpoint_only() {
  return IntervallicStrategy("endpoint-only", [](IntervalKind, std::uint32_t) -> Label { return 0; });
}

std::uint32_t procedural_form(const IntervallicStrategy& strategy, const TableState& table) {
  if (table.full()) throw StrategyError("table is full");
  if (table.pristine()) return 0;

  const auto parts = components(table);
  const Component* chosen = nullptr;
  for (const auto& c : parts) {
    if (c.interval.kind == IntervalKind::Inner) continue;
    if (chosen == nullptr || c.start < chosen->start) chosen = &c;
  }
  if (chosen == nullptr) {
    for (const auto& c : parts) {
      if (chosen == nullptr || c.start < chosen->start) chosen = &c;
    }
  }

  const Label target = strategy.decide(chosen->interval);
  std::optional<std::uint32_t> best;
  for (std::uint32_t j = 0; j < chosen->interval.length; ++j) {
    if (chosen->label_at(j) != target) continue;
    const std::uint32_t seat = chosen->seat_at(j, table.size());
    if (!best || seat < *best) best = seat;
  }
  return *best;
}

namespace {

enum class DefaultExpr { Zero, Middle, Trap };

Label evaluate(DefaultExpr expr, IntervalKind kind, std::uint32_t length) {
  switch (expr) {
    case DefaultExpr::Zero:
      return 0;
    case DefaultExpr::Middle:
      return middle_label(length);
    case DefaultExpr::Trap:
      return trap_label(kind, length);
  }
  return 0;
}

struct DecisionTable {
  std::map<std::pair<IntervalKind, std::uint32_t>, Label> explicit_labels;
  std::map<IntervalKind, DefaultExpr> defaults;
};

}  // namespace

IntervallicStrategy parse_decision_table(std::istream& in, const std::string& fallback_name) {
  auto table = std::make_shared<DecisionTable>();
  std::string name = fallback_name;
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& why) {
    throw StrategyError("decision table line " + std::to_string(line_no) + ": " + why);
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::vector<std::string> tokens;
    for (std::string w; words >> w;) tokens.push_back(w);
    if (tokens.empty()) continue;

    if (tokens[0] == "name") {
      if (tokens.size() != 2) fail("expected 'name <identifier>'");
      name = tokens[1];
      continue;
    }
    if (tokens.size() != 3) fail("expected '<kind> <length> <label>' or '<kind> * <expr>'");
    const auto kind = parse_kind(tokens[0]);
    if (!kind) fail("unknown interval kind '" + tokens[0] + "'");

    if (tokens[1] == "*") {
      DefaultExpr expr;
      if (tokens[2] == "0") {
        expr = DefaultExpr::Zero;
      } else if (tokens[2] == "middle") {
        expr = DefaultExpr::Middle;
      } else if (tokens[2] == "trap") {
        expr = DefaultExpr::Trap;
      } else {
        fail("unknown default expression '" + tokens[2] + "'");
      }
      if (!table->defaults.emplace(*kind, expr).second) fail("duplicate default rule");
      continue;
    }

    std::uint32_t length = 0;
    Label label = 0;
    try {
      std::size_t used = 0;
      const unsigned long parsed_length = std::stoul(tokens[1], &used);
      if (used != tokens[1].size()) throw std::invalid_argument("trailing");
      const unsigned long parsed_label = std::stoul(tokens[2], &used);
      if (used != tokens[2].size()) throw std::invalid_argument("trailing");
      length = static_cast<std::uint32_t>(parsed_length);
      label = static_cast<Label>(parsed_label);
    } catch (const std::logic_error&) {
      fail("length and label must be nonnegative integers");
    }
    if (length == 0) fail("length must be at least 1");
    if (!is_valid_label(Interval{*kind, length}, label)) {
      fail("label " + tokens[2] + " is invalid for " + to_string(Interval{*kind, length}));
    }
    if (!table->explicit_labels.emplace(std::make_pair(*kind, length), label).second) {
      fail("duplicate rule for " + to_string(Interval{*kind, length}));
    }
  }

  for (IntervalKind kind : kAllKinds) {
    if (table->defaults.count(kind) == 0) {
      throw StrategyError("decision table has no default rule for " + std::string(to_string(kind)));
    }
  }

  return IntervallicStrategy(name, [table](IntervalKind kind, std::uint32_t length) -> Label {
    if (auto it = table->explicit_labels.find({kind, length}); it != table->explicit_labels.end()) {
      return it->second;
    }
    return evaluate(table->defaults.at(kind), kind, length);
  });
}

IntervallicStrategy load_decision_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StrategyError("cannot open decision table '" + path + "'");
  return parse_decision_table(in, std::filesystem::path(path).stem().string());
}

StrategyRegistry::StrategyRegistry() {
  add(long_trap_setting());
  add(napkin_shunning());
}

void StrategyRegistry::add(IntervallicStrategy strategy) {
  const std::string name = strategy.name();
  strategies_.insert_or_assign(name, std::move(strategy));
}

const IntervallicStrategy& StrategyRegistry::get(const std::string& name) const {
  auto it = strategies_.find(name);
  if (it == strategies_.end()) {
    std::string known;
    for (const auto& n : names()) known += (known.empty() ? "" : ", ") + n;
    throw StrategyError("unknown strategy '" + name + "' (known: " + known + ")");
  }
  return it->second;
}

std::vector<std::string> StrategyRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& [name, _] : strategies_) out.push_back(name);
  return out;
}

}  // namespace napkin
