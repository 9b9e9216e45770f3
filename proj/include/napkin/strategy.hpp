#pragma once

#include "napkin/interval.hpp"
#include "napkin/table.hpp"

#include <functional>
#include <istream>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace napkin {

class StrategyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A memoryless seating rule that picks one label per (kind, length).
class IntervallicStrategy {
 public:
  using Rule = std::function<Label(IntervalKind, std::uint32_t)>;

  IntervallicStrategy(std::string name, Rule rule) : name_(std::move(name)), rule_(std::move(rule)) {}

  const std::string& name() const { return name_; }

  /// Label to seat in an interval of the given kind and length (>= 1).
  /// Throws StrategyError on length 0 or when the rule yields an invalid label.
  Label decide(IntervalKind kind, std::uint32_t length) const;
  Label decide(const Interval& interval) const { return decide(interval.kind, interval.length); }

 private:
  std::string name_;
  Rule rule_;
};

/// Fills seats next to a lone napkin first, otherwise seats three away from a
/// diner: inner label sgn(n-4)+1, outer and asymmetric label 0.
IntervallicStrategy long_trap_setting();

/// Same as long trap setting except inner intervals are split in the middle.
IntervallicStrategy napkin_shunning();

/// Always seats at label 0. Strictly worse than long trap setting from inner
/// length 4 on; used to exercise the divergence reporting.
IntervallicStrategy endpoint_only();

Label trap_label(IntervalKind kind, std::uint32_t length);
Label middle_label(std::uint32_t length);

/// Chooses the concrete seat a strategy fills on a raw table.
///
/// Components that expose a napkin reachable from only one empty seat (Outer
/// and Asymmetric) are served before Inner ones, each group in order of start
/// seat. Inside the chosen component the lowest-indexed seat carrying the
/// decided label wins. A pristine table gets seat 0.
std::uint32_t procedural_form(const IntervallicStrategy& strategy, const TableState& table);

/// Reads a decision table. One rule per line, '#' starts a comment:
///
///   name <identifier>          optional, defaults to `fallback_name`
///   <kind> <length> <label>    explicit choice for one length
///   <kind> * <expr>            default for the kind; expr is 0, middle or trap
///
/// <kind> is inner, outer or asymmetric. Each kind needs a default rule.
IntervallicStrategy parse_decision_table(std::istream& in, const std::string& fallback_name);
IntervallicStrategy load_decision_table(const std::string& path);

/// Name-keyed lookup for strategies; starts with the built-ins.
class StrategyRegistry {
 public:
  StrategyRegistry();

  void add(IntervallicStrategy strategy);
  const IntervallicStrategy& get(const std::string& name) const;
  bool contains(const std::string& name) const { return strategies_.count(name) != 0; }
  std::vector<std::string> names() const;

 private:
  std::map<std::string, IntervallicStrategy> strategies_;
};

}  // namespace napkin
