#pragma once

#include "napkin/dyadic.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace napkin {

struct CheckRecord {
  std::string check;
  std::uint32_t n = 0;
  std::optional<std::uint32_t> m;
  Dyadic lhs;
  Dyadic rhs;
  bool pass = true;
};

/// Outcome of a batch of exact checks. Failures are always kept; passing
/// records only when the report was created with keep_passes.
class Report {
 public:
  explicit Report(bool keep_passes = false) : keep_passes_(keep_passes) {}

  bool keeps_passes() const { return keep_passes_; }
  bool wants_record(bool pass) const { return keep_passes_ || !pass; }

  void tally(const std::string& check, bool pass);
  void add(CheckRecord record);
  void merge(const Report& other);

  bool ok() const { return total_failed() == 0; }
  std::uint64_t total_passed() const;
  std::uint64_t total_failed() const;
  const std::map<std::string, std::pair<std::uint64_t, std::uint64_t>>& counts() const { return counts_; }
  const std::vector<CheckRecord>& records() const { return records_; }
  std::optional<CheckRecord> first_failure() const;

 private:
  bool keep_passes_;
  std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> counts_;  // check -> (passed, failed)
  std::vector<CheckRecord> records_;
};

/// One JSON object per line: {"check","n","m","lhs","rhs","pass"}, rationals as "p/q".
void write_json_lines(std::ostream& os, const std::vector<CheckRecord>& records);
std::string to_json_line(const CheckRecord& record);
CheckRecord parse_json_line(const std::string& line);

}  // namespace napkin
