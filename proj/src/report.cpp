#include "napkin/report.hpp"

#include <json.hpp>

namespace napkin {

void Report::tally(const std::string& check, bool pass) {
  auto& [passed, failed] = counts_[check];
  (pass ? passed : failed) += 1;
}

void Report::add(CheckRecord record) {
  tally(record.check, record.pass);
  if (wants_record(record.pass)) records_.push_back(std::move(record));
}

void Report::merge(const Report& other) {
  for (const auto& [check, c] : other.counts_) {
    counts_[check].first += c.first;
    counts_[check].second += c.second;
  }
  for (const auto& r : other.records_) {
    if (wants_record(r.pass)) records_.push_back(r);
  }
}

std::uint64_t Report::total_passed() const {
  std::uint64_t total = 0;
  for (const auto& [_, c] : counts_) total += c.first;
  return total;
}

std::uint64_t Report::total_failed() const {
  std::uint64_t total = 0;
  for (const auto& [_, c] : counts_) total += c.second;
  return total;
}

std::optional<CheckRecord> Report::first_failure() const {
  for (const auto& r : records_) {
    if (!r.pass) return r;
  }
  return std::nullopt;
}

std::string to_json_line(const CheckRecord& record) {
  nlohmann::ordered_json j;
  j["check"] = record.check;
  j["n"] = record.n;
  j["m"] = record.m ? nlohmann::ordered_json(*record.m) : nlohmann::ordered_json(nullptr);
  j["lhs"] = record.lhs.to_string();
  j["rhs"] = record.rhs.to_string();
  j["pass"] = record.pass;
  return j.dump();
}

void write_json_lines(std::ostream& os, const std::vector<CheckRecord>& records) {
  for (const auto& r : records) os << to_json_line(r) << '\n';
}

CheckRecord parse_json_line(const std::string& line) {
  const auto j = nlohmann::json::parse(line);
  CheckRecord r;
  r.check = j.at("check").get<std::string>();
  r.n = j.at("n").get<std::uint32_t>();
  if (!j.at("m").is_null()) r.m = j.at("m").get<std::uint32_t>();
  r.lhs = Dyadic::parse(j.at("lhs").get<std::string>());
  r.rhs = Dyadic::parse(j.at("rhs").get<std::string>());
  r.pass = j.at("pass").get<bool>();
  return r;
}

}  // namespace napkin
