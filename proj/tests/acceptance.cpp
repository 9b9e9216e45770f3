// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include "cli.hpp"
#include "napkin/exact_engine.hpp"
#include "napkin/figures.hpp"
#include "napkin/optimality.hpp"
#include "napkin/simulator.hpp"

#include <json.hpp>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

namespace {

using namespace napkin;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double budget_seconds, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (budget_seconds > 0 && seconds > budget_seconds) {
    o.fail("took " + std::to_string(seconds) + " s, budget " + std::to_string(budget_seconds) + " s");
  }
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.2fs", seconds);
  std::cout << (o.pass ? "PASS" : "FAIL") << "  [" << id << "] " << title << " (" << timing << ")";
  if (!o.detail.empty()) std::cout << ": " << o.detail;
  std::cout << std::endl;
  if (!o.pass) ++failures;
}

std::string run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  if (cli::run(args, out, err) != 0) throw std::runtime_error("napkin_lab failed: " + err.str());
  return out.str();
}

// Published small-n table for long trap setting; "" marks a cell that does not exist.
const std::array<std::array<const char*, 4>, 8> kSmallTable{{
    {"", "0", "0", ""},
    {"1", "0", "0", "0"},
    {"1", "0", "1/2", "0"},
    {"1", "1/4", "3/4", "1/2"},
    {"5/4", "1/2", "7/8", "3/4"},
    {"3/2", "11/16", "17/16", "7/8"},
    {"13/8", "7/8", "41/32", "17/16"},
    {"29/16", "69/64", "93/64", "41/32"},
}};

Outcome small_table() {
  Outcome o;
  int compared = 0;
  auto check = [&](std::uint32_t n, const char* name, const std::string& got, const char* want) {
    ++compared;
    if (got != want) o.fail(std::string(name) + "(" + std::to_string(n) + ") = " + got + ", expected " + want);
  };
  for (std::uint32_t n = 2; n <= 7; ++n) {
    const auto j = nlohmann::json::parse(run_cli({"exact", "--n", std::to_string(n), "--format", "json"}));
    const auto& row = kSmallTable[n];
    check(n, "i", j["i"]["exact"], row[0]);
    check(n, "o", j["o"]["exact"], row[1]);
    check(n, "a", j["a"]["exact"], row[2]);
    check(n, "c", j["c"]["exact"], row[3]);
  }
  // Lengths 0 and 1 are below the table command's range.
  const auto fig = nlohmann::json::parse(run_cli({"figure6", "--max-n", "1", "--format", "json"}));
  for (std::uint32_t n = 0; n <= 1; ++n) {
    const auto& row = kSmallTable[n];
    const char* keys[] = {"i", "o", "a", "c"};
    for (int k = 0; k < 4; ++k) {
      const auto& cell = fig[n][keys[k]];
      if (*row[k] == '\0') {
        if (!cell.is_null()) o.fail(std::string(keys[k]) + "(" + std::to_string(n) + ") should not exist");
      } else {
        check(n, keys[k], cell.is_null() ? "-" : cell.get<std::string>(), row[k]);
      }
    }
  }
  if (o.pass) o.detail = std::to_string(compared) + " values";
  return o;
}

Outcome closed_forms() {
  Outcome o;
  ExactEngine e(long_trap_setting());
  for (std::uint32_t n = 2; n <= 500 && o.pass; ++n) {
    if (e.inner(n) != closed_form_inner(n)) o.fail("i(" + std::to_string(n) + ")");
    if (e.asymmetric(n) != closed_form_asymmetric(n)) o.fail("a(" + std::to_string(n) + ")");
    if (n >= 3 && e.table(n) != closed_form_table(n)) o.fail("c(" + std::to_string(n) + ")");
  }
  return o;
}

Outcome figure2_series(const std::string& series, const std::vector<std::pair<std::uint32_t, const char*>>& anchors) {
  Outcome o;
  std::map<std::uint32_t, std::string> computed;
  std::istringstream csv(run_cli({"figure2", "--strategies", series, "--n-min", "3", "--n-max", "50"}));
  std::string line;
  std::getline(csv, line);
  while (std::getline(csv, line)) {
    const auto a = line.find(','), b = line.rfind(',');
    computed[std::stoul(line.substr(a + 1, b - a - 1))] = line.substr(b + 1);
  }
  for (const auto& [n, want] : anchors) {
    if (computed[n] != Proportion::parse(want).to_string()) {
      o.fail("anchor n=" + std::to_string(n) + ": " + computed[n] + " vs " + want);
    }
  }
  int points = 0;
  for (const auto& row : builtin_reference()) {
    if (row.strategy != series || row.n < 3 || row.n > 50) continue;
    ++points;
    if (computed[row.n] != row.proportion.to_string()) {
      o.fail("n=" + std::to_string(row.n) + ": " + computed[row.n] + " vs published " + row.proportion.to_string());
    }
  }
  if (points != 48) o.fail("expected 48 published points, found " + std::to_string(points));
  if (o.pass) o.detail = std::to_string(points) + " points";
  return o;
}

Outcome interval_optimum() {
  Outcome o;
  const Report r = verify_against(long_trap_setting(), 2000);
  if (!r.ok()) {
    const auto f = r.first_failure();
    o.fail(f->check + " n=" + std::to_string(f->n) + ": " + f->lhs.to_string() + " vs " + f->rhs.to_string());
  } else {
    o.detail = std::to_string(r.total_passed()) + " equalities";
  }
  return o;
}

Outcome raw_tables() {
  Outcome o;
  ExactEngine e(long_trap_setting());
  for (std::uint32_t n = 2; n <= 10; ++n) {
    const Dyadic raw = raw_table_optimum(n);
    if (raw != e.table(n)) o.fail("n=" + std::to_string(n) + ": " + raw.to_string() + " vs " + e.table(n).to_string());
  }
  return o;
}

Outcome inequalities() {
  Outcome o;
  const Report r = verify_inequalities(200);
  if (!r.ok()) {
    const auto f = r.first_failure();
    o.fail(f->check + " n=" + std::to_string(f->n));
  } else {
    o.detail = std::to_string(r.total_passed()) + " checks";
  }
  return o;
}

Outcome monte_carlo_consistency() {
  Outcome o;
  double slowest = 0;
  std::ostringstream summary;
  for (const auto& strategy : {long_trap_setting(), napkin_shunning()}) {
    ExactEngine e(strategy);
    for (std::uint32_t n : {3u, 7u, 12u, 20u}) {
      const auto start = Clock::now();
      const SimulationResult r = monte_carlo(strategy, n, 1'000'000, 20240 + n);
      const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
      slowest = std::max(slowest, seconds);
      const double exact = e.table(n).to_double();
      const double z = (r.mean - exact) / r.std_error;
      if (std::abs(z) > 4) o.fail(strategy.name() + " n=" + std::to_string(n) + ": z = " + std::to_string(z));
      if (seconds > 60) o.fail(strategy.name() + " n=" + std::to_string(n) + " took " + std::to_string(seconds) + " s");
      if (strategy.name() == "long-trap-setting" && n == 20) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "n=20 proportion %.4f", r.mean / n);
        summary << buf;
      }
    }
  }
  if (o.pass) {
    char buf[64];
    std::snprintf(buf, sizeof buf, ", slowest point %.2fs", slowest);
    o.detail = summary.str() + buf;
  }
  return o;
}

Outcome psi_terms() {
  Outcome o;
  // Direct evaluation of psi(n) = -2 psi(n-2) - psi(n-1) in machine integers.
  long long hand[11] = {1, 0};
  for (int n = 2; n < 11; ++n) hand[n] = -2 * hand[n - 2] - hand[n - 1];
  const long long pinned[11] = {1, 0, -2, 2, 2, -6, 2, 10, -14, -6, 34};
  for (int n = 0; n < 11; ++n) {
    if (hand[n] != pinned[n]) o.fail("hand recurrence disagrees with pinned vector at " + std::to_string(n));
    if (psi(n) != mpz_class(std::to_string(hand[n]))) o.fail("psi(" + std::to_string(n) + ") = " + psi(n).get_str());
  }
  return o;
}

std::string capture(const std::string& command) {
  std::string out;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("cannot run " + command);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = ::pclose(pipe);
  if (status != 0) throw std::runtime_error(command + " exited with status " + std::to_string(status));
  return out;
}

Outcome determinism() {
  Outcome o;
  const std::string binary = NAPKIN_LAB_BINARY;
  for (const char* format : {"text", "json", "csv"}) {
    const std::string args = std::string(" simulate --n 20 --trials 200000 --seed 77 --format ") + format;
    const std::string reference = capture("NAPKIN_LAB_THREADS=1 '" + binary + "'" + args);
    for (int threads : {2, 3, 8}) {
      const std::string other = capture("NAPKIN_LAB_THREADS=" + std::to_string(threads) + " '" + binary + "'" + args);
      if (other != reference) o.fail(std::string(format) + " output differs with " + std::to_string(threads) + " threads");
    }
    if (capture("NAPKIN_LAB_THREADS=1 '" + binary + "'" + args) != reference) o.fail("repeat run differs");
  }
  return o;
}

}  // namespace

int main() {
  criterion(1, "small-n table reproduced exactly", 1, small_table);
  criterion(2, "recurrence equals closed forms, n <= 500", 5, closed_forms);
  criterion(3, "long trap setting proportions, 3 <= n <= 50", 1, [] {
    return figure2_series("long-trap-setting", {{9, "0.1814"}, {20, "0.1852"}, {50, "0.1866"}});
  });
  criterion(4, "napkin shunning proportions, 3 <= n <= 50", 1, [] {
    return figure2_series("napkin-shunning", {{5, "0.175"}, {9, "0.178"}, {50, "0.1801"}});
  });
  criterion(5, "interval optimum equals long trap setting, lengths <= 2000", 60, interval_optimum);
  criterion(6, "raw-table optimum equals long trap setting, 2 <= n <= 10", 600, raw_tables);
  criterion(7, "split and monotonicity inequalities, n <= 200", 30, inequalities);
  criterion(8, "Monte Carlo within 4 standard errors, 10^6 trials", 0, monte_carlo_consistency);
  criterion(9, "psi sequence first 11 terms", 1, psi_terms);
  criterion(10, "simulate output independent of NAPKIN_LAB_THREADS", 0, determinism);
  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
