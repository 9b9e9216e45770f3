#include "cli.hpp"

#include "napkin/exact_engine.hpp"
#include "napkin/figures.hpp"
#include "napkin/optimality.hpp"
#include "napkin/simulator.hpp"
#include "napkin/strategy.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace napkin::cli {

namespace {

using nlohmann::ordered_json;

// Exact decimal expansion, rounded half to even at `places` digits.
std::string decimal(const Dyadic& value, int places = 10) {
  const mpq_class q = value.to_rational();
  mpz_class scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  mpz_class quotient, remainder;
  const mpz_class num = abs(q.get_num()) * scale;
  mpz_fdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), num.get_mpz_t(), q.get_den().get_mpz_t());
  const int c = cmp(2 * remainder, q.get_den());
  if (c > 0 || (c == 0 && mpz_odd_p(quotient.get_mpz_t()))) quotient += 1;
  std::string digits = quotient.get_str();
  if (digits.size() <= static_cast<std::size_t>(places)) digits.insert(0, places + 1 - digits.size(), '0');
  digits.insert(digits.size() - places, ".");
  return (q < 0 && quotient != 0 ? "-" : "") + digits;
}

std::string fixed(double value, int places) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", places, value);
  return buf;
}

ordered_json exact_json(const Dyadic& value) {
  return ordered_json{{"exact", value.to_string()}, {"decimal", decimal(value)}};
}

CLI::Option* add_format(CLI::App* app, std::string& format, const std::string& fallback) {
  format = fallback;
  return app->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
}

struct Options {
  std::vector<std::string> strategy_files;

  std::string exact_strategy = "long-trap-setting";
  std::uint32_t exact_n = 0;
  std::string exact_format;

  std::vector<std::string> figure2_strategies{"long-trap-setting", "napkin-shunning"};
  std::uint32_t figure2_min = 3;
  std::uint32_t figure2_max = 50;
  bool figure2_with_reference = false;
  std::string figure2_reference_path;
  std::string figure2_format;

  std::uint32_t figure6_max = 7;
  std::string figure6_format;

  std::string simulate_strategy = "long-trap-setting";
  std::uint32_t simulate_n = 0;
  std::uint64_t simulate_trials = 100000;
  std::uint64_t simulate_seed = 1;
  unsigned simulate_threads = 0;
  std::string simulate_format;

  std::uint32_t verify_max_n = 2000;
  std::uint32_t verify_raw_max_n = 10;
  std::string verify_strategy = "long-trap-setting";
  bool verify_corrupted = false;
  bool verify_all_records = false;
  std::string verify_format;

  std::string strategies_format;
};

int cmd_exact(const Options& o, const StrategyRegistry& registry, std::ostream& out) {
  ExactEngine engine(registry.get(o.exact_strategy));
  const std::uint32_t n = o.exact_n;
  const Dyadic c = engine.table(n);
  const Dyadic i = engine.inner(n);
  const Dyadic ov = engine.outer(n);
  const Dyadic a = engine.asymmetric(n);
  const std::vector<std::pair<std::string, Dyadic>> quantities{{"c", c}, {"i", i}, {"o", ov}, {"a", a}};

  if (o.exact_format == "json") {
    ordered_json j{{"strategy", o.exact_strategy}, {"n", n}};
    for (const auto& [name, value] : quantities) j[name] = exact_json(value);
    out << j.dump() << '\n';
  } else if (o.exact_format == "csv") {
    out << "strategy,n,quantity,exact,decimal\n";
    for (const auto& [name, value] : quantities) {
      out << o.exact_strategy << ',' << n << ',' << name << ',' << value << ',' << decimal(value) << '\n';
    }
  } else {
    out << "strategy " << o.exact_strategy << ", n = " << n << '\n';
    out << "c = " << c << " (" << decimal(c) << ")  table of " << n << " seats\n";
    out << "i = " << i << " (" << decimal(i) << ")  inner-facing interval\n";
    out << "o = " << ov << " (" << decimal(ov) << ")  outer-facing interval\n";
    out << "a = " << a << " (" << decimal(a) << ")  asymmetric interval\n";
  }
  return 0;
}

int cmd_figure2(const Options& o, const StrategyRegistry& registry, std::ostream& out) {
  std::vector<FigureRow> rows;
  for (const auto& name : o.figure2_strategies) {
    auto series = proportion_series(registry.get(name), o.figure2_min, o.figure2_max);
    rows.insert(rows.end(), series.begin(), series.end());
  }
  const bool with_source = o.figure2_with_reference || !o.figure2_reference_path.empty();
  if (with_source) {
    std::vector<FigureRow> reference;
    if (o.figure2_reference_path.empty()) {
      reference = reference_only_series();
    } else {
      std::ifstream in(o.figure2_reference_path);
      if (!in) throw std::runtime_error("cannot open reference file '" + o.figure2_reference_path + "'");
      reference = parse_reference_csv(in);
    }
    for (auto& row : reference) {
      if (row.n >= o.figure2_min && row.n <= o.figure2_max) rows.push_back(row);
    }
  }

  if (o.figure2_format == "json") {
    ordered_json j = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json e{{"strategy", r.strategy}, {"n", r.n}, {"proportion", r.proportion.to_string()}};
      if (with_source) e["source"] = r.source;
      j.push_back(e);
    }
    out << j.dump() << '\n';
  } else if (o.figure2_format == "csv") {
    out << "strategy,n,proportion" << (with_source ? ",source" : "") << '\n';
    for (const auto& r : rows) {
      out << r.strategy << ',' << r.n << ',' << r.proportion.to_string();
      if (with_source) out << ',' << r.source;
      out << '\n';
    }
  } else {
    for (const auto& r : rows) {
      out << std::left << std::setw(26) << r.strategy << std::right << std::setw(4) << r.n << "  "
          << r.proportion.to_string();
      if (with_source) out << "  " << r.source;
      out << '\n';
    }
  }
  return 0;
}

int cmd_figure6(const Options& o, std::ostream& out) {
  const auto rows = figure6_rows(o.figure6_max);
  auto cell = [](const std::optional<Dyadic>& v) { return v ? v->to_string() : std::string("-"); };
  if (o.figure6_format == "json") {
    ordered_json j = ordered_json::array();
    for (const auto& r : rows) {
      auto field = [](const std::optional<Dyadic>& v) { return v ? ordered_json(v->to_string()) : ordered_json(nullptr); };
      j.push_back(ordered_json{{"n", r.n}, {"i", field(r.inner)}, {"o", field(r.outer)},
                               {"a", field(r.asymmetric)}, {"c", field(r.table)}});
    }
    out << j.dump() << '\n';
  } else if (o.figure6_format == "csv") {
    out << "n,i,o,a,c\n";
    for (const auto& r : rows) {
      out << r.n << ',' << cell(r.inner) << ',' << cell(r.outer) << ',' << cell(r.asymmetric) << ','
          << cell(r.table) << '\n';
    }
  } else {
    out << std::setw(3) << "n" << std::setw(10) << "i(n)" << std::setw(10) << "o(n)" << std::setw(10) << "a(n)"
        << std::setw(10) << "c(n)" << '\n';
    for (const auto& r : rows) {
      out << std::setw(3) << r.n << std::setw(10) << cell(r.inner) << std::setw(10) << cell(r.outer)
          << std::setw(10) << cell(r.asymmetric) << std::setw(10) << cell(r.table) << '\n';
    }
  }
  return 0;
}

int cmd_simulate(const Options& o, const StrategyRegistry& registry, std::ostream& out) {
  const auto& strategy = registry.get(o.simulate_strategy);
  const SimulationResult r =
      monte_carlo(strategy, o.simulate_n, o.simulate_trials, o.simulate_seed, o.simulate_threads);
  const double proportion = r.mean / o.simulate_n;
  if (o.simulate_format == "json") {
    ordered_json j{{"strategy", o.simulate_strategy}, {"n", o.simulate_n},   {"trials", r.trials},
                   {"seed", r.seed},                  {"mean", r.mean},     {"std_error", r.std_error},
                   {"proportion", proportion},        {"sum", r.sum},       {"sum_squares", r.sum_squares}};
    out << j.dump() << '\n';
  } else if (o.simulate_format == "csv") {
    out << "strategy,n,trials,seed,mean,std_error,proportion\n";
    out << o.simulate_strategy << ',' << o.simulate_n << ',' << r.trials << ',' << r.seed << ','
        << fixed(r.mean, 8) << ',' << fixed(r.std_error, 8) << ',' << fixed(proportion, 8) << '\n';
  } else {
    out << "strategy " << o.simulate_strategy << ", n = " << o.simulate_n << ", " << r.trials
        << " trials, seed " << r.seed << '\n';
    out << "mean napkinless = " << fixed(r.mean, 6) << " +/- " << fixed(r.std_error, 6) << " (std. error)\n";
    out << "proportion      = " << fixed(proportion, 6) << '\n';
  }
  return 0;
}

int cmd_verify(const Options& o, const StrategyRegistry& registry, std::ostream& out) {
  const IntervallicStrategy candidate = o.verify_corrupted ? endpoint_only() : registry.get(o.verify_strategy);
  const bool keep = o.verify_all_records;

  const Report optimum = verify_against(candidate, o.verify_max_n, keep);
  const Report inequalities = verify_inequalities(std::max<std::uint32_t>(o.verify_max_n, 3), keep);
  const Report raw = verify_raw_tables(o.verify_raw_max_n, true);
  const bool pass = optimum.ok() && inequalities.ok() && raw.ok();

  if (o.verify_format == "json" || o.verify_format == "csv") {
    std::vector<CheckRecord> records;
    for (const Report* r : {&optimum, &inequalities, &raw}) {
      records.insert(records.end(), r->records().begin(), r->records().end());
    }
    if (o.verify_format == "json") {
      write_json_lines(out, records);
    } else {
      out << "check,n,m,lhs,rhs,pass\n";
      for (const auto& r : records) {
        out << r.check << ',' << r.n << ',' << (r.m ? std::to_string(*r.m) : "") << ',' << r.lhs << ',' << r.rhs
            << ',' << (r.pass ? "true" : "false") << '\n';
      }
    }
    return pass ? 0 : 1;
  }

  auto summarize = [&out](const std::string& title, const Report& r) {
    out << title << ": " << (r.total_passed() + r.total_failed()) << " checks, " << r.total_failed()
        << " failed\n";
    for (const auto& [check, counts] : r.counts()) {
      out << "  " << std::left << std::setw(28) << check << std::right << counts.first << " passed, "
          << counts.second << " failed\n";
    }
    if (auto f = r.first_failure()) {
      out << "  first failure: " << f->check << " n=" << f->n << (f->m ? " m=" + std::to_string(*f->m) : "")
          << ": lhs " << f->lhs << ", rhs " << f->rhs << '\n';
    }
  };
  summarize("interval optimum vs " + candidate.name() + " up to length " + std::to_string(o.verify_max_n), optimum);
  summarize("inequalities up to n = " + std::to_string(std::max<std::uint32_t>(o.verify_max_n, 3)), inequalities);
  summarize("raw-table optimum vs long-trap-setting for n = 2.." + std::to_string(o.verify_raw_max_n), raw);
  for (const auto& r : raw.records()) {
    out << "  n=" << r.n << ": raw optimum " << r.lhs << ", long trap setting " << r.rhs << '\n';
  }
  out << (pass ? "PASS" : "FAIL") << '\n';
  return pass ? 0 : 1;
}

int cmd_strategies(const Options& o, const StrategyRegistry& registry, std::ostream& out) {
  const auto names = registry.names();
  if (o.strategies_format == "json") {
    out << ordered_json(names).dump() << '\n';
  } else {
    if (o.strategies_format == "csv") out << "name\n";
    for (const auto& n : names) out << n << '\n';
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact analysis, optimality checks and simulation for the adaptive malicious maitre d'"};
  app.name("napkin_lab");
  app.require_subcommand(1);
  app.add_option("--strategy-file", o.strategy_files, "Register a decision-table strategy (repeatable)");

  auto* exact = app.add_subcommand("exact", "Exact expected napkinless diners for one strategy");
  exact->add_option("--strategy", o.exact_strategy, "Strategy name")->capture_default_str();
  exact->add_option("--n", o.exact_n, "Table size / interval length")->required()->check(CLI::Range(2U, 100000U));
  add_format(exact, o.exact_format, "text");

  auto* figure2 = app.add_subcommand("figure2", "Rounded napkinless proportions per table size");
  figure2->add_option("--strategies", o.figure2_strategies, "Strategies to compute")
      ->delimiter(',')
      ->capture_default_str();
  figure2->add_option("--n-min", o.figure2_min, "Smallest table")->check(CLI::Range(2U, 100000U))->capture_default_str();
  figure2->add_option("--n-max", o.figure2_max, "Largest table")->check(CLI::Range(2U, 100000U))->capture_default_str();
  figure2->add_flag("--with-reference", o.figure2_with_reference,
                    "Append the published trap-setting and modified-napkin-shunning series");
  figure2->add_option("--reference", o.figure2_reference_path, "Append rows from this reference CSV instead");
  add_format(figure2, o.figure2_format, "csv");

  auto* figure6 = app.add_subcommand("figure6", "Small-n table of i, o, a, c for long trap setting");
  figure6->add_option("--max-n", o.figure6_max, "Largest n")->check(CLI::Range(0U, 10000U))->capture_default_str();
  add_format(figure6, o.figure6_format, "text");

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo run of the literal seating process");
  simulate->add_option("--strategy", o.simulate_strategy, "Strategy name")->capture_default_str();
  simulate->add_option("--n", o.simulate_n, "Table size")->required()->check(CLI::Range(2U, 100000U));
  simulate->add_option("--trials", o.simulate_trials, "Number of tables")->check(CLI::PositiveNumber)->capture_default_str();
  simulate->add_option("--seed", o.simulate_seed, "Master seed")->capture_default_str();
  simulate->add_option("--threads", o.simulate_threads, "Worker threads (0: NAPKIN_LAB_THREADS or all cores)")
      ->capture_default_str();
  add_format(simulate, o.simulate_format, "text");

  auto* verify = app.add_subcommand("verify", "Check long trap setting against exhaustive optima");
  verify->add_option("--max-n", o.verify_max_n, "Longest interval for the DP and inequality checks")
      ->check(CLI::Range(1U, 100000U))
      ->capture_default_str();
  verify->add_option("--raw-max-n", o.verify_raw_max_n, "Largest raw table for exhaustive search")
      ->check(CLI::Range(2U, RawTableSolver::kMaxSeats))
      ->capture_default_str();
  verify->add_option("--strategy", o.verify_strategy, "Strategy compared with the interval optimum")
      ->capture_default_str();
  verify->add_flag("--corrupted", o.verify_corrupted, "Compare the endpoint-only strategy instead (expected to fail)");
  verify->add_flag("--all-records", o.verify_all_records, "Emit passing records too (json/csv)");
  add_format(verify, o.verify_format, "text");

  auto* strategies = app.add_subcommand("strategies", "Strategy registry");
  auto* list = strategies->add_subcommand("list", "List registered strategies");
  strategies->require_subcommand(1);
  add_format(list, o.strategies_format, "text");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    StrategyRegistry registry;
    for (const auto& path : o.strategy_files) registry.add(load_decision_table(path));

    if (*exact) return cmd_exact(o, registry, out);
    if (*figure2) return cmd_figure2(o, registry, out);
    if (*figure6) return cmd_figure6(o, out);
    if (*simulate) return cmd_simulate(o, registry, out);
    if (*verify) return cmd_verify(o, registry, out);
    if (*list) return cmd_strategies(o, registry, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace napkin::cli
