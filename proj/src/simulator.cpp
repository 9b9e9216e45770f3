#include "napkin/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace napkin {

namespace {

std::seed_seq make_seed_seq(std::uint64_t master_seed, std::uint64_t trial) {
  return std::seed_seq{static_cast<std::uint32_t>(master_seed), static_cast<std::uint32_t>(master_seed >> 32),
                       static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
}

}  // namespace

TrialRng::TrialRng(std::uint64_t master_seed, std::uint64_t trial) {
  auto seq = make_seed_seq(master_seed, trial);
  engine_.seed(seq);
}

void seat_diner(TableState& table, std::uint32_t seat, TrialRng& rng) {
  if (seat >= table.size()) throw std::invalid_argument("seat index out of range");
  if (table.occupied(seat)) throw std::invalid_argument("seat " + std::to_string(seat) + " is occupied");
  table.set_occupied(seat, true);
  const std::uint32_t left = table.left_napkin(seat);
  const std::uint32_t right = table.right_napkin(seat);
  const bool has_left = table.napkin(left);
  const bool has_right = table.napkin(right);
  if (has_left && has_right) {
    table.set_napkin(rng.coin() ? right : left, false);
  } else if (has_left) {
    table.set_napkin(left, false);
  } else if (has_right) {
    table.set_napkin(right, false);
  } else {
    table.add_napkinless();
  }
}

std::uint32_t run_once(const IntervallicStrategy& strategy, std::uint32_t n, std::uint64_t seed,
                       std::uint64_t trial) {
  if (n < 2) throw std::invalid_argument("table needs at least 2 seats");
  TableState table(n);
  TrialRng rng(seed, trial);
  for (std::uint32_t step = 0; step < n; ++step) seat_diner(table, procedural_form(strategy, table), rng);
  return table.napkinless();
}

unsigned default_thread_count() {
  unsigned threads = std::max(1U, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("NAPKIN_LAB_THREADS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap >= 1) threads = static_cast<unsigned>(cap);
  }
  return threads;
}

SimulationResult monte_carlo(const IntervallicStrategy& strategy, std::uint32_t n, std::uint64_t trials,
                             std::uint64_t master_seed, unsigned threads) {
  if (trials == 0) throw std::invalid_argument("trials must be at least 1");
  if (n < 2) throw std::invalid_argument("table needs at least 2 seats");
  if (threads == 0) threads = default_thread_count();
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, trials));

  struct Tally {
    std::uint64_t sum = 0;
    std::uint64_t sum_squares = 0;
  };
  std::vector<Tally> tallies(threads);
  auto work = [&](unsigned worker) {
    Tally local;
    for (std::uint64_t t = worker; t < trials; t += threads) {
      const std::uint64_t x = run_once(strategy, n, master_seed, t);
      local.sum += x;
      local.sum_squares += x * x;
    }
    tallies[worker] = local;
  };

  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  SimulationResult result;
  result.trials = trials;
  result.seed = master_seed;
  for (const auto& t : tallies) {
    result.sum += t.sum;
    result.sum_squares += t.sum_squares;
  }
  const double count = static_cast<double>(trials);
  result.mean = static_cast<double>(result.sum) / count;
  if (trials > 1) {
    // Integer numerator keeps the variance free of cancellation error.
    const long double numerator = static_cast<long double>(result.sum_squares) * count -
                                  static_cast<long double>(result.sum) * static_cast<long double>(result.sum);
    const double variance = static_cast<double>(numerator / (count * (count - 1.0)));
    result.std_error = std::sqrt(std::max(0.0, variance) / count);
  }
  return result;
}

}  // namespace napkin
