#pragma once

#include "napkin/strategy.hpp"
#include "napkin/table.hpp"

#include <cstdint>
#include <random>

namespace napkin {

/// Per-trial generator. Trial t of master seed s is std::mt19937_64 seeded with
/// std::seed_seq{lo(s), hi(s), lo(t), hi(t)} (32-bit halves); each coin flip
/// uses the top bit of one 64-bit output. Both are fixed by the standard, so
/// runs reproduce bit for bit on every conforming platform.
class TrialRng {
 public:
  TrialRng(std::uint64_t master_seed, std::uint64_t trial);
  bool coin() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// Seats one diner at `seat` and lets them pick a napkin. Throws
/// std::invalid_argument if the seat is taken.
void seat_diner(TableState& table, std::uint32_t seat, TrialRng& rng);

/// Plays one full table and returns the napkinless count.
std::uint32_t run_once(const IntervallicStrategy& strategy, std::uint32_t n, std::uint64_t seed,
                       std::uint64_t trial = 0);

struct SimulationResult {
  std::uint64_t trials = 0;
  double mean = 0.0;
  double std_error = 0.0;  // sample standard deviation / sqrt(trials)
  std::uint64_t seed = 0;
  // Exact tallies; mean and std_error are derived from these.
  std::uint64_t sum = 0;
  std::uint64_t sum_squares = 0;
};

/// Worker count from NAPKIN_LAB_THREADS, else hardware concurrency, at least 1.
unsigned default_thread_count();

/// Runs `trials` independent tables. Trial i uses TrialRng(master_seed, i), and
/// counts are aggregated as integers, so the result does not depend on
/// `threads` (0 means default_thread_count()).
SimulationResult monte_carlo(const IntervallicStrategy& strategy, std::uint32_t n, std::uint64_t trials,
                             std::uint64_t master_seed, unsigned threads = 0);

}  // namespace napkin
