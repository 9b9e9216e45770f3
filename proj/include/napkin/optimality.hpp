#pragma once

#include "napkin/dyadic.hpp"
#include "napkin/interval.hpp"
#include "napkin/report.hpp"
#include "napkin/strategy.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace napkin {

/// Best achievable expectation per interval, over every label choice at every
/// step (memoryless strategies). Index by length; Inner index 0 is unused.
struct OptimalTables {
  std::vector<Dyadic> inner;
  std::vector<Dyadic> outer;
  std::vector<Dyadic> asymmetric;
  // Smallest label attaining the maximum, per kind and length >= 1.
  std::vector<Label> inner_label;
  std::vector<Label> outer_label;
  std::vector<Label> asymmetric_label;

  std::uint32_t max_length() const { return static_cast<std::uint32_t>(inner.size()) - 1; }
  const Dyadic& value(IntervalKind kind, std::uint32_t length) const;
};

OptimalTables optimal_interval_values(std::uint32_t max_length);

/// Compares `strategy` with the interval optimum for every kind and length up
/// to max_length, in order of length then kind. Records are named
/// "optimum-<kind>" with lhs = strategy value, rhs = optimum.
Report verify_against(const IntervallicStrategy& strategy, std::uint32_t max_length, bool keep_passes = false);
Report verify_against(const IntervallicStrategy& strategy, const OptimalTables& optimum, bool keep_passes = false);

/// Exact checks of the inequalities that make long trap setting locally
/// optimal, for all lengths up to max_n (>= 3) and every split point:
///   psi-bound                  |3 psi(n) + psi(n+1)| <= 2^n
///   inner-split-bound          i(n) >= (i(m)+a(m)+i(n-m-1)+a(n-m-1))/2, 1 <= m <= n-2
///   outer-split-bound          o(n) >= (o(m)+a(m)+o(n-m-1)+a(n-m-1))/2, 0 <= m < n
///   asymmetric-split-bound     a(n) >= (o(m)+a(m)+i(n-m-1)+a(n-m-1))/2, n-m-1 >= 1
///   inner-monotone             i(n+1) >= i(n)
///   inner-dominates-asymmetric i(n) >= a(n)
///   asymmetric-dominates-outer a(n) >= o(n)
///   asymmetric-monotone        a(n) >= a(n-1)
Report verify_inequalities(std::uint32_t max_n, bool keep_passes = false);

/// A raw circular table: bit i of `seats` marks seat i occupied, bit i of
/// `napkins` marks napkin i (between seats i and i+1) available.
struct RawConfig {
  std::uint32_t n = 0;
  std::uint32_t seats = 0;
  std::uint32_t napkins = 0;

  static RawConfig pristine(std::uint32_t n);
  /// A napkin may be gone only if a neighbouring seat is occupied.
  bool valid() const;
  /// Rotates by `rotation` seats, after mirroring when `reflect` is set.
  RawConfig transformed(std::uint32_t rotation, bool reflect) const;

  friend bool operator==(const RawConfig&, const RawConfig&) = default;
};

/// Full-information game value on raw tables: the maître d' picks any empty
/// seat, the diner takes a uniformly random reachable napkin. Covers every
/// adaptive strategy, intervallic or not.
class RawTableSolver {
 public:
  static constexpr std::uint32_t kMaxSeats = 12;

  explicit RawTableSolver(std::uint32_t n, bool canonicalize = true);

  /// Expected napkinless diners still to come from `config`.
  Dyadic value(const RawConfig& config);
  Dyadic optimum() { return value(RawConfig::pristine(n_)); }
  std::size_t memo_size() const { return memo_.size(); }

 private:
  std::uint64_t solve(std::uint32_t seats, std::uint32_t napkins);
  std::uint32_t key(std::uint32_t seats, std::uint32_t napkins) const;

  std::uint32_t n_;
  std::uint32_t full_mask_;
  bool canonicalize_;
  std::unordered_map<std::uint32_t, std::uint64_t> memo_;  // values scaled by 2^n
};

/// Optimal expectation for a pristine table, 2 <= n <= 12.
Dyadic raw_table_optimum(std::uint32_t n);

/// raw_table_optimum(n) against long trap setting's exact value, n in [2, max_n].
Report verify_raw_tables(std::uint32_t max_n, bool keep_passes = false);

}  // namespace napkin
