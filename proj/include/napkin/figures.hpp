#pragma once

#include "napkin/dyadic.hpp"
#include "napkin/strategy.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace napkin {

/// Exact decimal with four places, stored as a count of 1e-4 units.
struct Proportion {
  long units = 0;

  /// Rounds half to even.
  static Proportion round(const mpq_class& value);
  /// Parses "0.1866", "0.125", "0.1820" and the like.
  static Proportion parse(const std::string& text);

  /// Always four decimals, e.g. "0.1250".
  std::string to_string() const;

  friend bool operator==(const Proportion&, const Proportion&) = default;
};

struct FigureRow {
  std::string strategy;
  std::uint32_t n = 0;
  Proportion proportion;
  std::string source = "computed";  // or "paper" for reference rows
};

/// round(c(n) / n, 4) for each n in [n_min, n_max]; n_min >= 2.
std::vector<FigureRow> proportion_series(const IntervallicStrategy& strategy, std::uint32_t n_min,
                                         std::uint32_t n_max);

/// Reads `series,n,proportion` rows ('#' lines are comments) and tags them "paper".
std::vector<FigureRow> parse_reference_csv(std::istream& in);
/// The reference series shipped with the library.
std::vector<FigureRow> builtin_reference();
/// Reference rows for series that the exact engine does not compute.
std::vector<FigureRow> reference_only_series();

/// One row of the long trap setting table for small n. Entries that do not
/// exist (inner of length 0, table of 0 seats) are empty.
struct Figure6Row {
  std::uint32_t n = 0;
  std::optional<Dyadic> inner, outer, asymmetric, table;
};

std::vector<Figure6Row> figure6_rows(std::uint32_t max_n = 7);

}  // namespace napkin
