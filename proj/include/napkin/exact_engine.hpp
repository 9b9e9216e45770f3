#pragma once

#include "napkin/dyadic.hpp"
#include "napkin/interval.hpp"
#include "napkin/strategy.hpp"

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <mutex>
#include <vector>

namespace napkin {

/// psi(0) = 1, psi(1) = 0, psi(n) = -2 psi(n-2) - psi(n-1). OEIS A110512.
class PsiSequence {
 public:
  PsiSequence();
  const mpz_class& operator()(std::uint32_t n);

 private:
  std::vector<mpz_class> terms_;
};

/// Thread-safe shared instance of PsiSequence.
mpz_class psi(std::uint32_t n);

/// Expected napkinless diners under one intervallic strategy.
///
/// Values are filled bottom-up by length on demand; every (kind, length) entry
/// depends only on strictly shorter intervals, so the fill is a single pass.
class ExactEngine {
 public:
  explicit ExactEngine(IntervallicStrategy strategy);

  const IntervallicStrategy& strategy() const { return strategy_; }

  /// Length 0 is allowed for Outer and Asymmetric and is worth 0.
  Dyadic interval(const Interval& interval);
  Dyadic interval(IntervalKind kind, std::uint32_t length) { return interval(Interval::make(kind, length)); }
  Dyadic inner(std::uint32_t n) { return interval(IntervalKind::Inner, n); }
  Dyadic outer(std::uint32_t n) { return interval(IntervalKind::Outer, n); }
  Dyadic asymmetric(std::uint32_t n) { return interval(IntervalKind::Asymmetric, n); }

  /// Circular table of n >= 2 seats: the first diner always leaves an
  /// asymmetric interval of length n-1.
  Dyadic table(std::uint32_t n);

 private:
  void extend_to(std::uint32_t length);
  const Dyadic& lookup(const Interval& interval) const;

  IntervallicStrategy strategy_;
  std::mutex mutex_;
  std::array<std::vector<Dyadic>, 3> values_;  // indexed by kind, then length
};

Dyadic expected_interval(const IntervallicStrategy& strategy, const Interval& interval);
Dyadic expected_table(const IntervallicStrategy& strategy, std::uint32_t n);

// Closed forms for long trap setting. Each throws std::domain_error below its
// range (n >= 3 for the table, n >= 2 for intervals).
Dyadic closed_form_table(std::uint32_t n);
Dyadic closed_form_inner(std::uint32_t n);
Dyadic closed_form_asymmetric(std::uint32_t n);

}  // namespace napkin
