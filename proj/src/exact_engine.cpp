#include "napkin/exact_engine.hpp"

#include <stdexcept>
#include <string>

namespace napkin {

PsiSequence::PsiSequence() : terms_{mpz_class(1), mpz_class(0)} {}

const mpz_class& PsiSequence::operator()(std::uint32_t n) {
  while (terms_.size() <= n) {
    const std::size_t k = terms_.size();
    terms_.push_back(-2 * terms_[k - 2] - terms_[k - 1]);
  }
  return terms_[n];
}

mpz_class psi(std::uint32_t n) {
  static std::mutex mutex;
  static PsiSequence sequence;
  std::lock_guard lock(mutex);
  return sequence(n);
}

ExactEngine::ExactEngine(IntervallicStrategy strategy) : strategy_(std::move(strategy)) {
  for (auto& column : values_) column.push_back(Dyadic(0));
}

const Dyadic& ExactEngine::lookup(const Interval& interval) const {
  return values_[static_cast<std::size_t>(interval.kind)][interval.length];
}

void ExactEngine::extend_to(std::uint32_t length) {
  for (std::uint32_t n = static_cast<std::uint32_t>(values_[0].size()); n <= length; ++n) {
    for (IntervalKind kind : kAllKinds) {
      const Interval parent{kind, n};
      Dyadic total;
      for (const auto& outcome : split(parent, strategy_.decide(parent)).outcomes) {
        Dyadic sum(outcome.napkinless ? 1 : 0);
        for (const auto& piece : outcome.pieces) sum += lookup(piece);
        // Every probability is 1 or 1/2.
        if (outcome.probability != Dyadic(1)) sum.shift_down(1);
        total += sum;
      }
      values_[static_cast<std::size_t>(kind)].push_back(std::move(total));
    }
  }
}

Dyadic ExactEngine::interval(const Interval& interval) {
  if (interval.kind == IntervalKind::Inner && interval.length == 0) {
    throw IntervalError("inner interval of length 0 does not exist");
  }
  std::lock_guard lock(mutex_);
  extend_to(interval.length);
  return lookup(interval);
}

Dyadic ExactEngine::table(std::uint32_t n) {
  if (n < 2) throw std::domain_error("table needs at least 2 seats, got " + std::to_string(n));
  return interval(IntervalKind::Asymmetric, n - 1);
}

Dyadic expected_interval(const IntervallicStrategy& strategy, const Interval& interval) {
  return ExactEngine(strategy).interval(interval);
}

Dyadic expected_table(const IntervallicStrategy& strategy, std::uint32_t n) {
  return ExactEngine(strategy).table(n);
}

namespace {

Dyadic linear_part(std::uint32_t n, long offset_over_64) {
  return Dyadic::ratio(3L * n, 4) + Dyadic::ratio(offset_over_64, 6);
}

}  // namespace

Dyadic closed_form_table(std::uint32_t n) {
  if (n < 3) throw std::domain_error("closed form for the table needs n >= 3");
  return linear_part(n, -3) - Dyadic(psi(n - 3) + 3 * psi(n - 2), n + 3);
}

Dyadic closed_form_inner(std::uint32_t n) {
  if (n < 2) throw std::domain_error("closed form for inner intervals needs n >= 2");
  return linear_part(n, 33) + Dyadic(7 * psi(n - 2) + 5 * psi(n - 1), n + 4);
}

Dyadic closed_form_asymmetric(std::uint32_t n) {
  if (n < 2) throw std::domain_error("closed form for asymmetric intervals needs n >= 2");
  return linear_part(n, 9) - Dyadic(psi(n - 2) + 3 * psi(n - 1), n + 4);
}

}  // namespace napkin
