#include "napkin/optimality.hpp"

#include "napkin/exact_engine.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace napkin {

const Dyadic& OptimalTables::value(IntervalKind kind, std::uint32_t length) const {
  switch (kind) {
    case IntervalKind::Inner:
      return inner.at(length);
    case IntervalKind::Outer:
      return outer.at(length);
    case IntervalKind::Asymmetric:
      return asymmetric.at(length);
  }
  throw std::invalid_argument("unknown interval kind");
}

OptimalTables optimal_interval_values(std::uint32_t max_length) {
  if (max_length < 1) throw std::invalid_argument("max_length must be at least 1");

  // Every value of length n has a denominator dividing 2^n, so working in
  // integers scaled by 2^scale keeps everything exact without normalizing.
  const std::uint64_t scale = max_length + 1;
  const std::size_t size = max_length + 1;
  std::vector<mpz_class> inner(size), outer(size), asym(size);
  std::vector<mpz_class> inner_plus_asym(size), outer_plus_asym(size);
  std::vector<Label> inner_label(size), outer_label(size), asym_label(size);

  mpz_class one = 1;
  mpz_mul_2exp(one.get_mpz_t(), one.get_mpz_t(), scale);
  inner[1] = one;
  inner_plus_asym[1] = one;

  mpz_class best, candidate;
  for (std::uint32_t n = 2; n <= max_length; ++n) {
    // Candidates are compared doubled to avoid halving each one.
    best = inner[n - 1] * 2;
    Label arg = 0;
    for (std::uint32_t m = 1; m <= (n - 1) / 2; ++m) {
      candidate = inner_plus_asym[m] + inner_plus_asym[n - m - 1];
      if (candidate > best) {
        best = candidate;
        arg = m;
      }
    }
    inner[n] = best / 2;
    inner_label[n] = arg;

    best = -1;
    arg = 0;
    for (std::uint32_t m = 0; m <= (n - 1) / 2; ++m) {
      candidate = outer_plus_asym[m] + outer_plus_asym[n - m - 1];
      if (candidate > best) {
        best = candidate;
        arg = m;
      }
    }
    outer[n] = best / 2;
    outer_label[n] = arg;

    best = -1;
    arg = 0;
    for (std::uint32_t m = 0; m + 1 < n; ++m) {
      candidate = outer_plus_asym[m] + inner_plus_asym[n - m - 1];
      if (candidate > best) {
        best = candidate;
        arg = m;
      }
    }
    if (candidate = asym[n - 1] * 2; candidate > best) {
      best = candidate;
      arg = n - 1;
    }
    asym[n] = best / 2;
    asym_label[n] = arg;

    inner_plus_asym[n] = inner[n] + asym[n];
    outer_plus_asym[n] = outer[n] + asym[n];
  }

  OptimalTables out;
  out.inner.reserve(size);
  out.outer.reserve(size);
  out.asymmetric.reserve(size);
  for (std::size_t n = 0; n < size; ++n) {
    out.inner.emplace_back(inner[n], scale);
    out.outer.emplace_back(outer[n], scale);
    out.asymmetric.emplace_back(asym[n], scale);
  }
  out.inner_label = std::move(inner_label);
  out.outer_label = std::move(outer_label);
  out.asymmetric_label = std::move(asym_label);
  return out;
}

Report verify_against(const IntervallicStrategy& strategy, const OptimalTables& optimum, bool keep_passes) {
  Report report(keep_passes);
  ExactEngine engine(strategy);
  for (std::uint32_t n = 1; n <= optimum.max_length(); ++n) {
    for (IntervalKind kind : kAllKinds) {
      CheckRecord r;
      r.check = "optimum-" + std::string(to_string(kind));
      r.n = n;
      r.lhs = engine.interval(kind, n);
      r.rhs = optimum.value(kind, n);
      r.pass = r.lhs == r.rhs;
      report.add(std::move(r));
    }
  }
  return report;
}

Report verify_against(const IntervallicStrategy& strategy, std::uint32_t max_length, bool keep_passes) {
  return verify_against(strategy, optimal_interval_values(max_length), keep_passes);
}

namespace {

// Long trap setting values up to `top`, as integers scaled by 2^scale.
struct ScaledValues {
  std::uint64_t scale;
  std::vector<mpz_class> inner, outer, asym;

  explicit ScaledValues(std::uint32_t top) : scale(top + 1) {
    ExactEngine engine(long_trap_setting());
    inner.resize(top + 1);
    outer.resize(top + 1);
    asym.resize(top + 1);
    for (std::uint32_t n = 0; n <= top; ++n) {
      if (n > 0) inner[n] = engine.inner(n).scaled(scale);
      outer[n] = engine.outer(n).scaled(scale);
      asym[n] = engine.asymmetric(n).scaled(scale);
    }
  }

  Dyadic unscale(const mpz_class& v) const { return Dyadic(v, scale); }
};

// lhs >= rhs_doubled / 2, with both sides scaled.
void check_split(Report& report, const ScaledValues& values, const char* name, std::uint32_t n, std::uint32_t m,
                 const mpz_class& lhs, const mpz_class& rhs_doubled) {
  const bool pass = 2 * lhs >= rhs_doubled;
  if (!report.wants_record(pass)) {
    report.tally(name, pass);
    return;
  }
  report.add(CheckRecord{name, n, m, values.unscale(lhs), values.unscale(rhs_doubled).half(), pass});
}

void check_order(Report& report, const ScaledValues& values, const char* name, std::uint32_t n,
                 const mpz_class& lhs, const mpz_class& rhs) {
  const bool pass = lhs >= rhs;
  if (!report.wants_record(pass)) {
    report.tally(name, pass);
    return;
  }
  report.add(CheckRecord{name, n, std::nullopt, values.unscale(lhs), values.unscale(rhs), pass});
}

}  // namespace

Report verify_inequalities(std::uint32_t max_n, bool keep_passes) {
  if (max_n < 3) throw std::invalid_argument("max_n must be at least 3");
  Report report(keep_passes);
  const ScaledValues v(max_n + 1);

  PsiSequence psi_terms;
  for (std::uint32_t n = 1; n <= max_n; ++n) {
    const mpz_class lhs = abs(3 * psi_terms(n) + psi_terms(n + 1));
    mpz_class rhs = 1;
    mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(), n);
    const bool pass = lhs <= rhs;
    // Reported as bound >= |value| so that pass means lhs >= rhs everywhere.
    if (report.wants_record(pass)) {
      report.add(CheckRecord{"psi-bound", n, std::nullopt, Dyadic(rhs), Dyadic(lhs), pass});
    } else {
      report.tally("psi-bound", pass);
    }
  }

  mpz_class sum;
  for (std::uint32_t n = 1; n <= max_n; ++n) {
    for (std::uint32_t m = 1; m + 2 <= n; ++m) {
      const std::uint32_t r = n - m - 1;
      sum = v.inner[m] + v.asym[m] + v.inner[r] + v.asym[r];
      check_split(report, v, "inner-split-bound", n, m, v.inner[n], sum);
    }
    for (std::uint32_t m = 0; m < n; ++m) {
      const std::uint32_t r = n - m - 1;
      sum = v.outer[m] + v.asym[m] + v.outer[r] + v.asym[r];
      check_split(report, v, "outer-split-bound", n, m, v.outer[n], sum);
    }
    for (std::uint32_t m = 0; m + 1 < n; ++m) {
      const std::uint32_t r = n - m - 1;
      sum = v.outer[m] + v.asym[m] + v.inner[r] + v.asym[r];
      check_split(report, v, "asymmetric-split-bound", n, m, v.asym[n], sum);
    }
    check_order(report, v, "inner-monotone", n, v.inner[n + 1], v.inner[n]);
    check_order(report, v, "inner-dominates-asymmetric", n, v.inner[n], v.asym[n]);
    check_order(report, v, "asymmetric-dominates-outer", n, v.asym[n], v.outer[n]);
    check_order(report, v, "asymmetric-monotone", n, v.asym[n], v.asym[n - 1]);
  }
  return report;
}

RawConfig RawConfig::pristine(std::uint32_t n) {
  return RawConfig{n, 0, (n >= 32) ? ~0U : ((1U << n) - 1)};
}

bool RawConfig::valid() const {
  for (std::uint32_t i = 0; i < n; ++i) {
    if ((napkins >> i) & 1U) continue;
    const bool left = (seats >> i) & 1U;
    const bool right = (seats >> ((i + 1) % n)) & 1U;
    if (!left && !right) return false;
  }
  return true;
}

RawConfig RawConfig::transformed(std::uint32_t rotation, bool reflect) const {
  RawConfig out{n, 0, 0};
  for (std::uint32_t i = 0; i < n; ++i) {
    // Mirror maps seat i to -i and napkin i (between i, i+1) to -i-1.
    const std::uint32_t seat = reflect ? (n - i) % n : i;
    const std::uint32_t napkin = reflect ? (2 * n - i - 1) % n : i;
    if ((seats >> i) & 1U) out.seats |= 1U << ((seat + rotation) % n);
    if ((napkins >> i) & 1U) out.napkins |= 1U << ((napkin + rotation) % n);
  }
  return out;
}

RawTableSolver::RawTableSolver(std::uint32_t n, bool canonicalize)
    : n_(n), full_mask_((1U << n) - 1), canonicalize_(canonicalize) {
  if (n < 2 || n > kMaxSeats) {
    throw std::out_of_range("raw table size must be in [2, " + std::to_string(kMaxSeats) + "], got " +
                            std::to_string(n));
  }
}

std::uint32_t RawTableSolver::key(std::uint32_t seats, std::uint32_t napkins) const {
  // Interleave into a 2n-bit necklace: bit 2i is seat i, bit 2i+1 napkin i.
  auto interleave = [this](std::uint32_t s, std::uint32_t k) {
    std::uint32_t out = 0;
    for (std::uint32_t i = 0; i < n_; ++i) {
      out |= ((s >> i) & 1U) << (2 * i);
      out |= ((k >> i) & 1U) << (2 * i + 1);
    }
    return out;
  };
  const std::uint32_t plain = interleave(seats, napkins);
  if (!canonicalize_) return plain;

  const RawConfig mirrored = RawConfig{n_, seats, napkins}.transformed(0, true);
  const std::uint32_t reflected = interleave(mirrored.seats, mirrored.napkins);
  const std::uint32_t width = 2 * n_;
  const std::uint32_t mask = (width >= 32) ? ~0U : ((1U << width) - 1);
  std::uint32_t best = plain;
  for (std::uint32_t shift = 2; shift < width; shift += 2) {
    const std::uint32_t a = ((plain << shift) | (plain >> (width - shift))) & mask;
    const std::uint32_t b = ((reflected << shift) | (reflected >> (width - shift))) & mask;
    best = std::min({best, a, b});
  }
  return std::min(best, reflected);
}

std::uint64_t RawTableSolver::solve(std::uint32_t seats, std::uint32_t napkins) {
  if (seats == full_mask_) return 0;

  // Drop napkins nobody can reach any more; they cannot affect the outcome.
  for (std::uint32_t i = 0; i < n_; ++i) {
    const bool left = (seats >> i) & 1U;
    const bool right = (seats >> ((i + 1) % n_)) & 1U;
    if (left && right) napkins &= ~(1U << i);
  }
  const std::uint32_t k = key(seats, napkins);
  if (auto it = memo_.find(k); it != memo_.end()) return it->second;

  const std::uint64_t one = std::uint64_t{1} << n_;
  std::uint64_t best = 0;
  for (std::uint32_t seat = 0; seat < n_; ++seat) {
    if ((seats >> seat) & 1U) continue;
    const std::uint32_t now = seats | (1U << seat);
    const std::uint32_t left = (seat + n_ - 1) % n_;
    const std::uint32_t right = seat;
    const bool has_left = (napkins >> left) & 1U;
    const bool has_right = (napkins >> right) & 1U;
    std::uint64_t v;
    if (has_left && has_right) {
      v = (solve(now, napkins & ~(1U << left)) + solve(now, napkins & ~(1U << right))) / 2;
    } else if (has_left) {
      v = solve(now, napkins & ~(1U << left));
    } else if (has_right) {
      v = solve(now, napkins & ~(1U << right));
    } else {
      v = one + solve(now, napkins);
    }
    best = std::max(best, v);
  }
  memo_.emplace(k, best);
  return best;
}

Dyadic RawTableSolver::value(const RawConfig& config) {
  if (config.n != n_) throw std::invalid_argument("configuration size does not match solver");
  if (((config.seats | config.napkins) & ~full_mask_) != 0 || !config.valid()) {
    throw std::invalid_argument("invalid raw configuration");
  }
  return Dyadic(mpz_class(static_cast<unsigned long>(solve(config.seats, config.napkins))), n_);
}

Dyadic raw_table_optimum(std::uint32_t n) { return RawTableSolver(n).optimum(); }

Report verify_raw_tables(std::uint32_t max_n, bool keep_passes) {
  Report report(keep_passes);
  ExactEngine engine(long_trap_setting());
  for (std::uint32_t n = 2; n <= max_n; ++n) {
    CheckRecord r;
    r.check = "raw-table-optimum";
    r.n = n;
    r.lhs = raw_table_optimum(n);
    r.rhs = engine.table(n);
    r.pass = r.lhs == r.rhs;
    report.add(std::move(r));
  }
  return report;
}

}  // namespace napkin
