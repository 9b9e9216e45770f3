#include "napkin/interval.hpp"

namespace napkin {

std::string_view to_string(IntervalKind kind) {
  switch (kind) {
    case IntervalKind::Inner:
      return "inner";
    case IntervalKind::Outer:
      return "outer";
    case IntervalKind::Asymmetric:
      return "asymmetric";
  }
  return "?";
}

std::optional<IntervalKind> parse_kind(std::string_view text) {
  if (text == "inner" || text == "I") return IntervalKind::Inner;
  if (text == "outer" || text == "O") return IntervalKind::Outer;
  if (text == "asymmetric" || text == "asym" || text == "A") return IntervalKind::Asymmetric;
  return std::nullopt;
}

Interval Interval::make(IntervalKind kind, std::uint32_t length) {
  if (kind == IntervalKind::Inner && length == 0) {
    throw IntervalError("inner interval of length 0 does not exist");
  }
  return Interval{kind, length};
}

std::uint32_t Interval::napkins() const {
  switch (kind) {
    case IntervalKind::Inner:
      return length - 1;
    case IntervalKind::Outer:
      return length + 1;
    case IntervalKind::Asymmetric:
      return length;
  }
  return 0;
}

std::string to_string(const Interval& interval) {
  return std::string(to_string(interval.kind)) + " " + std::to_string(interval.length);
}

Label max_label(const Interval& interval) {
  if (interval.length == 0) throw IntervalError("no seats");
  if (interval.kind == IntervalKind::Asymmetric) return interval.length - 1;
  return (interval.length - 1) / 2;
}

std::vector<Label> valid_labels(const Interval& interval) {
  const Label top = max_label(interval);
  std::vector<Label> labels(top + 1);
  for (Label m = 0; m <= top; ++m) labels[m] = m;
  return labels;
}

bool is_valid_label(const Interval& interval, Label label) {
  return interval.length > 0 && label <= max_label(interval);
}

namespace {

SplitDistribution certain(std::vector<Interval> pieces, bool napkinless = false) {
  return SplitDistribution{{SplitOutcome{std::move(pieces), Dyadic(1), napkinless}}};
}

SplitDistribution coin(Interval a1, Interval b1, Interval a2, Interval b2) {
  const Dyadic half = Dyadic::ratio(1, 1);
  return SplitDistribution{{SplitOutcome{{a1, b1}, half}, SplitOutcome{{a2, b2}, half}}};
}

}  // namespace

SplitDistribution split(const Interval& interval, Label label) {
  if (interval.kind == IntervalKind::Inner && interval.length == 0) {
    throw IntervalError("inner interval of length 0 does not exist");
  }
  if (interval.length == 0) throw IntervalError("no seats");
  if (!is_valid_label(interval, label)) {
    throw IntervalError("label " + std::to_string(label) + " is not valid for " + to_string(interval));
  }

  const std::uint32_t n = interval.length;
  const std::uint32_t m = label;
  const std::uint32_t rest = n - m - 1;
  using K = IntervalKind;

  switch (interval.kind) {
    case K::Inner:
      if (n == 1) return certain({}, /*napkinless=*/true);
      if (m == 0) return certain({Interval{K::Inner, n - 1}});
      return coin(Interval{K::Inner, m}, Interval{K::Asymmetric, rest},  //
                  Interval{K::Asymmetric, m}, Interval{K::Inner, rest});
    case K::Outer:
      return coin(Interval{K::Asymmetric, m}, Interval{K::Outer, rest},  //
                  Interval{K::Outer, m}, Interval{K::Asymmetric, rest});
    case K::Asymmetric:
      // Label n-1 is the inner-facing endpoint: one napkin, no choice.
      if (m == n - 1) return certain({Interval{K::Asymmetric, n - 1}});
      return coin(Interval{K::Asymmetric, m}, Interval{K::Asymmetric, rest},  //
                  Interval{K::Outer, m}, Interval{K::Inner, rest});
  }
  throw IntervalError("unknown interval kind");
}

}  // namespace napkin
