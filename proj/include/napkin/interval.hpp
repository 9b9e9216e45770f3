#pragma once

#include "napkin/dyadic.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace napkin {

// A connected component of the table graph is a path of alternating seats and
// napkins. Its kind is fixed by what sits at the two ends:
//   Inner      seat ... seat        n seats, n-1 napkins
//   Outer      napkin ... napkin    n seats, n+1 napkins
//   Asymmetric napkin ... seat      n seats, n napkins
enum class IntervalKind : std::uint8_t { Inner, Outer, Asymmetric };

inline constexpr std::array<IntervalKind, 3> kAllKinds = {IntervalKind::Inner, IntervalKind::Outer,
                                                          IntervalKind::Asymmetric};

std::string_view to_string(IntervalKind kind);
std::optional<IntervalKind> parse_kind(std::string_view text);

class IntervalError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Interval {
  IntervalKind kind = IntervalKind::Inner;
  std::uint32_t length = 1;

  /// Throws IntervalError for Inner of length 0, which cannot exist.
  static Interval make(IntervalKind kind, std::uint32_t length);

  /// Napkin vertices in the component. Outer/Asymmetric of length 0 are the
  /// seatless pseudo-intervals: a lone napkin and an empty gap.
  std::uint32_t napkins() const;

  friend auto operator<=>(const Interval&, const Interval&) = default;
};

std::string to_string(const Interval& interval);

/// Distance in napkins from a seat to the nearest endpoint (Inner/Outer), or to
/// the outer-facing endpoint seat (Asymmetric).
using Label = std::uint32_t;

/// Largest label any seat in the interval carries; requires length >= 1.
Label max_label(const Interval& interval);
/// Every label carried by some seat, ascending. Throws IntervalError on length 0.
std::vector<Label> valid_labels(const Interval& interval);
bool is_valid_label(const Interval& interval, Label label);

struct SplitOutcome {
  std::vector<Interval> pieces;  // 0-2 entries, length-0 Outer/Asymmetric kept
  Dyadic probability;
  bool napkinless = false;  // the seated diner found no napkin (only a lone Inner seat)
};

struct SplitDistribution {
  std::vector<SplitOutcome> outcomes;
};

/// Exact outcome distribution of seating one diner at `label` inside `interval`.
///
/// Pieces are listed left to right when the interval is drawn with its
/// label-0 end on the left (for Asymmetric, the outer-facing end). The seated
/// diner takes the left napkin in the first outcome of a two-way split.
SplitDistribution split(const Interval& interval, Label label);

}  // namespace napkin
