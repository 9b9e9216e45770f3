#include "napkin/table.hpp"

#include <algorithm>
#include <stdexcept>

namespace napkin {

TableState::TableState(std::uint32_t seats) : occupied_(seats, 0), napkins_(seats, 1) {
  if (seats == 0) throw std::invalid_argument("table needs at least one seat");
}

std::uint32_t TableState::occupied_count() const {
  return static_cast<std::uint32_t>(std::count(occupied_.begin(), occupied_.end(), 1));
}

std::uint32_t TableState::napkin_count() const {
  return static_cast<std::uint32_t>(std::count(napkins_.begin(), napkins_.end(), 1));
}

Label Component::label_at(std::uint32_t offset) const {
  const std::uint32_t last = interval.length - 1;
  if (interval.kind == IntervalKind::Asymmetric) return labels_from_start ? offset : last - offset;
  return std::min(offset, last - offset);
}

std::vector<Component> components(const TableState& table) {
  const std::uint32_t n = table.size();
  std::vector<Component> out;
  std::uint32_t anchor = n;
  for (std::uint32_t s = 0; s < n; ++s) {
    if (table.occupied(s)) {
      anchor = s;
      break;
    }
  }
  if (anchor == n) return out;

  std::uint32_t offset = 1;
  while (offset < n) {
    const std::uint32_t seat = (anchor + offset) % n;
    if (table.occupied(seat)) {
      ++offset;
      continue;
    }
    std::uint32_t length = 0;
    while (offset + length < n && !table.occupied((anchor + offset + length) % n)) ++length;

    const bool left = table.napkin(table.left_napkin(seat));
    const bool right = table.napkin(table.right_napkin((seat + length - 1) % n));
    Component c;
    c.start = seat;
    c.interval.length = length;
    if (left && right) {
      c.interval.kind = IntervalKind::Outer;
    } else if (!left && !right) {
      c.interval.kind = IntervalKind::Inner;
    } else {
      c.interval.kind = IntervalKind::Asymmetric;
      c.labels_from_start = left;
    }
    out.push_back(c);
    offset += length;
  }
  return out;
}

}  // namespace napkin
