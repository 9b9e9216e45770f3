#pragma once

#include "napkin/interval.hpp"

#include <cstdint>
#include <vector>

namespace napkin {

/// A literal circular table. Napkin i lies between seat i and seat (i+1) mod n,
/// so seat k reaches napkins (k-1) mod n on its left and k on its right.
class TableState {
 public:
  explicit TableState(std::uint32_t seats);

  std::uint32_t size() const { return static_cast<std::uint32_t>(occupied_.size()); }

  bool occupied(std::uint32_t seat) const { return occupied_[seat] != 0; }
  bool napkin(std::uint32_t index) const { return napkins_[index] != 0; }
  std::uint32_t napkinless() const { return napkinless_; }
  std::uint32_t occupied_count() const;
  std::uint32_t napkin_count() const;
  bool full() const { return occupied_count() == size(); }
  bool pristine() const { return occupied_count() == 0; }

  std::uint32_t left_napkin(std::uint32_t seat) const { return (seat + size() - 1) % size(); }
  std::uint32_t right_napkin(std::uint32_t seat) const { return seat; }

  // Raw mutators; they do not enforce the seating rule. Used by the simulator
  // and by tests that build configurations directly.
  void set_occupied(std::uint32_t seat, bool value) { occupied_[seat] = value ? 1 : 0; }
  void set_napkin(std::uint32_t index, bool value) { napkins_[index] = value ? 1 : 0; }
  void add_napkinless() { ++napkinless_; }

  friend bool operator==(const TableState&, const TableState&) = default;

 private:
  std::vector<std::uint8_t> occupied_;
  std::vector<std::uint8_t> napkins_;
  std::uint32_t napkinless_ = 0;
};

/// A maximal run of empty seats, seen as an interval instance.
struct Component {
  std::uint32_t start = 0;     // first seat of the run, walking clockwise
  Interval interval;
  bool labels_from_start = true;  // Asymmetric only: outer-facing endpoint is at `start`

  std::uint32_t seat_at(std::uint32_t offset, std::uint32_t table_size) const {
    return (start + offset) % table_size;
  }
  Label label_at(std::uint32_t offset) const;
};

/// Splits a non-pristine table into its interval instances, in clockwise order
/// starting after the lowest occupied seat. A pristine table (one cycle) and a
/// full table both yield no components.
std::vector<Component> components(const TableState& table);

}  // namespace napkin
