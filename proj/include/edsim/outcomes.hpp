#pragma once

#include <array>

#include "edsim/types.hpp"

namespace edsim {

/// Per-discharge-tag probability vectors over the departure outcomes.
///
/// Rows carry the full historical outcome shares, including the abandonment
/// columns O6/O7. Patients completing the normal path draw from the row
/// restricted to non-abandonment outcomes (renormalized); abandonment fates
/// force O6/O7 directly and never reach this draw.
class OutcomeTable {
 public:
  explicit OutcomeTable(const std::array<std::array<double, kOutcomeCount>, kTagCount>& rows);

  double probability(Tag discharge_tag, Outcome o) const {
    return rows_[static_cast<std::size_t>(discharge_tag)][static_cast<std::size_t>(o)];
  }

  /// Draw for a normal-path completion: O6/O7 mass is excluded and the rest
  /// renormalized, cumulative in O1..O9 order.
  Outcome sample_completion(Tag discharge_tag, double u) const;

  bool operator==(const OutcomeTable&) const = default;

 private:
  std::array<std::array<double, kOutcomeCount>, kTagCount> rows_;
  std::array<double, kTagCount> completion_mass_{};  // row sum excluding O6/O7
};

}  // namespace edsim
