#pragma once

#include <array>

#include "edsim/distributions.hpp"
#include "edsim/types.hpp"

namespace edsim {

/// Tunable patient-flow parameters. Defaults live in defaults.hpp; the
/// experiment config can override any field.
struct FlowParams {
  std::array<DistributionSpec, kTagCount> visit_duration;
  std::array<DistributionSpec, kTagCount> exam_duration;
  DistributionSpec triage_duration;
  DistributionSpec patience;  ///< waiting-room patience for LWBS-fated patients

  std::array<double, kTagCount> lwbs_probability{};         ///< fate draw, per triage tag
  std::array<double, kTagCount> leaves_workup_probability{};///< fate draw, per triage tag
  std::array<double, kTagCount> exam_probability{};         ///< chance the visit orders exams

  /// Every visit needs one physician, one nurse and one seat; reassessment
  /// after exams needs a physician only, for visit-duration times this factor.
  double reassessment_duration_factor = 0.5;

  /// Probability a red arrival comes by ambulance and bypasses triage.
  double red_ambulance_bypass_probability = 1.0;

  /// When true, LWBS-fated patients stay in contention and their abandonment
  /// is cancelled (fate rewritten to Normal) if a visit starts first. Off by
  /// default: the fate draw is calibrated to the historical abandonment
  /// shares, so rescues would systematically undershoot them.
  bool lwbs_rescue_on_visit = false;

  /// Night window during which the yellow area takes no new visits.
  int yellow_night_start_hour = 21;
  int yellow_night_end_hour = 8;

  bool operator==(const FlowParams&) const = default;
};

/// Seats per treatment area.
struct AreaCapacities {
  int green = 1;
  int yellow = 1;
  int shock = 2;

  int of(Area a) const {
    switch (a) {
      case Area::GreenArea: return green;
      case Area::YellowArea: return yellow;
      case Area::ShockRoom: return shock;
    }
    return 0;
  }

  bool operator==(const AreaCapacities&) const = default;
};

}  // namespace edsim
