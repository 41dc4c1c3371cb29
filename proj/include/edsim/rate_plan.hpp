#pragma once

#include <array>
#include <vector>

#include "edsim/types.hpp"

namespace edsim {

using HourlyProfile = std::array<double, 24>;  ///< patients/hour per slot
using TagMix = std::array<double, kTagCount>;  ///< indexed by Tag, sums to 1

/// Piecewise-constant arrival intensity over the whole replication horizon,
/// plus the per-day triage-tag mix.
///
/// Rates are patients/hour, constant within each hourly slot. Scenario
/// transforms rewrite this structure; the generator reads it as-is.
class RatePlan {
 public:
  RatePlan() = default;

  /// Same profile and mix repeated for every day of the horizon.
  static RatePlan repeat(const HourlyProfile& profile, const TagMix& mix, int horizon_days);

  int horizon_days() const { return static_cast<int>(days_.size()); }

  /// Intensity (patients/hour) at an instant; zero past the horizon.
  double rate_at(double minutes) const;

  /// Slot rate for (1-based day, hour in [0,24)).
  double slot_rate(int day_number, int hour) const { return days_.at(day_number - 1)[hour]; }
  void set_slot_rate(int day_number, int hour, double rate) { days_.at(day_number - 1)[hour] = rate; }

  const HourlyProfile& day_profile(int day_number) const { return days_.at(day_number - 1); }
  HourlyProfile& day_profile(int day_number) { return days_.at(day_number - 1); }

  /// Majorant used by the thinning generator, per 1-based day.
  double lambda_max(int day_number) const;

  const TagMix& mix_for_day(int day_number) const { return mixes_.at(day_number - 1); }
  void set_mix_for_day(int day_number, const TagMix& mix) { mixes_.at(day_number - 1) = mix; }

  /// Expected arrivals over the whole horizon (sum of slot rates).
  double expected_total() const;

  /// Throws std::invalid_argument naming the offending slot/day when rates
  /// are negative, non-finite, or a day's mix does not sum to 1 within 1e-9.
  void validate() const;

  bool operator==(const RatePlan&) const = default;

 private:
  std::vector<HourlyProfile> days_;
  std::vector<TagMix> mixes_;
};

}  // namespace edsim
