#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "edsim/rate_plan.hpp"
#include "edsim/replication.hpp"

namespace edsim {

/// Multiplies every slot of every day by (1 + pct/100).
struct UniformIncrease {
  double pct = 0.0;
  bool operator==(const UniformIncrease&) const = default;
};

/// Multiplies each hourly slot of one day by its own (1 + pct/100).
struct SlotIncrease {
  int day = 1;  ///< 1-based
  std::array<double, 24> pct{};
  bool operator==(const SlotIncrease&) const = default;
};

/// Multiplies all 24 slots of one day by (1 + magnitude_pct/100).
struct PeakSurge {
  int day = 2;
  double magnitude_pct = 0.0;
  bool operator==(const PeakSurge&) const = default;
};

/// Replaces one day's triage-tag mix.
struct TagMixOverride {
  int day = 2;
  TagMix mix{};
  bool operator==(const TagMixOverride&) const = default;
};

/// Activates the mass-casualty plan: staff multiplied from start_hour to
/// midnight of start_day, low-acuity arrivals diverted to outpatient care,
/// and the green/yellow areas opened to red patients. Arrival rates are
/// never touched.
struct Peimaf {
  int start_day = 2;
  int start_hour = 10;
  int staff_multiplier = 2;
  bool divert_low_acuity = true;
  bool open_areas_to_red = true;
  bool operator==(const Peimaf&) const = default;
};

using ScenarioTransform =
    std::variant<UniformIncrease, SlotIncrease, PeakSurge, TagMixOverride, Peimaf>;

struct ReplicationPlan {
  int count = 50;
  int length_days = 28;  ///< measured days, excluding warm-up
  double warmup_hours = 24.0;
  uint64_t seed = 42;
  bool operator==(const ReplicationPlan&) const = default;
};

struct ScenarioConfig {
  std::string name = "baseline";
  std::vector<ScenarioTransform> transforms;
  ReplicationPlan plan;
  bool operator==(const ScenarioConfig&) const = default;
};

RatePlan apply_uniform_increase(RatePlan plan, double pct);
RatePlan apply_slot_increase(RatePlan plan, int day, const std::array<double, 24>& pct);
RatePlan apply_peak_surge(RatePlan plan, int day, double magnitude_pct);
RatePlan apply_tag_mix_override(RatePlan plan, int day, const TagMix& mix);

/// The three-day ramp of the mild-surge experiment, as slot transforms for
/// days 2..4 counted from replication start (day 1 is the warm-up day).
std::vector<SlotIncrease> mild_surge_bands();

/// Red share 0.5; the rest of the baseline mix renormalized into the other
/// half.
TagMix red_heavy_mix();

/// Rate plan plus the non-rate side effects after applying every transform
/// left to right. Validates the resulting plan.
struct AppliedScenario {
  RatePlan rate_plan;
  std::optional<PeimafMeasures> peimaf;
};

AppliedScenario apply_transforms(const RatePlan& base,
                                 const std::vector<ScenarioTransform>& transforms);

/// Ready-to-run setup for a scenario: baseline defaults, transformed plan,
/// plan-sized horizon.
ReplicationSetup make_setup(const ScenarioConfig& config);

/// Named presets: baseline, uniform10, mild, extreme100/200/300/400,
/// peimaf-a1, peimaf-a1a2. Throws std::invalid_argument on unknown names.
ScenarioConfig scenario_preset(const std::string& name);
std::vector<std::string> scenario_preset_names();

}  // namespace edsim
