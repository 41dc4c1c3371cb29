#include "edsim/scenario.hpp"

#include <stdexcept>

#include "edsim/defaults.hpp"

namespace edsim {

RatePlan apply_uniform_increase(RatePlan plan, double pct) {
  if (pct <= -100.0) throw std::invalid_argument("uniform increase must stay above -100%");
  double factor = 1.0 + pct / 100.0;
  for (int day = 1; day <= plan.horizon_days(); ++day) {
    for (int h = 0; h < 24; ++h) plan.set_slot_rate(day, h, plan.slot_rate(day, h) * factor);
  }
  return plan;
}

RatePlan apply_slot_increase(RatePlan plan, int day, const std::array<double, 24>& pct) {
  for (int h = 0; h < 24; ++h) {
    plan.set_slot_rate(day, h, plan.slot_rate(day, h) * (1.0 + pct[h] / 100.0));
  }
  return plan;
}

RatePlan apply_peak_surge(RatePlan plan, int day, double magnitude_pct) {
  double factor = 1.0 + magnitude_pct / 100.0;
  for (int h = 0; h < 24; ++h) plan.set_slot_rate(day, h, plan.slot_rate(day, h) * factor);
  return plan;
}

RatePlan apply_tag_mix_override(RatePlan plan, int day, const TagMix& mix) {
  plan.set_mix_for_day(day, mix);
  return plan;
}

std::vector<SlotIncrease> mild_surge_bands() {
  auto banded = [](double b0, double b1, double b2, double b3) {
    std::array<double, 24> pct{};
    for (int h = 0; h < 24; ++h) {
      if (h < 8) pct[h] = b0;
      else if (h < 14) pct[h] = b1;
      else if (h < 20) pct[h] = b2;
      else pct[h] = b3;
    }
    return pct;
  };
  return {SlotIncrease{2, banded(5, 10, 15, 20)},
          SlotIncrease{3, banded(20, 25, 25, 20)},
          SlotIncrease{4, banded(20, 15, 10, 5)}};
}

TagMix red_heavy_mix() {
  TagMix base = defaults::tag_mix();
  double non_red = base[0] + base[1] + base[2];
  double scale = 0.5 / non_red;
  return TagMix{base[0] * scale, base[1] * scale, base[2] * scale, 0.5};
}

AppliedScenario apply_transforms(const RatePlan& base,
                                 const std::vector<ScenarioTransform>& transforms) {
  AppliedScenario out{base, std::nullopt};
  for (const ScenarioTransform& t : transforms) {
    std::visit(
        [&](const auto& tr) {
          using T = std::decay_t<decltype(tr)>;
          if constexpr (std::is_same_v<T, UniformIncrease>) {
            out.rate_plan = apply_uniform_increase(std::move(out.rate_plan), tr.pct);
          } else if constexpr (std::is_same_v<T, SlotIncrease>) {
            out.rate_plan = apply_slot_increase(std::move(out.rate_plan), tr.day, tr.pct);
          } else if constexpr (std::is_same_v<T, PeakSurge>) {
            out.rate_plan = apply_peak_surge(std::move(out.rate_plan), tr.day, tr.magnitude_pct);
          } else if constexpr (std::is_same_v<T, TagMixOverride>) {
            out.rate_plan = apply_tag_mix_override(std::move(out.rate_plan), tr.day, tr.mix);
          } else if constexpr (std::is_same_v<T, Peimaf>) {
            out.peimaf = PeimafMeasures{
                PeimafWindow{tr.start_day, tr.start_hour, tr.staff_multiplier},
                tr.divert_low_acuity, tr.open_areas_to_red};
          }
        },
        t);
  }
  out.rate_plan.validate();
  return out;
}

ReplicationSetup make_setup(const ScenarioConfig& config) {
  ReplicationSetup setup =
      defaults::baseline_setup(config.plan.length_days, config.plan.warmup_hours);
  AppliedScenario applied = apply_transforms(setup.rate_plan, config.transforms);
  setup.rate_plan = std::move(applied.rate_plan);
  setup.peimaf = applied.peimaf;
  return setup;
}

namespace {

ReplicationPlan surge_plan(uint64_t seed) { return ReplicationPlan{10, 5, 24.0, seed}; }

}  // namespace

ScenarioConfig scenario_preset(const std::string& name) {
  ScenarioConfig config;
  config.name = name;
  if (name == "baseline") {
    return config;
  }
  if (name == "uniform10") {
    config.transforms = {UniformIncrease{10.0}};
    config.plan.count = 10;
    return config;
  }
  if (name == "mild") {
    for (const SlotIncrease& band : mild_surge_bands()) config.transforms.push_back(band);
    config.plan = surge_plan(config.plan.seed);
    return config;
  }
  for (double m : {100.0, 200.0, 300.0, 400.0}) {
    if (name == "extreme" + std::to_string(static_cast<int>(m))) {
      config.transforms = {PeakSurge{2, m}};
      config.plan = surge_plan(config.plan.seed);
      return config;
    }
  }
  if (name == "peimaf-a1" || name == "peimaf-a1a2") {
    config.transforms = {PeakSurge{2, 400.0}, TagMixOverride{2, red_heavy_mix()}};
    if (name == "peimaf-a1a2") config.transforms.push_back(Peimaf{});
    config.plan = surge_plan(config.plan.seed);
    return config;
  }
  throw std::invalid_argument("unknown scenario preset: " + name);
}

std::vector<std::string> scenario_preset_names() {
  return {"baseline",   "uniform10",  "mild",      "extreme100", "extreme200",
          "extreme300", "extreme400", "peimaf-a1", "peimaf-a1a2"};
}

}  // namespace edsim
