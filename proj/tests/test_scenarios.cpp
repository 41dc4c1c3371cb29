#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "edsim/defaults.hpp"
#include "edsim/metrics.hpp"
#include "edsim/runner.hpp"
#include "edsim/scenario.hpp"

using namespace edsim;

namespace {

RatePlan base_plan(int days) { return defaults::rate_plan(days); }

double green_wt(const ScenarioConfig& config, uint64_t seed) {
  ScenarioConfig c = config;
  c.plan.seed = seed;
  ReplicationSetup setup = make_setup(c);
  auto results = run_batch_serial(setup, seed, c.plan.count);
  Report rep = aggregate(results, setup,
                         {c.name, seed, c.plan.length_days, c.plan.warmup_hours, false});
  return rep.waiting_time[std::size_t(Tag::Green)].mean;
}

}  // namespace

TEST_CASE("uniform increase rescales every slot of every day") {
  RatePlan plan = base_plan(3);
  RatePlan scaled = apply_uniform_increase(plan, 10.0);
  for (int d = 1; d <= 3; ++d) {
    for (int h = 0; h < 24; ++h) {
      CHECK(scaled.slot_rate(d, h) ==
            doctest::Approx(plan.slot_rate(d, h) * 1.1).epsilon(1e-12));
    }
  }
  // 3.0 patients/hour becomes 3.3 under the +10% experiment.
  CHECK(apply_uniform_increase(base_plan(1), 10.0).slot_rate(1, 23) ==
        doctest::Approx(defaults::hourly_profile()[23] * 1.1));
  CHECK_THROWS_AS(apply_uniform_increase(plan, -100.0), std::invalid_argument);
  CHECK(apply_uniform_increase(plan, -50.0).slot_rate(1, 12) ==
        doctest::Approx(plan.slot_rate(1, 12) * 0.5));
}

TEST_CASE("slot increase touches one day only") {
  std::array<double, 24> pct{};
  pct[9] = 25.0;
  pct[10] = 25.0;
  RatePlan plan = apply_slot_increase(base_plan(4), 3, pct);
  RatePlan original = base_plan(4);

  CHECK(plan.slot_rate(3, 9) == doctest::Approx(original.slot_rate(3, 9) * 1.25));
  CHECK(plan.slot_rate(3, 10) == doctest::Approx(original.slot_rate(3, 10) * 1.25));
  CHECK(plan.slot_rate(3, 11) == original.slot_rate(3, 11));
  CHECK(plan.slot_rate(2, 9) == original.slot_rate(2, 9));
  CHECK(plan.slot_rate(4, 9) == original.slot_rate(4, 9));
}

TEST_CASE("the mild surge ramps days 2 to 4 by time band") {
  std::vector<SlotIncrease> bands = mild_surge_bands();
  REQUIRE(bands.size() == 3);
  CHECK(bands[0].day == 2);
  CHECK(bands[1].day == 3);
  CHECK(bands[2].day == 4);

  RatePlan plan = base_plan(5);
  for (const SlotIncrease& s : bands) plan = apply_slot_increase(plan, s.day, s.pct);
  RatePlan original = base_plan(5);

  CHECK(plan.slot_rate(2, 6) == doctest::Approx(original.slot_rate(2, 6) * 1.05));
  CHECK(plan.slot_rate(3, 9) == doctest::Approx(original.slot_rate(3, 9) * 1.25));
  CHECK(plan.slot_rate(3, 21) == doctest::Approx(original.slot_rate(3, 21) * 1.20));
  CHECK(plan.slot_rate(4, 23) == doctest::Approx(original.slot_rate(4, 23) * 1.05));
  CHECK(plan.day_profile(1) == original.day_profile(1));
  CHECK(plan.day_profile(5) == original.day_profile(5));
}

TEST_CASE("peak surge multiplies the surge day wholesale") {
  RatePlan plan = apply_peak_surge(base_plan(5), 2, 300.0);
  RatePlan original = base_plan(5);
  for (int h = 0; h < 24; ++h) {
    CHECK(plan.slot_rate(2, h) == doctest::Approx(original.slot_rate(2, h) * 4.0));
    CHECK(plan.slot_rate(3, h) == original.slot_rate(3, h));
  }
  CHECK(plan.mix_for_day(2) == original.mix_for_day(2));
}

TEST_CASE("the red-heavy mix puts half the arrivals on red") {
  TagMix mix = red_heavy_mix();
  CHECK(mix[std::size_t(Tag::Red)] == 0.5);
  double sum = 0.0;
  for (double p : mix) sum += p;
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  // The non-red shares keep their baseline ratios.
  TagMix base = defaults::tag_mix();
  double ratio = mix[std::size_t(Tag::Green)] / base[std::size_t(Tag::Green)];
  CHECK(mix[std::size_t(Tag::White)] ==
        doctest::Approx(base[std::size_t(Tag::White)] * ratio).epsilon(1e-12));

  RatePlan plan = apply_tag_mix_override(base_plan(3), 2, mix);
  CHECK(plan.mix_for_day(1) == defaults::tag_mix());
  CHECK(plan.mix_for_day(2) == mix);
  CHECK(plan.mix_for_day(3) == defaults::tag_mix());
}

TEST_CASE("transforms compose left to right") {
  std::vector<ScenarioTransform> ts;
  ts.push_back(UniformIncrease{10.0});
  ts.push_back(PeakSurge{2, 100.0});
  AppliedScenario applied = apply_transforms(base_plan(3), ts);
  CHECK_FALSE(applied.peimaf.has_value());
  CHECK(applied.rate_plan.slot_rate(2, 10) ==
        doctest::Approx(base_plan(3).slot_rate(2, 10) * 1.1 * 2.0));
  CHECK(applied.rate_plan.slot_rate(1, 10) ==
        doctest::Approx(base_plan(3).slot_rate(1, 10) * 1.1));
}

TEST_CASE("the emergency plan transform changes measures, never rates") {
  ScenarioConfig a1 = scenario_preset("peimaf-a1");
  ScenarioConfig a1a2 = scenario_preset("peimaf-a1a2");
  REQUIRE(a1a2.transforms.size() == a1.transforms.size() + 1);

  AppliedScenario first = apply_transforms(base_plan(5), a1.transforms);
  AppliedScenario second = apply_transforms(base_plan(5), a1a2.transforms);
  CHECK(first.rate_plan == second.rate_plan);
  CHECK_FALSE(first.peimaf.has_value());
  REQUIRE(second.peimaf.has_value());
  CHECK(second.peimaf->window.day_number == 2);
  CHECK(second.peimaf->window.start_hour == 10);
  CHECK(second.peimaf->window.staff_multiplier == 2);
  CHECK(second.peimaf->divert_low_acuity);
  CHECK(second.peimaf->open_areas_to_red);

  // A1 quadruples day 2 on top of the baseline and makes half of it red.
  CHECK(first.rate_plan.slot_rate(2, 10) ==
        doctest::Approx(base_plan(5).slot_rate(2, 10) * 5.0));
  CHECK(first.rate_plan.mix_for_day(2)[std::size_t(Tag::Red)] == 0.5);
}

TEST_CASE("presets carry the right replication plans") {
  ScenarioConfig baseline = scenario_preset("baseline");
  CHECK(baseline.plan.count == 50);
  CHECK(baseline.plan.length_days == 28);
  CHECK(baseline.plan.warmup_hours == 24.0);
  CHECK(baseline.transforms.empty());

  ScenarioConfig uniform = scenario_preset("uniform10");
  CHECK(uniform.plan.length_days == 28);
  REQUIRE(uniform.transforms.size() == 1);
  CHECK(std::get<UniformIncrease>(uniform.transforms[0]).pct == 10.0);

  for (double m : {100.0, 200.0, 300.0, 400.0}) {
    ScenarioConfig e = scenario_preset("extreme" + std::to_string(int(m)));
    CHECK(e.plan.count == 10);
    CHECK(e.plan.length_days == 5);
    REQUIRE(e.transforms.size() == 1);
    PeakSurge s = std::get<PeakSurge>(e.transforms[0]);
    CHECK(s.day == 2);
    CHECK(s.magnitude_pct == m);
  }

  CHECK(scenario_preset("mild").transforms.size() == 3);
  CHECK_THROWS_AS(scenario_preset("extreme500"), std::invalid_argument);
  CHECK_THROWS_AS(scenario_preset("bogus"), std::invalid_argument);

  auto names = scenario_preset_names();
  CHECK(names.size() == 9);
  for (const std::string& n : names) CHECK_NOTHROW(scenario_preset(n));
}

TEST_CASE("make_setup sizes the horizon from the plan") {
  ScenarioConfig config = scenario_preset("extreme100");
  ReplicationSetup setup = make_setup(config);
  CHECK(setup.warmup_minutes == 1440.0);
  CHECK(setup.horizon_minutes == 1440.0 + 5 * 1440.0);
  CHECK(setup.rate_plan.horizon_days() == 6);
  CHECK_FALSE(setup.peimaf.has_value());
  CHECK(setup.area_capacities.green == defaults::area_capacities().green);
  CHECK(setup.area_capacities.yellow == defaults::area_capacities().yellow);
  CHECK(setup.area_capacities.shock == defaults::area_capacities().shock);
}

TEST_CASE("surges order green waiting times on every seed tried") {
  ScenarioConfig base = scenario_preset("baseline");
  base.plan.count = 10;
  base.plan.length_days = 5;
  ScenarioConfig surged = scenario_preset("extreme200");
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    CHECK(green_wt(base, seed) < green_wt(surged, seed));
  }
}
