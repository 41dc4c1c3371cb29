#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <vector>

#include "edsim/arrivals.hpp"
#include "edsim/defaults.hpp"
#include "edsim/rate_plan.hpp"
#include "edsim/rng.hpp"
#include "edsim/scenario.hpp"
#include "edsim/stats.hpp"

using namespace edsim;

namespace {

HourlyProfile flat(double rate) {
  HourlyProfile p;
  p.fill(rate);
  return p;
}

const TagMix kMix = defaults::tag_mix();

std::vector<double> generate_all(const RatePlan& plan, uint64_t seed) {
  RngStream rng(seed, 0, RngPurpose::Arrivals);
  ArrivalGenerator gen(plan, rng);
  std::vector<double> ts;
  while (auto t = gen.next()) ts.push_back(*t);
  return ts;
}

}  // namespace

TEST_CASE("rate plan exposes slot rates, majorants, and totals") {
  HourlyProfile p = flat(2.0);
  p[10] = 6.5;
  RatePlan plan = RatePlan::repeat(p, kMix, 3);

  CHECK(plan.horizon_days() == 3);
  CHECK(plan.slot_rate(2, 10) == 6.5);
  CHECK(plan.lambda_max(1) == 6.5);
  CHECK(plan.rate_at(10.0 * 60.0 + 30.0) == 6.5);
  CHECK(plan.rate_at(11.0 * 60.0) == 2.0);
  CHECK(plan.rate_at(3.0 * kMinutesPerDay + 1.0) == 0.0);  // past the horizon
  CHECK(plan.expected_total() == doctest::Approx(3 * (23 * 2.0 + 6.5)));

  plan.set_slot_rate(3, 0, 9.0);
  CHECK(plan.lambda_max(3) == 9.0);
  CHECK(plan.lambda_max(1) == 6.5);
}

TEST_CASE("validation names the offending slot or day") {
  HourlyProfile p = flat(1.0);
  p[13] = -0.5;
  RatePlan bad_rate = RatePlan::repeat(p, kMix, 2);
  CHECK_THROWS_WITH_AS(bad_rate.validate(),
                       doctest::Contains("slot 13"), std::invalid_argument);

  TagMix off{0.2, 0.5, 0.2, 0.05};  // sums to 0.95
  RatePlan bad_mix = RatePlan::repeat(flat(1.0), off, 3);
  CHECK_THROWS_WITH_AS(bad_mix.validate(), doctest::Contains("mix"), std::invalid_argument);

  RatePlan ok = RatePlan::repeat(flat(1.0), kMix, 2);
  CHECK_NOTHROW(ok.validate());
}

TEST_CASE("thinning acceptance probability is rate over majorant") {
  HourlyProfile p = flat(2.0);
  p[1] = 6.0;
  p[2] = 0.0;
  RatePlan plan = RatePlan::repeat(p, kMix, 1);

  CHECK(ArrivalGenerator::acceptance_probability(plan, 30.0) == doctest::Approx(2.0 / 6.0));
  CHECK(ArrivalGenerator::acceptance_probability(plan, 90.0) == 1.0);
  CHECK(ArrivalGenerator::acceptance_probability(plan, 150.0) == 0.0);
}

TEST_CASE("an all-zero plan yields no arrivals") {
  RatePlan plan = RatePlan::repeat(flat(0.0), kMix, 5);
  RngStream rng(1, 0, RngPurpose::Arrivals);
  ArrivalGenerator gen(plan, rng);
  CHECK_FALSE(gen.next().has_value());
}

TEST_CASE("zero-rate slots contain no arrivals") {
  HourlyProfile p = flat(3.0);
  p[4] = 0.0;
  p[17] = 0.0;
  RatePlan plan = RatePlan::repeat(p, kMix, 200);
  for (double t : generate_all(plan, 7)) {
    int h = static_cast<int>(hour_of_day(t));
    CHECK(h != 4);
    CHECK(h != 17);
  }
}

TEST_CASE("constant rate degenerates to exponential interarrivals") {
  const double rate = 3.0;  // per hour -> mean gap 20 min
  RatePlan plan = RatePlan::repeat(flat(rate), kMix, 300);
  std::vector<double> ts = generate_all(plan, 19);

  std::vector<double> gaps;
  for (std::size_t i = 1; i < ts.size(); ++i) gaps.push_back(ts[i] - ts[i - 1]);
  REQUIRE(gaps.size() > 10000);

  double mean = 0.0;
  for (double g : gaps) mean += g;
  mean /= static_cast<double>(gaps.size());
  CHECK(std::abs(mean - 20.0) < 3.0 * 20.0 / std::sqrt(double(gaps.size())));
  CHECK(ks_statistic_exponential(gaps, 20.0) < ks_critical_value(0.01, gaps.size()));
}

TEST_CASE("slot counts over 1e4 days track the baseline profile within 3 sigma") {
  const int days = 10000;
  RatePlan plan = RatePlan::repeat(defaults::hourly_profile(), kMix, days);
  std::array<int64_t, 24> counts{};
  int64_t total = 0;
  for (double t : generate_all(plan, 23)) {
    ++counts[static_cast<std::size_t>(hour_of_day(t))];
    ++total;
  }
  for (int h = 0; h < 24; ++h) {
    double expect = defaults::hourly_profile()[static_cast<std::size_t>(h)] * days;
    INFO("hour ", h);
    CHECK(std::abs(counts[static_cast<std::size_t>(h)] - expect) < 3.0 * std::sqrt(expect));
  }
  double expect_total = plan.expected_total();
  CHECK(std::abs(total - expect_total) < 3.0 * std::sqrt(expect_total));
}

TEST_CASE("uniform scaling scales expected and observed counts") {
  RatePlan base = RatePlan::repeat(defaults::hourly_profile(), kMix, 2000);
  RatePlan scaled = apply_uniform_increase(base, 10.0);
  CHECK(scaled.expected_total() == doctest::Approx(base.expected_total() * 1.1));

  double n_base = static_cast<double>(generate_all(base, 5).size());
  double n_scaled = static_cast<double>(generate_all(scaled, 5).size());
  double ratio = n_scaled / n_base;
  // Both totals are Poisson around ~146k and ~161k; 1.1 +- noise.
  CHECK(ratio > 1.08);
  CHECK(ratio < 1.12);
}

TEST_CASE("tag assignment uses cumulative bins in severity order") {
  CHECK(assign_triage_tag(0.05, kMix) == Tag::White);
  CHECK(assign_triage_tag(0.50, kMix) == Tag::Green);
  CHECK(assign_triage_tag(0.999, kMix) == Tag::Red);
  // Bin edges: [0, .0728) white, then green, yellow, red.
  CHECK(assign_triage_tag(0.0727, kMix) == Tag::White);
  CHECK(assign_triage_tag(0.0728, kMix) == Tag::Green);
  CHECK(assign_triage_tag(0.80, kMix) == Tag::Yellow);  // white+green mass is 0.7805
  CHECK(assign_triage_tag(0.0, kMix) == Tag::White);
}

TEST_CASE("tag shares over 2e5 draws match the mix within 3 standard errors") {
  RngStream rng(13, 0, RngPurpose::TriageTags);
  const int n = 200000;
  std::array<int, kTagCount> counts{};
  for (int i = 0; i < n; ++i) {
    ++counts[static_cast<std::size_t>(assign_triage_tag(rng.u01(), kMix))];
  }
  for (Tag t : kAllTags) {
    double p = kMix[static_cast<std::size_t>(t)];
    double se = std::sqrt(p * (1.0 - p) / n);
    INFO(tag_name(t));
    CHECK(std::abs(counts[static_cast<std::size_t>(t)] / double(n) - p) < 3.0 * se);
  }
}

TEST_CASE("per-day mixes are independent") {
  RatePlan plan = RatePlan::repeat(flat(1.0), kMix, 3);
  TagMix heavy = red_heavy_mix();
  plan.set_mix_for_day(2, heavy);
  CHECK(plan.mix_for_day(1) == kMix);
  CHECK(plan.mix_for_day(2) == heavy);
  CHECK(plan.mix_for_day(3) == kMix);
}
