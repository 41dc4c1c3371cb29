#include "edsim/defaults.hpp"

namespace edsim {
namespace defaults {

HourlyProfile hourly_profile() {
  return HourlyProfile{1.40, 1.12, 0.95, 0.86, 0.82, 0.92, 1.35, 2.40,
                       3.90, 5.15, 5.60, 5.30, 4.85, 4.40, 4.15, 4.00,
                       3.95, 4.05, 4.20, 4.05, 3.45, 2.80, 2.10, 1.30};
}

TagMix tag_mix() { return TagMix{0.0728, 0.7077, 0.2121, 0.0074}; }

std::array<double, kTagCount> triage_counts() { return {149.0, 1448.0, 434.0, 15.0}; }

std::array<double, kTagCount> discharge_counts() { return {171.0, 1612.0, 243.0, 20.0}; }

FlowParams flow_params() {
  FlowParams flow{
      .visit_duration = {DistributionSpec::lognormal(7.87, 9.76),
                         DistributionSpec::lognormal(11.7, 10.6),
                         DistributionSpec::normal(15.2, 7.72),
                         DistributionSpec::shifted_gamma(8.0, 10.2, 1.49)},
      .exam_duration = {DistributionSpec::exponential(44.4),
                        DistributionSpec::exponential(80.4),
                        DistributionSpec::weibull(236.0, 0.731),
                        DistributionSpec::weibull(86.9, 0.678)},
      .triage_duration = DistributionSpec::uniform(2.0, 8.0),
      .patience = DistributionSpec::exponential(60.0),
  };
  flow.lwbs_probability = {0.0465, 0.0161, 0.0041, 0.0};
  flow.leaves_workup_probability = {3.0 / 149.0, 17.0 / 1448.0, 2.0 / 434.0, 0.0};
  flow.exam_probability = {0.30, 0.50, 0.80, 0.90};
  return flow;
}

StaffCalendar staff_calendar() {
  std::vector<ShiftBlock> phys_weekday{{8, 14, 2}, {14, 21, 2}, {21, 8, 1}};
  std::vector<ShiftBlock> phys_holiday{{8, 14, 1}, {14, 21, 1}, {21, 8, 1}};
  std::vector<ShiftBlock> nurses{{7, 14, 3}, {14, 22, 3}, {22, 7, 2}};
  return StaffCalendar(std::move(phys_weekday), std::move(phys_holiday), std::move(nurses));
}

AreaCapacities area_capacities() { return AreaCapacities{}; }

TagTransitionMatrix transition_matrix() {
  return TagTransitionMatrix{{{
      {1.0, 0.0, 0.0, 0.0},
      {22.0 / 1448.0, 1426.0 / 1448.0, 0.0, 0.0},
      {0.0, 186.0 / 434.0, 243.0 / 434.0, 5.0 / 434.0},
      {0.0, 0.0, 0.0, 1.0},
  }}};
}

OutcomeTable outcome_table() {
  return OutcomeTable{{{
      {121.0 / 171.0, 39.0 / 171.0, 0.0, 0.0, 0.0, 3.0 / 171.0, 8.0 / 171.0, 0.0, 0.0},
      {1025.0 / 1612.0, 496.0 / 1612.0, 29.0 / 1612.0, 0.0, 19.0 / 1612.0, 17.0 / 1612.0,
       26.0 / 1612.0, 0.0, 0.0},
      {23.0 / 243.0, 21.0 / 243.0, 182.0 / 243.0, 4.0 / 243.0, 10.0 / 243.0, 2.0 / 243.0,
       1.0 / 243.0, 0.0, 0.0},
      {0.0, 0.0, 14.0 / 20.0, 4.0 / 20.0, 0.0, 0.0, 0.0, 2.0 / 20.0, 0.0},
  }}};
}

DayCalendar day_calendar() { return DayCalendar{}; }

RatePlan rate_plan(int horizon_days) {
  return RatePlan::repeat(hourly_profile(), tag_mix(), horizon_days);
}

ReplicationSetup baseline_setup(int measured_days, double warmup_hours) {
  double warmup_minutes = warmup_hours * 60.0;
  int warmup_days = static_cast<int>((warmup_minutes + kMinutesPerDay - 1.0) / kMinutesPerDay);
  int horizon_days = warmup_days + measured_days;
  return ReplicationSetup{
      .rate_plan = rate_plan(horizon_days),
      .day_calendar = day_calendar(),
      .staff = staff_calendar(),
      .area_capacities = area_capacities(),
      .transition = transition_matrix(),
      .outcomes = outcome_table(),
      .flow = flow_params(),
      .peimaf = std::nullopt,
      .warmup_minutes = warmup_minutes,
      .horizon_minutes = warmup_minutes + measured_days * kMinutesPerDay,
  };
}

}  // namespace defaults
}  // namespace edsim
