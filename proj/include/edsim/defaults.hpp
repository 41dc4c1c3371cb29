#pragma once

#include "edsim/flow_params.hpp"
#include "edsim/outcomes.hpp"
#include "edsim/rate_plan.hpp"
#include "edsim/replication.hpp"
#include "edsim/staffing.hpp"
#include "edsim/transition.hpp"

namespace edsim {
namespace defaults {

/// Hourly arrival intensities (patients/hour): overnight trough, steep
/// morning ramp peaking at 10:00, afternoon plateau with a small evening
/// shoulder. Daily total 73.07 patients.
HourlyProfile hourly_profile();

/// Triage-tag shares on arrival: white, green, yellow, red.
TagMix tag_mix();

/// Historical per-tag triage and discharge headcounts behind the default
/// transition matrix (one month of visits, 2046 patients).
std::array<double, kTagCount> triage_counts();
std::array<double, kTagCount> discharge_counts();

FlowParams flow_params();
StaffCalendar staff_calendar();
AreaCapacities area_capacities();
TagTransitionMatrix transition_matrix();
OutcomeTable outcome_table();
DayCalendar day_calendar();

/// The full-profile plan over warm-up plus measured days.
RatePlan rate_plan(int horizon_days);

/// Baseline setup: default everything, horizon = warm-up + measured days.
ReplicationSetup baseline_setup(int measured_days, double warmup_hours);

}  // namespace defaults
}  // namespace edsim
