#pragma once

#include <optional>

#include "edsim/day_calendar.hpp"
#include "edsim/flow_params.hpp"
#include "edsim/outcomes.hpp"
#include "edsim/rate_plan.hpp"
#include "edsim/records.hpp"
#include "edsim/staffing.hpp"
#include "edsim/transition.hpp"

namespace edsim {

/// Emergency-plan measures beyond the staffing multiplier.
struct PeimafMeasures {
  PeimafWindow window;
  bool divert_low_acuity = false;   ///< Green/White/Yellow sent to outpatient care
  bool open_areas_to_red = false;   ///< red may overflow into yellow/green seats
};

/// Fully materialized inputs for one replication: scenario transforms have
/// already been applied to the rate plan, and the horizon covers warm-up
/// plus the measured window.
struct ReplicationSetup {
  RatePlan rate_plan;
  DayCalendar day_calendar;
  StaffCalendar staff;
  AreaCapacities area_capacities;
  TagTransitionMatrix transition;
  OutcomeTable outcomes;
  FlowParams flow;
  std::optional<PeimafMeasures> peimaf;

  double warmup_minutes = 1440.0;
  double horizon_minutes = 0.0;  ///< warmup + measured window
};

/// Runs one replication to completion. Deterministic in (setup, seed,
/// replication_index): identical inputs give bit-identical results.
ReplicationResult run_replication(const ReplicationSetup& setup, uint64_t seed,
                                  uint64_t replication_index);

/// Whether the yellow area accepts new seatings at this instant, counting a
/// red-overflow reopening by the emergency plan.
bool yellow_area_open_at(const ReplicationSetup& setup, double at_minutes);

/// Seats the roster plans to staff in an area at this instant; 0 while the
/// area is closed overnight.
int scheduled_area_capacity(const ReplicationSetup& setup, Area area, double at_minutes);

}  // namespace edsim
