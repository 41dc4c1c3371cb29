#pragma once

#include <array>
#include <string>
#include <vector>

#include "edsim/records.hpp"
#include "edsim/replication.hpp"
#include "edsim/stats.hpp"

namespace edsim {

/// Patients whose arrival falls inside the measured window [warmup, horizon).
/// The lower bound is closed: an arrival exactly at warmup is kept.
std::vector<PatientRecord> truncate_warmup(const std::vector<PatientRecord>& patients,
                                           double warmup_minutes);

/// Replication-level aggregate over a tag group of patients.
struct TagMetricStat {
  double mean = 0.0;                  ///< mean of replication means, minutes
  std::optional<double> ci_halfwidth; ///< 95% CI over replications, if >= 2
  std::size_t reps_with_data = 0;     ///< replications whose group was non-empty
  double mean_patient_count = 0.0;    ///< mean group size per replication

  /// Empty groups are reported absent, never as zero.
  bool present() const { return reps_with_data > 0; }
};

/// Aggregated experiment output.
struct Report {
  int schema_version = 1;
  std::string scenario;
  uint64_t seed = 0;
  int replications = 0;
  int length_days = 0;
  double warmup_hours = 0.0;
  bool utilization_time_weighted = false;

  /// Waiting time (triage end to visit start) and throughput time (triage
  /// end to departure), by triage tag, over normal-path and left-during-
  /// workup patients. LWBS, diverted, and censored patients are excluded.
  std::array<TagMetricStat, kTagCount> waiting_time;
  std::array<TagMetricStat, kTagCount> throughput_time;

  /// Mean departure counts per replication by (discharge tag, outcome);
  /// abandonments keep their triage tag.
  std::array<std::array<MeanCI, kOutcomeCount>, kTagCount> outcome_counts;

  /// Per-replication tallies, by triage tag.
  std::array<MeanCI, kTagCount> arrivals;
  std::array<MeanCI, kTagCount> lwbs;
  std::array<MeanCI, kTagCount> diverted;
  std::array<MeanCI, kTagCount> censored;

  /// Hourly utilization per area, averaged over measured days and
  /// replications, and the same series split by day.
  std::array<std::array<double, 24>, kAreaCount> utilization{};
  int first_measured_day = 1;
  std::vector<std::array<std::array<double, 24>, kAreaCount>> utilization_by_day;

  MeanCI red_visits_in_green_area;
  MeanCI red_visits_in_yellow_area;
  int64_t priority_violations = 0;
};

struct AggregationOptions {
  std::string scenario;
  uint64_t seed = 0;
  int length_days = 0;
  double warmup_hours = 24.0;
  bool utilization_time_weighted = false;
};

/// Collapses replication results into a Report. Deterministic: results are
/// consumed in replication-index order regardless of how they were produced.
Report aggregate(const std::vector<ReplicationResult>& results, const ReplicationSetup& setup,
                 const AggregationOptions& options);

}  // namespace edsim
