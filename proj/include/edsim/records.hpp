#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "edsim/types.hpp"

namespace edsim {

/// Everything recorded about one patient. Timestamps are minutes from
/// replication start; unset stages stay nullopt (e.g. a diverted patient
/// never gets a visit_start).
struct PatientRecord {
  int32_t id = 0;
  Tag triage_tag = Tag::Green;
  Fate fate = Fate::Normal;
  bool via_ambulance = false;
  bool diverted = false;   ///< sent to outpatient care by the emergency plan
  bool censored = false;   ///< still in the department when the run ended

  std::optional<Tag> discharge_tag;
  std::optional<Outcome> outcome;
  std::optional<Area> visit_area;

  double arrival_time = 0.0;                 // t0
  std::optional<double> triage_end_time;     // t1
  std::optional<double> visit_start_time;    // t2
  std::optional<double> visit_end_time;      // t3
  std::optional<double> workup_end_time;     // t4
  std::optional<double> departure_time;      // t5

  std::optional<double> waiting_time() const {
    if (!visit_start_time || !triage_end_time) return std::nullopt;
    return *visit_start_time - *triage_end_time;
  }

  std::optional<double> throughput_time() const {
    if (!departure_time || !triage_end_time) return std::nullopt;
    return *departure_time - *triage_end_time;
  }

  bool operator==(const PatientRecord&) const = default;
};

/// Instantaneous occupancy snapshot taken at an hour boundary.
struct UtilizationSample {
  int day_number = 0;  ///< 1-based
  int hour = 0;        ///< [0, 23]
  Area area = Area::GreenArea;
  int busy = 0;
  int scheduled_capacity = 0;

  /// busy / scheduled capacity, clamped to [0,1]; 0 when the area is closed.
  double value() const {
    if (scheduled_capacity <= 0) return 0.0;
    double v = static_cast<double>(busy) / scheduled_capacity;
    return v > 1.0 ? 1.0 : v;
  }

  bool operator==(const UtilizationSample&) const = default;
};

/// Raw output of one replication, before warm-up truncation.
struct ReplicationResult {
  uint64_t replication_index = 0;
  std::vector<PatientRecord> patients;      ///< ordered by id
  std::vector<UtilizationSample> samples;   ///< post-warmup hour boundaries
  int64_t priority_violations = 0;          ///< must stay 0
  int64_t red_visits_in_green_area = 0;
  int64_t red_visits_in_yellow_area = 0;
  int64_t events_processed = 0;

  bool operator==(const ReplicationResult&) const = default;
};

}  // namespace edsim
