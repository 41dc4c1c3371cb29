#include "edsim/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace edsim {

std::vector<PatientRecord> truncate_warmup(const std::vector<PatientRecord>& patients,
                                           double warmup_minutes) {
  std::vector<PatientRecord> kept;
  kept.reserve(patients.size());
  for (const PatientRecord& p : patients) {
    if (p.arrival_time >= warmup_minutes) kept.push_back(p);
  }
  return kept;
}

namespace {

constexpr std::size_t idx(Tag t) { return static_cast<std::size_t>(t); }
constexpr std::size_t idx(Area a) { return static_cast<std::size_t>(a); }
constexpr std::size_t idx(Outcome o) { return static_cast<std::size_t>(o); }

/// One replication reduced to the numbers the report aggregates.
struct RepSummary {
  std::array<double, kTagCount> wt_sum{};
  std::array<std::size_t, kTagCount> wt_n{};
  std::array<double, kTagCount> tt_sum{};
  std::array<std::size_t, kTagCount> tt_n{};
  std::array<std::array<double, kOutcomeCount>, kTagCount> outcome_counts{};
  std::array<double, kTagCount> arrivals{};
  std::array<double, kTagCount> lwbs{};
  std::array<double, kTagCount> diverted{};
  std::array<double, kTagCount> censored{};
  double red_green = 0.0;
  double red_yellow = 0.0;
};

RepSummary summarize(const ReplicationResult& rep, double warmup_minutes) {
  RepSummary s;
  s.red_green = static_cast<double>(rep.red_visits_in_green_area);
  s.red_yellow = static_cast<double>(rep.red_visits_in_yellow_area);
  for (const PatientRecord& p : rep.patients) {
    if (p.arrival_time < warmup_minutes) continue;
    s.arrivals[idx(p.triage_tag)] += 1.0;
    if (p.diverted) {
      s.diverted[idx(p.triage_tag)] += 1.0;
      continue;
    }
    if (p.censored) {
      s.censored[idx(p.triage_tag)] += 1.0;
      continue;
    }
    if (p.fate == Fate::LeftWithoutBeingSeen) {
      s.lwbs[idx(p.triage_tag)] += 1.0;
    } else {
      if (auto wt = p.waiting_time()) {
        s.wt_sum[idx(p.triage_tag)] += *wt;
        s.wt_n[idx(p.triage_tag)] += 1;
      }
      if (auto tt = p.throughput_time()) {
        s.tt_sum[idx(p.triage_tag)] += *tt;
        s.tt_n[idx(p.triage_tag)] += 1;
      }
    }
    if (p.discharge_tag && p.outcome) {
      s.outcome_counts[idx(*p.discharge_tag)][idx(*p.outcome)] += 1.0;
    }
  }
  return s;
}

TagMetricStat collapse_metric(const std::vector<RepSummary>& sums,
                              std::array<double, kTagCount> RepSummary::*sum_member,
                              std::array<std::size_t, kTagCount> RepSummary::*n_member,
                              std::size_t tag) {
  std::vector<double> means;
  double patients = 0.0;
  for (const RepSummary& s : sums) {
    std::size_t n = (s.*n_member)[tag];
    if (n == 0) continue;
    means.push_back((s.*sum_member)[tag] / static_cast<double>(n));
    patients += static_cast<double>(n);
  }
  TagMetricStat out;
  out.reps_with_data = means.size();
  if (!means.empty()) {
    MeanCI ci = mean_ci_95(means);
    out.mean = ci.mean;
    out.ci_halfwidth = ci.ci_halfwidth;
    out.mean_patient_count = patients / static_cast<double>(means.size());
  }
  return out;
}

MeanCI collapse_counts(const std::vector<RepSummary>& sums,
                       std::array<double, kTagCount> RepSummary::*member, std::size_t tag) {
  std::vector<double> values;
  values.reserve(sums.size());
  for (const RepSummary& s : sums) values.push_back((s.*member)[tag]);
  return mean_ci_95(values);
}

/// Total minutes of seat occupancy inside [lo, hi) contributed by visits.
/// Reassessments hold no seat, so patient visit intervals are the full story.
double busy_minutes_in_window(const std::vector<PatientRecord>& patients, Area area, double lo,
                              double hi) {
  double total = 0.0;
  for (const PatientRecord& p : patients) {
    if (!p.visit_area || *p.visit_area != area) continue;
    if (!p.visit_start_time || !p.visit_end_time) continue;
    double a = std::max(*p.visit_start_time, lo);
    double b = std::min(*p.visit_end_time, hi);
    if (b > a) total += b - a;
  }
  return total;
}

}  // namespace

Report aggregate(const std::vector<ReplicationResult>& results, const ReplicationSetup& setup,
                 const AggregationOptions& options) {
  Report report;
  report.scenario = options.scenario;
  report.seed = options.seed;
  report.replications = static_cast<int>(results.size());
  report.length_days = options.length_days;
  report.warmup_hours = options.warmup_hours;
  report.utilization_time_weighted = options.utilization_time_weighted;

  std::vector<const ReplicationResult*> ordered;
  ordered.reserve(results.size());
  for (const ReplicationResult& rep : results) ordered.push_back(&rep);
  std::sort(ordered.begin(), ordered.end(), [](const ReplicationResult* a,
                                               const ReplicationResult* b) {
    return a->replication_index < b->replication_index;
  });

  std::vector<RepSummary> sums;
  sums.reserve(results.size());
  for (const ReplicationResult* rep : ordered) {
    sums.push_back(summarize(*rep, setup.warmup_minutes));
    report.priority_violations += rep->priority_violations;
  }

  for (std::size_t t = 0; t < kTagCount; ++t) {
    report.waiting_time[t] = collapse_metric(sums, &RepSummary::wt_sum, &RepSummary::wt_n, t);
    report.throughput_time[t] = collapse_metric(sums, &RepSummary::tt_sum, &RepSummary::tt_n, t);
    report.arrivals[t] = collapse_counts(sums, &RepSummary::arrivals, t);
    report.lwbs[t] = collapse_counts(sums, &RepSummary::lwbs, t);
    report.diverted[t] = collapse_counts(sums, &RepSummary::diverted, t);
    report.censored[t] = collapse_counts(sums, &RepSummary::censored, t);
    for (std::size_t o = 0; o < kOutcomeCount; ++o) {
      std::vector<double> values;
      values.reserve(sums.size());
      for (const RepSummary& s : sums) values.push_back(s.outcome_counts[t][o]);
      report.outcome_counts[t][o] = mean_ci_95(values);
    }
  }

  {
    std::vector<double> rg, ry;
    for (const RepSummary& s : sums) {
      rg.push_back(s.red_green);
      ry.push_back(s.red_yellow);
    }
    if (!rg.empty()) {
      report.red_visits_in_green_area = mean_ci_95(rg);
      report.red_visits_in_yellow_area = mean_ci_95(ry);
    }
  }

  report.first_measured_day = day_index_of(setup.warmup_minutes) + 1;
  int last_day = day_index_of(setup.horizon_minutes - 1.0) + 1;
  int n_days = std::max(0, last_day - report.first_measured_day + 1);
  report.utilization_by_day.assign(static_cast<std::size_t>(n_days), {});

  std::array<std::array<double, 24>, kAreaCount> sum_all{};
  std::array<std::array<double, 24>, kAreaCount> n_all{};
  std::vector<std::array<std::array<double, 24>, kAreaCount>> sum_day(
      static_cast<std::size_t>(n_days));
  std::vector<std::array<std::array<double, 24>, kAreaCount>> n_day(
      static_cast<std::size_t>(n_days));

  auto accumulate = [&](Area area, int day_number, int hour, double value) {
    std::size_t d = static_cast<std::size_t>(day_number - report.first_measured_day);
    if (d >= static_cast<std::size_t>(n_days) || hour < 0 || hour > 23) return;
    std::size_t h = static_cast<std::size_t>(hour);
    sum_all[idx(area)][h] += value;
    n_all[idx(area)][h] += 1.0;
    sum_day[d][idx(area)][h] += value;
    n_day[d][idx(area)][h] += 1.0;
  };

  if (options.utilization_time_weighted) {
    for (const ReplicationResult* rep : ordered) {
      for (int day = report.first_measured_day; day <= last_day; ++day) {
        for (int hour = 0; hour < 24; ++hour) {
          double lo = (static_cast<double>(day - 1)) * kMinutesPerDay + hour * 60.0;
          double hi = lo + 60.0;
          lo = std::max(lo, setup.warmup_minutes);
          hi = std::min(hi, setup.horizon_minutes);
          if (hi <= lo) continue;
          for (Area a : kAllAreas) {
            int cap = scheduled_area_capacity(setup, a, lo);
            double value = 0.0;
            if (cap > 0) {
              double busy = busy_minutes_in_window(rep->patients, a, lo, hi);
              value = std::min(1.0, busy / (cap * (hi - lo)));
            }
            accumulate(a, day, hour, value);
          }
        }
      }
    }
  } else {
    for (const ReplicationResult* rep : ordered) {
      for (const UtilizationSample& s : rep->samples) {
        accumulate(s.area, s.day_number, s.hour, s.value());
      }
    }
  }

  for (std::size_t a = 0; a < kAreaCount; ++a) {
    for (std::size_t h = 0; h < 24; ++h) {
      report.utilization[a][h] = n_all[a][h] > 0 ? sum_all[a][h] / n_all[a][h] : 0.0;
      for (std::size_t d = 0; d < static_cast<std::size_t>(n_days); ++d) {
        report.utilization_by_day[d][a][h] = n_day[d][a][h] > 0 ? sum_day[d][a][h] / n_day[d][a][h] : 0.0;
      }
    }
  }

  return report;
}

}  // namespace edsim
