#include "edsim/report_io.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "edsim/experiment.hpp"

namespace edsim {

using nlohmann::ordered_json;

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) throw std::runtime_error("double formatting failed");
  return std::string(buf, end);
}

namespace {

ordered_json ci_json(const MeanCI& ci) {
  ordered_json j;
  j["mean"] = ci.mean;
  if (ci.ci_halfwidth) {
    j["ci_halfwidth"] = *ci.ci_halfwidth;
  } else {
    j["ci_halfwidth"] = nullptr;
  }
  return j;
}

ordered_json metric_json(const TagMetricStat& s) {
  ordered_json j;
  if (!s.present()) {
    j["mean"] = nullptr;
    j["ci_halfwidth"] = nullptr;
    j["replications_with_data"] = 0;
    j["mean_patients_per_replication"] = 0.0;
    return j;
  }
  j["mean"] = s.mean;
  if (s.ci_halfwidth) {
    j["ci_halfwidth"] = *s.ci_halfwidth;
  } else {
    j["ci_halfwidth"] = nullptr;
  }
  j["replications_with_data"] = s.reps_with_data;
  j["mean_patients_per_replication"] = s.mean_patient_count;
  return j;
}

std::string csv_double(std::optional<double> v) { return v ? format_double(*v) : std::string(); }

}  // namespace

ordered_json report_to_json(const Report& report) {
  ordered_json j;
  j["schema_version"] = report.schema_version;
  j["scenario"] = report.scenario;
  j["seed"] = report.seed;
  j["replications"] = report.replications;
  j["length_days"] = report.length_days;
  j["warmup_hours"] = report.warmup_hours;
  j["utilization_time_weighted"] = report.utilization_time_weighted;
  j["priority_violations"] = report.priority_violations;

  ordered_json kpis;
  for (Tag t : kAllTags) {
    std::size_t i = static_cast<std::size_t>(t);
    ordered_json per_tag;
    per_tag["waiting_time"] = metric_json(report.waiting_time[i]);
    per_tag["throughput_time"] = metric_json(report.throughput_time[i]);
    kpis[tag_name(t)] = per_tag;
  }
  j["kpis"] = kpis;

  ordered_json counts;
  for (Tag t : kAllTags) {
    std::size_t i = static_cast<std::size_t>(t);
    ordered_json per_tag;
    per_tag["arrivals"] = ci_json(report.arrivals[i]);
    per_tag["lwbs"] = ci_json(report.lwbs[i]);
    per_tag["diverted"] = ci_json(report.diverted[i]);
    per_tag["censored"] = ci_json(report.censored[i]);
    counts[tag_name(t)] = per_tag;
  }
  j["counts"] = counts;

  ordered_json outcomes;
  for (Tag t : kAllTags) {
    std::size_t i = static_cast<std::size_t>(t);
    ordered_json per_tag;
    for (int o = 0; o < kOutcomeCount; ++o) {
      per_tag[outcome_code(static_cast<Outcome>(o))] =
          ci_json(report.outcome_counts[i][static_cast<std::size_t>(o)]);
    }
    outcomes[tag_name(t)] = per_tag;
  }
  j["outcome_counts"] = outcomes;

  ordered_json overflow;
  overflow["red_visits_in_green_area"] = ci_json(report.red_visits_in_green_area);
  overflow["red_visits_in_yellow_area"] = ci_json(report.red_visits_in_yellow_area);
  j["red_overflow"] = overflow;

  ordered_json util;
  for (Area a : kAllAreas) {
    util[area_name(a)] = report.utilization[static_cast<std::size_t>(a)];
  }
  j["utilization"] = util;
  j["first_measured_day"] = report.first_measured_day;

  ordered_json by_day;
  for (std::size_t d = 0; d < report.utilization_by_day.size(); ++d) {
    ordered_json day_j;
    for (Area a : kAllAreas) {
      day_j[area_name(a)] = report.utilization_by_day[d][static_cast<std::size_t>(a)];
    }
    by_day[std::to_string(report.first_measured_day + static_cast<int>(d))] = day_j;
  }
  j["utilization_by_day"] = by_day;
  return j;
}

std::string kpis_csv(const Report& report) {
  std::ostringstream out;
  out << "scenario,tag,metric,mean,ci_halfwidth,replications,mean_patients_per_replication\n";
  auto metric_row = [&](Tag t, const char* metric, const TagMetricStat& s) {
    out << report.scenario << ',' << tag_name(t) << ',' << metric << ',';
    if (s.present()) {
      out << format_double(s.mean) << ',' << csv_double(s.ci_halfwidth) << ',' << s.reps_with_data
          << ',' << format_double(s.mean_patient_count);
    } else {
      out << ",,0,";
    }
    out << '\n';
  };
  auto count_row = [&](Tag t, const char* metric, const MeanCI& ci) {
    out << report.scenario << ',' << tag_name(t) << ',' << metric << ','
        << format_double(ci.mean) << ',' << csv_double(ci.ci_halfwidth) << ',' << ci.n << ",\n";
  };
  for (Tag t : kAllTags) {
    std::size_t i = static_cast<std::size_t>(t);
    metric_row(t, "waiting_time_min", report.waiting_time[i]);
    metric_row(t, "throughput_time_min", report.throughput_time[i]);
    count_row(t, "arrivals", report.arrivals[i]);
    count_row(t, "lwbs", report.lwbs[i]);
    count_row(t, "diverted", report.diverted[i]);
    count_row(t, "censored", report.censored[i]);
  }
  return out.str();
}

std::string outcomes_csv(const Report& report) {
  std::ostringstream out;
  out << "scenario,tag,outcome,mean_count,ci_halfwidth\n";
  for (Tag t : kAllTags) {
    for (int o = 0; o < kOutcomeCount; ++o) {
      const MeanCI& ci =
          report.outcome_counts[static_cast<std::size_t>(t)][static_cast<std::size_t>(o)];
      out << report.scenario << ',' << tag_name(t) << ',' << outcome_code(static_cast<Outcome>(o))
          << ',' << format_double(ci.mean) << ',' << csv_double(ci.ci_halfwidth) << '\n';
    }
  }
  return out.str();
}

std::string utilization_csv(const Report& report) {
  std::ostringstream out;
  out << "scenario,day,area,hour,utilization\n";
  for (Area a : kAllAreas) {
    for (int h = 0; h < 24; ++h) {
      out << report.scenario << ",all," << area_name(a) << ',' << h << ','
          << format_double(report.utilization[static_cast<std::size_t>(a)][static_cast<std::size_t>(h)])
          << '\n';
    }
  }
  for (std::size_t d = 0; d < report.utilization_by_day.size(); ++d) {
    int day = report.first_measured_day + static_cast<int>(d);
    for (Area a : kAllAreas) {
      for (int h = 0; h < 24; ++h) {
        out << report.scenario << ',' << day << ',' << area_name(a) << ',' << h << ','
            << format_double(
                   report.utilization_by_day[d][static_cast<std::size_t>(a)][static_cast<std::size_t>(h)])
            << '\n';
      }
    }
  }
  return out.str();
}

std::string patients_csv(const std::vector<ReplicationResult>& results, double warmup_minutes) {
  std::ostringstream out;
  out << "replication,id,triage_tag,discharge_tag,fate,outcome,via_ambulance,diverted,censored,"
         "area,arrival,triage_end,visit_start,visit_end,workup_end,departure,waiting,throughput\n";
  for (const ReplicationResult& rep : results) {
    for (const PatientRecord& p : rep.patients) {
      if (p.arrival_time < warmup_minutes) continue;
      out << rep.replication_index << ',' << p.id << ',' << tag_name(p.triage_tag) << ','
          << (p.discharge_tag ? tag_name(*p.discharge_tag) : "") << ',' << fate_name(p.fate) << ','
          << (p.outcome ? outcome_code(*p.outcome) : "") << ',' << (p.via_ambulance ? 1 : 0) << ','
          << (p.diverted ? 1 : 0) << ',' << (p.censored ? 1 : 0) << ','
          << (p.visit_area ? area_name(*p.visit_area) : "") << ',' << format_double(p.arrival_time)
          << ',' << csv_double(p.triage_end_time) << ',' << csv_double(p.visit_start_time) << ','
          << csv_double(p.visit_end_time) << ',' << csv_double(p.workup_end_time) << ','
          << csv_double(p.departure_time) << ',' << csv_double(p.waiting_time()) << ','
          << csv_double(p.throughput_time()) << '\n';
    }
  }
  return out.str();
}

void write_report_files(const Report& report, const std::vector<ReplicationResult>& results,
                        const ExperimentConfig& config) {
  namespace fs = std::filesystem;
  fs::path dir(config.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw std::runtime_error("cannot create output directory " + dir.string() + ": " +
                             ec.message());
  }
  auto write = [&](const char* name, const std::string& content) {
    fs::path path = dir / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
  };
  write("report.json", report_to_json(report).dump(2) + "\n");
  write("kpis.csv", kpis_csv(report));
  write("outcomes.csv", outcomes_csv(report));
  write("utilization.csv", utilization_csv(report));
  if (config.emit_patients) {
    double warmup_minutes = config.scenario.plan.warmup_hours * 60.0;
    write("patients.csv", patients_csv(results, warmup_minutes));
  }
}

}  // namespace edsim
