#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "edsim/metrics.hpp"

namespace edsim {

struct ExperimentConfig;

/// Shortest decimal string that round-trips the double (to_chars).
std::string format_double(double v);

nlohmann::ordered_json report_to_json(const Report& report);

std::string kpis_csv(const Report& report);
std::string outcomes_csv(const Report& report);
std::string utilization_csv(const Report& report);
std::string patients_csv(const std::vector<ReplicationResult>& results, double warmup_minutes);

/// Writes report.json, kpis.csv, outcomes.csv, utilization.csv and, when
/// enabled, patients.csv under config.out_dir (created if missing).
void write_report_files(const Report& report, const std::vector<ReplicationResult>& results,
                        const ExperimentConfig& config);

}  // namespace edsim
