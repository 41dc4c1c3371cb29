#pragma once

#include <optional>
#include <string>

#include "edsim/flow_params.hpp"
#include "edsim/metrics.hpp"
#include "edsim/scenario.hpp"

namespace edsim {

/// One fully-resolved experiment: scenario, model overrides, execution and
/// output settings. Every field has a usable default; parse_config_* and
/// the command-line layer only override pieces.
struct ExperimentConfig {
  ScenarioConfig scenario;

  /// Baseline arrival profile/mix overrides; the scenario transforms apply
  /// on top of these.
  std::optional<HourlyProfile> rate_profile;
  std::optional<TagMix> tag_mix;

  FlowParams flow;
  AreaCapacities areas;

  int workers = 1;  ///< 0 = one per core
  std::string out_dir = "out";
  bool emit_patients = false;
  bool utilization_time_weighted = false;
};

ExperimentConfig default_experiment_config();

/// Strict parse: schema_version required, unknown keys rejected, every
/// diagnostic names the offending key (dotted path with indices).
ExperimentConfig parse_config_file(const std::string& path);
ExperimentConfig parse_config_text(const std::string& text, const std::string& origin);

/// Command-line overrides applied on top of a config file (or defaults).
/// A --scenario flag replaces the whole scenario section with that preset;
/// the numeric flags then override single replication-plan fields.
struct CliOverrides {
  std::optional<std::string> scenario;
  std::optional<int> reps;
  std::optional<int> days;
  std::optional<double> warmup_hours;
  std::optional<uint64_t> seed;
  std::optional<int> workers;
  std::optional<std::string> out_dir;
  std::optional<bool> emit_patients;
};

ExperimentConfig resolve_config(const std::optional<std::string>& config_path,
                                const CliOverrides& overrides);

/// Setup for this experiment: overridden baseline, scenario transforms
/// applied, horizon sized to the replication plan.
ReplicationSetup build_setup(const ExperimentConfig& config);

/// Runs the replication batch and aggregates. Pure compute, no I/O.
Report run_experiment(const ExperimentConfig& config);

/// run_experiment plus report.json and the CSV tables under out_dir.
/// Returns the report. Output bytes depend only on (config, seed).
Report run_experiment_to_files(const ExperimentConfig& config);

}  // namespace edsim
