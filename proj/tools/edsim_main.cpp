#include <cstdio>
#include <exception>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "edsim/experiment.hpp"
#include "edsim/report_io.hpp"

namespace {

std::string join(const std::vector<std::string>& names) {
  std::string out;
  for (const std::string& n : names) {
    if (!out.empty()) out += ", ";
    out += n;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Emergency department discrete-event simulator"};

  std::optional<std::string> config_path;
  edsim::CliOverrides overrides;
  bool emit_patients = false;
  bool quiet = false;

  app.add_option("--config", config_path, "JSON experiment config; flags override its values");
  app.add_option("--scenario", overrides.scenario,
                 "Scenario preset (" + join(edsim::scenario_preset_names()) +
                     "); replaces the config file's scenario section");
  app.add_option("--reps", overrides.reps, "Replication count");
  app.add_option("--days", overrides.days, "Measured days per replication (excludes warm-up)");
  app.add_option("--warmup-hours", overrides.warmup_hours, "Warm-up period discarded from stats");
  app.add_option("--seed", overrides.seed, "Master seed; replications derive their own streams");
  app.add_option("--workers", overrides.workers, "Parallel replication workers; 0 = per core");
  app.add_option("--out", overrides.out_dir, "Output directory for report.json and CSV tables");
  app.add_flag("--emit-patients", emit_patients, "Also write the per-patient table patients.csv");
  app.add_flag("--quiet", quiet, "Suppress the stdout summary");

  CLI11_PARSE(app, argc, argv);
  if (emit_patients) overrides.emit_patients = true;

  try {
    edsim::ExperimentConfig config = edsim::resolve_config(config_path, overrides);
    edsim::Report report = edsim::run_experiment_to_files(config);
    if (!quiet) {
      std::printf("scenario %s: %d replications x %d days, seed %llu\n", report.scenario.c_str(),
                  report.replications, report.length_days,
                  static_cast<unsigned long long>(report.seed));
      for (edsim::Tag t : edsim::kAllTags) {
        const auto& wt = report.waiting_time[static_cast<std::size_t>(t)];
        const auto& tt = report.throughput_time[static_cast<std::size_t>(t)];
        if (!wt.present()) {
          std::printf("  %-6s no completed patients\n", edsim::tag_name(t));
          continue;
        }
        std::printf("  %-6s WT %8.2f min   TT %8.2f min   (%.1f patients/rep)\n",
                    edsim::tag_name(t), wt.mean, tt.mean, wt.mean_patient_count);
      }
      std::printf("report written to %s\n", config.out_dir.c_str());
    }
    return 0;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
