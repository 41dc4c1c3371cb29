// End-to-end acceptance battery. Each criterion prints one PASS/FAIL line;
// the exit code is the number of failed criteria. Failure details go to
// stderr.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "edsim/arrivals.hpp"
#include "edsim/defaults.hpp"
#include "edsim/distributions.hpp"
#include "edsim/experiment.hpp"
#include "edsim/metrics.hpp"
#include "edsim/rng.hpp"
#include "edsim/runner.hpp"
#include "edsim/scenario.hpp"
#include "edsim/stats.hpp"

using namespace edsim;

namespace {

int failures = 0;

void criterion(int n, const char* name, bool pass) {
  std::printf("criterion %d (%s): %s\n", n, name, pass ? "PASS" : "FAIL");
  if (!pass) ++failures;
}

void note(const std::string& text) { std::fprintf(stderr, "  %s\n", text.c_str()); }

struct Run {
  Report report;
  std::vector<ReplicationResult> results;
};

Run run_preset(const std::string& name, uint64_t seed, int count = 0, int days = 0) {
  ScenarioConfig config = scenario_preset(name);
  config.plan.seed = seed;
  if (count > 0) config.plan.count = count;
  if (days > 0) config.plan.length_days = days;
  ReplicationSetup setup = make_setup(config);
  Run run;
  run.results = run_batch(setup, seed, config.plan.count, 0);
  run.report = aggregate(run.results, setup,
                         {config.name, seed, config.plan.length_days,
                          config.plan.warmup_hours, false});
  return run;
}

double phi_pdf(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * 3.14159265358979323846); }

/// Closed-form mean of each duration family as implemented, including the
/// clamp applied to normal draws at or below zero.
double analytic_mean(const DistributionSpec& spec) {
  switch (spec.family()) {
    case DistFamily::Lognormal: return spec.a();
    case DistFamily::Exponential: return spec.a();
    case DistFamily::Constant: return spec.a();
    case DistFamily::Uniform: return 0.5 * (spec.a() + spec.b());
    case DistFamily::ShiftedGamma: return spec.a() + spec.b() * spec.c();
    case DistFamily::Weibull: return spec.a() * std::tgamma(1.0 + 1.0 / spec.b());
    case DistFamily::Normal: {
      double mu = spec.a(), sd = spec.b(), floor = spec.c();
      double alpha = -mu / sd;
      double p_clamped = normal_cdf(alpha);
      return floor * p_clamped + mu * (1.0 - p_clamped) + sd * phi_pdf(alpha);
    }
  }
  return 0.0;
}

/// Longest run of consecutive hours at or above the load threshold.
int longest_saturated_run(const std::array<double, 24>& hours, double threshold) {
  int best = 0, current = 0;
  for (double v : hours) {
    current = v >= threshold ? current + 1 : 0;
    best = std::max(best, current);
  }
  return best;
}

int64_t night_visits_in_yellow_area(const std::vector<ReplicationResult>& results) {
  int64_t count = 0;
  for (const ReplicationResult& rep : results) {
    for (const PatientRecord& p : rep.patients) {
      if (p.visit_area != Area::YellowArea || !p.visit_start_time) continue;
      double h = hour_of_day(*p.visit_start_time);
      if (h >= 21.0 || h < 8.0) ++count;
    }
  }
  return count;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main() {
  // --- Criteria 1 and 2: baseline outcome counts and triage mix ----------
  auto t_start = std::chrono::steady_clock::now();
  Run baseline = run_preset("baseline", 1);
  double baseline_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();

  std::array<std::array<double, kOutcomeCount>, kTagCount> target{};
  target[0][0] = 120.53;  target[0][1] = 39.41;                          // white
  target[0][5] = 3.15;    target[0][6] = 7.06;
  target[1][0] = 1019.74; target[1][1] = 489.85; target[1][2] = 28.83;   // green
  target[1][4] = 18.14;   target[1][5] = 16.93;  target[1][6] = 23.63;
  target[2][0] = 23.35;   target[2][1] = 21.45;  target[2][2] = 179.18;  // yellow
  target[2][3] = 3.79;    target[2][4] = 10.24;  target[2][5] = 2.09;
  target[2][6] = 1.64;
  target[3][2] = 13.51;   target[3][3] = 4.18;   target[3][7] = 2.16;    // red

  bool counts_ok = true;
  for (int t = 0; t < kTagCount; ++t) {
    for (int o = 0; o < kOutcomeCount; ++o) {
      double want = target[t][o];
      double band = want > 10.0 ? 0.05 * want : 1.0;
      double got = baseline.report.outcome_counts[t][o].mean;
      if (std::abs(got - want) > band) {
        counts_ok = false;
        note("outcome " + std::string(tag_name(Tag(t))) + "-" +
               outcome_code(Outcome(o)) + ": got " + std::to_string(got) +
               ", want " + std::to_string(want) + " +- " + std::to_string(band));
      }
    }
  }
  if (baseline_seconds >= 120.0) {
    counts_ok = false;
    note("baseline run took " + std::to_string(baseline_seconds) + " s, budget 120 s");
  }
  criterion(1, "baseline outcome counts", counts_ok);

  std::array<double, kTagCount> mix_target = {0.0728, 0.7077, 0.2121, 0.0074};
  double total_arrivals = 0.0;
  std::array<double, kTagCount> tag_arrivals{};
  for (int t = 0; t < kTagCount; ++t) {
    tag_arrivals[t] = baseline.report.arrivals[t].mean * baseline.report.replications;
    total_arrivals += tag_arrivals[t];
  }
  bool mix_ok = true;
  for (int t = 0; t < kTagCount; ++t) {
    double share = tag_arrivals[t] / total_arrivals;
    double se = std::sqrt(mix_target[t] * (1.0 - mix_target[t]) / total_arrivals);
    if (std::abs(share - mix_target[t]) >= 3.0 * se) {
      mix_ok = false;
      note("share " + std::string(tag_name(Tag(t))) + ": got " + std::to_string(share) +
             ", want " + std::to_string(mix_target[t]) + " +- " + std::to_string(3.0 * se));
    }
  }
  criterion(2, "triage tag shares", mix_ok);

  // --- Criterion 3: duration distribution means --------------------------
  FlowParams flow = defaults::flow_params();
  bool means_ok = true;
  int dist_index = 0;
  for (const auto* table : {&flow.visit_duration, &flow.exam_duration}) {
    for (const DistributionSpec& spec : *table) {
      RngStream rng(9001, uint64_t(dist_index++), RngPurpose::VisitTimes);
      const int n = 1'000'000;
      double sum = 0.0;
      for (int i = 0; i < n; ++i) sum += spec.sample(rng);
      double want = analytic_mean(spec);
      double got = sum / n;
      if (std::abs(got - want) > 0.01 * want) {
        means_ok = false;
        note(spec.describe() + ": sample mean " + std::to_string(got) + ", analytic " +
               std::to_string(want));
      }
    }
  }
  criterion(3, "duration distribution means", means_ok);

  // --- Criterion 4: arrival process ---------------------------------------
  bool nhpp_ok = true;
  {
    const int days = 10'000;
    RatePlan plan = RatePlan::repeat(defaults::hourly_profile(), defaults::tag_mix(), days);
    RngStream rng(2024, 0, RngPurpose::Arrivals);
    ArrivalGenerator gen(plan, rng);
    std::array<int64_t, 24> slot_counts{};
    while (std::optional<double> t = gen.next()) {
      slot_counts[int(hour_of_day(*t))]++;
    }
    for (int h = 0; h < 24; ++h) {
      double expected = defaults::hourly_profile()[h] * days;
      double sigma = std::sqrt(expected);
      if (std::abs(slot_counts[h] - expected) > 3.0 * sigma) {
        nhpp_ok = false;
        note("slot " + std::to_string(h) + ": got " + std::to_string(slot_counts[h]) +
               ", expected " + std::to_string(expected) + " +- " + std::to_string(3.0 * sigma));
      }
    }

    HourlyProfile flat{};
    flat.fill(3.0);
    RatePlan constant = RatePlan::repeat(flat, defaults::tag_mix(), 300);
    RngStream flat_rng(2025, 0, RngPurpose::Arrivals);
    ArrivalGenerator flat_gen(constant, flat_rng);
    std::vector<double> gaps;
    double prev = 0.0;
    while (std::optional<double> t = flat_gen.next()) {
      gaps.push_back(*t - prev);
      prev = *t;
    }
    double stat = ks_statistic_exponential(gaps, 20.0);
    double cutoff = ks_critical_value(0.01, gaps.size());
    if (stat >= cutoff) {
      nhpp_ok = false;
      note("KS statistic " + std::to_string(stat) + " over " + std::to_string(gaps.size()) +
             " gaps, cutoff " + std::to_string(cutoff));
    }
  }
  criterion(4, "arrival process calibration", nhpp_ok);

  // --- Criteria 5 and 6: the surge ladder ---------------------------------
  const uint64_t surge_seed = 104;
  std::vector<Run> ladder;
  ladder.push_back(run_preset("baseline", surge_seed, 10, 5));
  for (const char* name : {"extreme100", "extreme200", "extreme300", "extreme400"}) {
    ladder.push_back(run_preset(name, surge_seed));
  }

  bool red_ok = true;
  int64_t violations = baseline.report.priority_violations;
  for (const Run& run : ladder) violations += run.report.priority_violations;
  for (int i = 0; i < 4; ++i) {  // up to and including the 300% surge
    double wt = ladder[i].report.waiting_time[std::size_t(Tag::Red)].mean;
    if (!(wt < 5.0)) {
      red_ok = false;
      note("red waiting time " + std::to_string(wt) + " min in ladder run " +
             std::to_string(i));
    }
  }
  if (violations != 0) {
    red_ok = false;
    note("priority violations observed: " + std::to_string(violations));
  }
  criterion(5, "red patients never wait", red_ok);

  bool surge_ok = true;
  for (Tag t : {Tag::White, Tag::Green}) {
    for (std::size_t i = 1; i < ladder.size(); ++i) {
      double prev = ladder[i - 1].report.waiting_time[std::size_t(t)].mean;
      double next = ladder[i].report.waiting_time[std::size_t(t)].mean;
      if (!(next > prev)) {
        surge_ok = false;
        note(std::string(tag_name(t)) + " waiting time not increasing at step " +
               std::to_string(i) + ": " + std::to_string(prev) + " -> " + std::to_string(next));
      }
    }
  }
  for (std::size_t i = 1; i < ladder.size(); ++i) {
    const Report& report = ladder[i].report;
    if (report.first_measured_day != 2 || report.utilization_by_day.empty()) {
      surge_ok = false;
      note("surge day series missing in ladder run " + std::to_string(i));
      continue;
    }
    const auto& surge_day = report.utilization_by_day.front();
    int run = longest_saturated_run(surge_day[std::size_t(Area::GreenArea)], 0.99);
    if (run < 3) {
      surge_ok = false;
      note("green area saturated for only " + std::to_string(run) +
             " consecutive hours in ladder run " + std::to_string(i));
    }
  }
  criterion(6, "surge degrades low-acuity waits", surge_ok);

  // --- Criterion 7: the mass-casualty plan --------------------------------
  Run a1 = run_preset("peimaf-a1", surge_seed);
  Run a1a2 = run_preset("peimaf-a1a2", surge_seed);
  bool peimaf_ok = true;
  for (Tag t : {Tag::Red, Tag::Yellow}) {
    double before = a1.report.waiting_time[std::size_t(t)].mean;
    double after = a1a2.report.waiting_time[std::size_t(t)].mean;
    if (!(after < before)) {
      peimaf_ok = false;
      note(std::string(tag_name(t)) + " waiting time did not drop: " +
             std::to_string(before) + " -> " + std::to_string(after));
    }
  }
  if (!(a1a2.report.red_visits_in_green_area.mean > 0.0) ||
      !(a1a2.report.red_visits_in_yellow_area.mean > 0.0)) {
    peimaf_ok = false;
    note("red overflow means: green " +
           std::to_string(a1a2.report.red_visits_in_green_area.mean) + ", yellow " +
           std::to_string(a1a2.report.red_visits_in_yellow_area.mean));
  }
  criterion(7, "emergency plan relieves urgent waits", peimaf_ok);

  // --- Criterion 8: night closure of the yellow area ----------------------
  int64_t night_visits = night_visits_in_yellow_area(baseline.results);
  for (const Run& run : ladder) night_visits += night_visits_in_yellow_area(run.results);
  if (night_visits != 0) {
    note("yellow-area visits started at night: " + std::to_string(night_visits));
  }
  criterion(8, "yellow area closed at night", night_visits == 0);

  // --- Criterion 9: determinism and interval arithmetic -------------------
  bool determinism_ok = true;
  {
    ExperimentConfig config = default_experiment_config();
    config.scenario = scenario_preset("extreme100");
    config.scenario.plan.count = 4;
    config.scenario.plan.length_days = 2;
    config.emit_patients = true;
    config.workers = 1;
    config.out_dir = "/tmp/edsim_acceptance_serial";
    run_experiment_to_files(config);
    config.workers = 2;
    config.out_dir = "/tmp/edsim_acceptance_parallel";
    run_experiment_to_files(config);
    for (const char* name :
         {"report.json", "kpis.csv", "outcomes.csv", "utilization.csv", "patients.csv"}) {
      std::string a = slurp(std::string("/tmp/edsim_acceptance_serial/") + name);
      std::string b = slurp(std::string("/tmp/edsim_acceptance_parallel/") + name);
      if (a.empty() || a != b) {
        determinism_ok = false;
        note(std::string(name) + " differs between serial and parallel runs");
      }
    }

    double t2_closed_form = 0.95 * std::sqrt(2.0 / (1.0 - 0.95 * 0.95));
    if (std::abs(student_t_975(2) - t2_closed_form) > 1e-9) {
      determinism_ok = false;
      note("t quantile at 2 dof: got " + std::to_string(student_t_975(2)) + ", want " +
             std::to_string(t2_closed_form));
    }
    MeanCI ci = mean_ci_95({10.0, 12.0, 14.0});
    double expected_halfwidth = t2_closed_form * 2.0 / std::sqrt(3.0);
    if (!ci.ci_halfwidth || std::abs(*ci.ci_halfwidth - expected_halfwidth) > 1e-9) {
      determinism_ok = false;
      note("interval halfwidth mismatch on fixed sample");
    }
  }
  criterion(9, "bitwise reproducibility", determinism_ok);

  return failures;
}
