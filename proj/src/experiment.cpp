#include "edsim/experiment.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "edsim/defaults.hpp"
#include "edsim/report_io.hpp"
#include "edsim/runner.hpp"

namespace edsim {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw std::invalid_argument("config error: " + path + " " + what);
}

/// Tracks which keys of one JSON object were consumed so leftovers can be
/// rejected by name.
class StrictObject {
 public:
  StrictObject(const json& node, std::string path) : node_(node), path_(std::move(path)) {
    if (!node_.is_object()) fail(path_, "must be an object");
  }

  const json* find(const std::string& key) {
    seen_.insert(key);
    auto it = node_.find(key);
    return it == node_.end() ? nullptr : &*it;
  }

  const json& require(const std::string& key) {
    const json* j = find(key);
    if (!j) fail(path_, "is missing required key \"" + key + "\"");
    return *j;
  }

  void reject_unknown() const {
    for (auto it = node_.begin(); it != node_.end(); ++it) {
      if (!seen_.count(it.key())) fail(path_ + "." + it.key(), "is not a recognized key");
    }
  }

  const std::string& path() const { return path_; }

 private:
  const json& node_;
  std::string path_;
  std::set<std::string> seen_;
};

double as_double(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "must be a number");
  return j.get<double>();
}

int as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "must be an integer");
  return j.get<int>();
}

uint64_t as_uint64(const json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !j.is_number_integer()) fail(path, "must be an integer");
  if (j.is_number_integer() && j.get<int64_t>() < 0) fail(path, "must be non-negative");
  return j.get<uint64_t>();
}

bool as_bool(const json& j, const std::string& path) {
  if (!j.is_boolean()) fail(path, "must be true or false");
  return j.get<bool>();
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "must be a string");
  return j.get<std::string>();
}

std::array<double, 24> as_hourly24(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 24) fail(path, "must be an array of 24 numbers");
  std::array<double, 24> out{};
  for (std::size_t h = 0; h < 24; ++h) {
    out[h] = as_double(j[h], path + "[" + std::to_string(h) + "]");
  }
  return out;
}

HourlyProfile parse_hourly_rates(const json& j, const std::string& path) {
  HourlyProfile out = as_hourly24(j, path);
  for (std::size_t h = 0; h < 24; ++h) {
    if (out[h] < 0.0) fail(path + "[" + std::to_string(h) + "]", "is negative");
  }
  return out;
}

TagMix parse_tag_mix(const json& j, const std::string& path) {
  StrictObject obj(j, path);
  TagMix mix{};
  for (Tag t : kAllTags) {
    mix[static_cast<std::size_t>(t)] = as_double(obj.require(tag_name(t)), path + "." + tag_name(t));
  }
  obj.reject_unknown();
  double sum = mix[0] + mix[1] + mix[2] + mix[3];
  for (Tag t : kAllTags) {
    if (mix[static_cast<std::size_t>(t)] < 0.0) fail(path + "." + tag_name(t), "is negative");
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    fail(path, "must sum to 1 (got " + format_double(sum) + ")");
  }
  return mix;
}

DistributionSpec parse_distribution(const json& j, const std::string& path) {
  StrictObject obj(j, path);
  std::string fam = as_string(obj.require("family"), path + ".family");
  const json& pj = obj.require("params");
  obj.reject_unknown();
  std::string ppath = path + ".params";
  if (!pj.is_array()) fail(ppath, "must be an array of numbers");
  std::vector<double> p;
  for (std::size_t i = 0; i < pj.size(); ++i) {
    p.push_back(as_double(pj[i], ppath + "[" + std::to_string(i) + "]"));
  }
  DistFamily family;
  try {
    family = family_from_name(fam);
  } catch (const std::invalid_argument&) {
    fail(path + ".family", "\"" + fam + "\" is not a known family");
  }
  auto want = [&](std::size_t lo, std::size_t hi) {
    if (p.size() < lo || p.size() > hi) {
      fail(ppath, "has " + std::to_string(p.size()) + " entries, expected " + std::to_string(lo) +
                      (hi != lo ? "-" + std::to_string(hi) : ""));
    }
  };
  switch (family) {
    case DistFamily::Lognormal: want(2, 2); break;
    case DistFamily::Normal: want(2, 3); break;
    case DistFamily::Exponential: want(1, 1); break;
    case DistFamily::ShiftedGamma: want(3, 3); break;
    case DistFamily::Weibull: want(2, 2); break;
    case DistFamily::Constant: want(1, 1); break;
    case DistFamily::Uniform: want(2, 2); break;
  }
  try {
    switch (family) {
      case DistFamily::Lognormal: return DistributionSpec::lognormal(p[0], p[1]);
      case DistFamily::Normal:
        return p.size() == 3 ? DistributionSpec::normal(p[0], p[1], p[2])
                             : DistributionSpec::normal(p[0], p[1]);
      case DistFamily::Exponential: return DistributionSpec::exponential(p[0]);
      case DistFamily::ShiftedGamma: return DistributionSpec::shifted_gamma(p[0], p[1], p[2]);
      case DistFamily::Weibull: return DistributionSpec::weibull(p[0], p[1]);
      case DistFamily::Constant: return DistributionSpec::constant(p[0]);
      case DistFamily::Uniform: return DistributionSpec::uniform(p[0], p[1]);
    }
  } catch (const std::invalid_argument& e) {
    fail(path, std::string("is invalid: ") + e.what());
  }
  fail(path, "is invalid");
}

void parse_per_tag_doubles(StrictObject& flow_obj, const std::string& key,
                           std::array<double, kTagCount>& out) {
  const json* j = flow_obj.find(key);
  if (!j) return;
  std::string path = flow_obj.path() + "." + key;
  StrictObject obj(*j, path);
  for (Tag t : kAllTags) {
    out[static_cast<std::size_t>(t)] =
        as_double(obj.require(tag_name(t)), path + "." + tag_name(t));
  }
  obj.reject_unknown();
}

void parse_per_tag_distributions(StrictObject& flow_obj, const std::string& key,
                                 std::array<DistributionSpec, kTagCount>& out) {
  const json* j = flow_obj.find(key);
  if (!j) return;
  std::string path = flow_obj.path() + "." + key;
  StrictObject obj(*j, path);
  for (Tag t : kAllTags) {
    out[static_cast<std::size_t>(t)] =
        parse_distribution(obj.require(tag_name(t)), path + "." + tag_name(t));
  }
  obj.reject_unknown();
}

void parse_flow(const json& j, const std::string& path, FlowParams& flow) {
  StrictObject obj(j, path);
  parse_per_tag_distributions(obj, "visit_duration", flow.visit_duration);
  parse_per_tag_distributions(obj, "exam_duration", flow.exam_duration);
  if (const json* d = obj.find("triage_duration")) {
    flow.triage_duration = parse_distribution(*d, path + ".triage_duration");
  }
  if (const json* d = obj.find("patience")) {
    flow.patience = parse_distribution(*d, path + ".patience");
  }
  parse_per_tag_doubles(obj, "lwbs_probability", flow.lwbs_probability);
  parse_per_tag_doubles(obj, "leaves_workup_probability", flow.leaves_workup_probability);
  parse_per_tag_doubles(obj, "exam_probability", flow.exam_probability);
  if (const json* d = obj.find("reassessment_duration_factor")) {
    flow.reassessment_duration_factor = as_double(*d, path + ".reassessment_duration_factor");
  }
  if (const json* d = obj.find("red_ambulance_bypass_probability")) {
    flow.red_ambulance_bypass_probability =
        as_double(*d, path + ".red_ambulance_bypass_probability");
  }
  if (const json* d = obj.find("lwbs_rescue_on_visit")) {
    flow.lwbs_rescue_on_visit = as_bool(*d, path + ".lwbs_rescue_on_visit");
  }
  if (const json* d = obj.find("yellow_night_start_hour")) {
    flow.yellow_night_start_hour = as_int(*d, path + ".yellow_night_start_hour");
  }
  if (const json* d = obj.find("yellow_night_end_hour")) {
    flow.yellow_night_end_hour = as_int(*d, path + ".yellow_night_end_hour");
  }
  obj.reject_unknown();
  for (Tag t : kAllTags) {
    std::size_t i = static_cast<std::size_t>(t);
    auto check01 = [&](double v, const char* key) {
      if (v < 0.0 || v > 1.0) {
        fail(path + "." + key + "." + tag_name(t), "must be within [0, 1]");
      }
    };
    check01(flow.lwbs_probability[i], "lwbs_probability");
    check01(flow.leaves_workup_probability[i], "leaves_workup_probability");
    check01(flow.exam_probability[i], "exam_probability");
    if (flow.lwbs_probability[i] + flow.leaves_workup_probability[i] > 1.0) {
      fail(path, std::string("abandonment probabilities for ") + tag_name(t) + " exceed 1");
    }
  }
}

ScenarioTransform parse_transform(const json& j, const std::string& path) {
  StrictObject obj(j, path);
  std::string type = as_string(obj.require("type"), path + ".type");
  ScenarioTransform out = UniformIncrease{};
  if (type == "uniform_increase") {
    out = UniformIncrease{as_double(obj.require("pct"), path + ".pct")};
  } else if (type == "slot_increase") {
    out = SlotIncrease{as_int(obj.require("day"), path + ".day"),
                       as_hourly24(obj.require("pct"), path + ".pct")};
  } else if (type == "peak_surge") {
    out = PeakSurge{as_int(obj.require("day"), path + ".day"),
                    as_double(obj.require("magnitude_pct"), path + ".magnitude_pct")};
  } else if (type == "tag_mix_override") {
    out = TagMixOverride{as_int(obj.require("day"), path + ".day"),
                         parse_tag_mix(obj.require("mix"), path + ".mix")};
  } else if (type == "peimaf") {
    Peimaf p;
    p.start_day = as_int(obj.require("start_day"), path + ".start_day");
    p.start_hour = as_int(obj.require("start_hour"), path + ".start_hour");
    if (const json* d = obj.find("staff_multiplier")) {
      p.staff_multiplier = as_int(*d, path + ".staff_multiplier");
    }
    if (const json* d = obj.find("divert_low_acuity")) {
      p.divert_low_acuity = as_bool(*d, path + ".divert_low_acuity");
    }
    if (const json* d = obj.find("open_areas_to_red")) {
      p.open_areas_to_red = as_bool(*d, path + ".open_areas_to_red");
    }
    out = p;
  } else {
    fail(path + ".type", "\"" + type + "\" is not a known transform type");
  }
  obj.reject_unknown();
  return out;
}

ExperimentConfig parse_config_root(const json& root, const std::string& origin) {
  StrictObject obj(root, origin);
  int version = as_int(obj.require("schema_version"), origin + ".schema_version");
  if (version != 1) fail(origin + ".schema_version", "must be 1");

  ExperimentConfig config = default_experiment_config();
  if (const json* j = obj.find("scenario")) {
    config.scenario = scenario_preset(as_string(*j, origin + ".scenario"));
  }
  if (const json* j = obj.find("transforms")) {
    if (!j->is_array()) fail(origin + ".transforms", "must be an array");
    config.scenario.transforms.clear();
    for (std::size_t i = 0; i < j->size(); ++i) {
      config.scenario.transforms.push_back(
          parse_transform((*j)[i], origin + ".transforms[" + std::to_string(i) + "]"));
    }
  }
  if (const json* j = obj.find("replications")) {
    std::string path = origin + ".replications";
    StrictObject rep(*j, path);
    if (const json* d = rep.find("count")) {
      config.scenario.plan.count = as_int(*d, path + ".count");
    }
    if (const json* d = rep.find("length_days")) {
      config.scenario.plan.length_days = as_int(*d, path + ".length_days");
    }
    if (const json* d = rep.find("warmup_hours")) {
      config.scenario.plan.warmup_hours = as_double(*d, path + ".warmup_hours");
    }
    if (const json* d = rep.find("seed")) {
      config.scenario.plan.seed = as_uint64(*d, path + ".seed");
    }
    rep.reject_unknown();
    if (config.scenario.plan.count < 1) fail(path + ".count", "must be >= 1");
    if (config.scenario.plan.length_days < 1) fail(path + ".length_days", "must be >= 1");
    if (config.scenario.plan.warmup_hours < 0) fail(path + ".warmup_hours", "must be >= 0");
  }
  if (const json* j = obj.find("rate_profile")) {
    std::string path = origin + ".rate_profile";
    StrictObject prof(*j, path);
    config.rate_profile = parse_hourly_rates(prof.require("hourly_rates"), path + ".hourly_rates");
    if (const json* d = prof.find("tag_mix")) {
      config.tag_mix = parse_tag_mix(*d, path + ".tag_mix");
    }
    prof.reject_unknown();
  }
  if (const json* j = obj.find("tag_mix")) {
    config.tag_mix = parse_tag_mix(*j, origin + ".tag_mix");
  }
  if (const json* j = obj.find("flow")) {
    parse_flow(*j, origin + ".flow", config.flow);
  }
  if (const json* j = obj.find("areas")) {
    std::string path = origin + ".areas";
    StrictObject areas(*j, path);
    if (const json* d = areas.find("green")) config.areas.green = as_int(*d, path + ".green");
    if (const json* d = areas.find("yellow")) config.areas.yellow = as_int(*d, path + ".yellow");
    if (const json* d = areas.find("shock")) config.areas.shock = as_int(*d, path + ".shock");
    areas.reject_unknown();
    if (config.areas.green < 1 || config.areas.yellow < 0 || config.areas.shock < 1) {
      fail(path, "seat counts are out of range");
    }
  }
  if (const json* j = obj.find("workers")) {
    config.workers = as_int(*j, origin + ".workers");
    if (config.workers < 0) fail(origin + ".workers", "must be >= 0");
  }
  if (const json* j = obj.find("out_dir")) {
    config.out_dir = as_string(*j, origin + ".out_dir");
  }
  if (const json* j = obj.find("emit_patients")) {
    config.emit_patients = as_bool(*j, origin + ".emit_patients");
  }
  if (const json* j = obj.find("utilization_time_weighted")) {
    config.utilization_time_weighted = as_bool(*j, origin + ".utilization_time_weighted");
  }
  obj.reject_unknown();
  return config;
}

}  // namespace

ExperimentConfig default_experiment_config() {
  ExperimentConfig config{
      .scenario = scenario_preset("baseline"),
      .rate_profile = std::nullopt,
      .tag_mix = std::nullopt,
      .flow = defaults::flow_params(),
      .areas = defaults::area_capacities(),
  };
  return config;
}

ExperimentConfig parse_config_text(const std::string& text, const std::string& origin) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("config error: " + origin + " is not valid JSON: " + e.what());
  }
  return parse_config_root(root, origin);
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config error: cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), path);
}

ExperimentConfig resolve_config(const std::optional<std::string>& config_path,
                                const CliOverrides& overrides) {
  ExperimentConfig config =
      config_path ? parse_config_file(*config_path) : default_experiment_config();
  if (overrides.scenario) config.scenario = scenario_preset(*overrides.scenario);
  if (overrides.reps) config.scenario.plan.count = *overrides.reps;
  if (overrides.days) config.scenario.plan.length_days = *overrides.days;
  if (overrides.warmup_hours) config.scenario.plan.warmup_hours = *overrides.warmup_hours;
  if (overrides.seed) config.scenario.plan.seed = *overrides.seed;
  if (overrides.workers) config.workers = *overrides.workers;
  if (overrides.out_dir) config.out_dir = *overrides.out_dir;
  if (overrides.emit_patients) config.emit_patients = *overrides.emit_patients;
  if (config.scenario.plan.count < 1) {
    throw std::invalid_argument("config error: replication count must be >= 1");
  }
  if (config.scenario.plan.length_days < 1) {
    throw std::invalid_argument("config error: length_days must be >= 1");
  }
  if (config.scenario.plan.warmup_hours < 0) {
    throw std::invalid_argument("config error: warmup_hours must be >= 0");
  }
  return config;
}

ReplicationSetup build_setup(const ExperimentConfig& config) {
  ReplicationSetup setup = defaults::baseline_setup(config.scenario.plan.length_days,
                                                    config.scenario.plan.warmup_hours);
  if (config.rate_profile || config.tag_mix) {
    HourlyProfile profile = config.rate_profile.value_or(defaults::hourly_profile());
    TagMix mix = config.tag_mix.value_or(defaults::tag_mix());
    setup.rate_plan = RatePlan::repeat(profile, mix, setup.rate_plan.horizon_days());
  }
  AppliedScenario applied = apply_transforms(setup.rate_plan, config.scenario.transforms);
  setup.rate_plan = std::move(applied.rate_plan);
  setup.peimaf = applied.peimaf;
  setup.flow = config.flow;
  setup.area_capacities = config.areas;
  return setup;
}

Report run_experiment(const ExperimentConfig& config) {
  ReplicationSetup setup = build_setup(config);
  std::vector<ReplicationResult> results =
      run_batch(setup, config.scenario.plan.seed, config.scenario.plan.count, config.workers);
  AggregationOptions options{config.scenario.name, config.scenario.plan.seed,
                             config.scenario.plan.length_days, config.scenario.plan.warmup_hours,
                             config.utilization_time_weighted};
  return aggregate(results, setup, options);
}

Report run_experiment_to_files(const ExperimentConfig& config) {
  ReplicationSetup setup = build_setup(config);
  std::vector<ReplicationResult> results =
      run_batch(setup, config.scenario.plan.seed, config.scenario.plan.count, config.workers);
  AggregationOptions options{config.scenario.name, config.scenario.plan.seed,
                             config.scenario.plan.length_days, config.scenario.plan.warmup_hours,
                             config.utilization_time_weighted};
  Report report = aggregate(results, setup, options);
  write_report_files(report, results, config);
  return report;
}

}  // namespace edsim
