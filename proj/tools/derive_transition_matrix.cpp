// Regenerates data/tag_transition_default.json from the historical per-tag
// triage and discharge headcounts, via the minimum-movement solver.
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "edsim/defaults.hpp"
#include "edsim/transition.hpp"

int main(int argc, char** argv) {
  using nlohmann::ordered_json;
  const char* out_path = argc > 1 ? argv[1] : "data/tag_transition_default.json";

  auto triage = edsim::defaults::triage_counts();
  auto discharge = edsim::defaults::discharge_counts();
  edsim::TagTransitionMatrix matrix = edsim::derive_min_movement_matrix(triage, discharge);

  ordered_json j;
  j["schema_version"] = 1;
  for (edsim::Tag t : edsim::kAllTags) {
    std::size_t i = static_cast<std::size_t>(t);
    j["triage_counts"][edsim::tag_name(t)] = triage[i];
    j["discharge_counts"][edsim::tag_name(t)] = discharge[i];
  }
  for (edsim::Tag from : edsim::kAllTags) {
    ordered_json row;
    for (edsim::Tag to : edsim::kAllTags) {
      row[edsim::tag_name(to)] = matrix.probability(from, to);
    }
    j["rows"][edsim::tag_name(from)] = row;
  }

  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::fprintf(stderr, "cannot write %s\n", out_path);
    return 1;
  }
  out << j.dump(2) << "\n";
  std::printf("wrote %s\n", out_path);
  return 0;
}
