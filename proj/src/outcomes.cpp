#include "edsim/outcomes.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace edsim {

OutcomeTable::OutcomeTable(const std::array<std::array<double, kOutcomeCount>, kTagCount>& rows)
    : rows_(rows) {
  for (int i = 0; i < kTagCount; ++i) {
    double sum = 0.0;
    for (double p : rows_[i]) {
      if (!std::isfinite(p) || p < 0.0) {
        throw std::invalid_argument("outcome table entries must be non-negative");
      }
      sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
      throw std::invalid_argument("outcome row " + std::string(tag_name(static_cast<Tag>(i))) +
                                  " sums to " + std::to_string(sum) + ", expected 1");
    }
    completion_mass_[i] = sum - rows_[i][static_cast<int>(Outcome::O6)] -
                          rows_[i][static_cast<int>(Outcome::O7)];
    if (completion_mass_[i] <= 0.0) {
      throw std::invalid_argument("outcome row " + std::string(tag_name(static_cast<Tag>(i))) +
                                  " leaves no mass for completed stays");
    }
  }
}

Outcome OutcomeTable::sample_completion(Tag discharge_tag, double u) const {
  const auto& row = rows_[static_cast<std::size_t>(discharge_tag)];
  double mass = completion_mass_[static_cast<std::size_t>(discharge_tag)];
  double cum = 0.0;
  Outcome last = Outcome::O1;
  for (int o = 0; o < kOutcomeCount; ++o) {
    if (o == static_cast<int>(Outcome::O6) || o == static_cast<int>(Outcome::O7)) continue;
    if (row[o] <= 0.0) continue;
    cum += row[o] / mass;
    last = static_cast<Outcome>(o);
    if (u < cum) return last;
  }
  return last;
}

}  // namespace edsim
