#include "edsim/transition.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace edsim {

TagTransitionMatrix::TagTransitionMatrix(
    const std::array<std::array<double, kTagCount>, kTagCount>& rows,
    const std::array<double, kTagCount>& death_probability)
    : rows_(rows), death_(death_probability) {
  for (int i = 0; i < kTagCount; ++i) {
    double sum = 0.0;
    for (int j = 0; j < kTagCount; ++j) {
      double p = rows_[i][j];
      if (!std::isfinite(p) || p < 0.0) {
        throw std::invalid_argument("transition matrix entries must be non-negative");
      }
      if (std::abs(i - j) > 1 && p != 0.0) {
        throw std::invalid_argument("transition matrix may only move mass between adjacent tags");
      }
      sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
      throw std::invalid_argument("transition matrix row " + std::to_string(i) + " sums to " +
                                  std::to_string(sum) + ", expected 1");
    }
    if (death_[i] < 0.0 || death_[i] > 1.0) {
      throw std::invalid_argument("death probability must lie in [0, 1]");
    }
  }
}

Tag TagTransitionMatrix::sample(Tag triage_tag, double u) const {
  const auto& row = rows_[static_cast<std::size_t>(triage_tag)];
  double cum = 0.0;
  for (Tag t : kAllTags) {
    cum += row[static_cast<std::size_t>(t)];
    if (u < cum) return t;
  }
  return Tag::Red;
}

TagTransitionMatrix derive_min_movement_matrix(
    const std::array<double, kTagCount>& triage_counts,
    const std::array<double, kTagCount>& discharge_counts) {
  double total_in = 0.0, total_out = 0.0;
  for (int i = 0; i < kTagCount; ++i) {
    if (triage_counts[i] <= 0.0) {
      throw std::invalid_argument("triage counts must be positive");
    }
    total_in += triage_counts[i];
    total_out += discharge_counts[i];
  }
  if (std::abs(total_in - total_out) > 1e-6) {
    throw std::invalid_argument("triage and discharge totals differ; no stochastic matrix exists");
  }

  // flow[b] is the net mass crossing the boundary between severity b and
  // b+1, positive when it moves downward (towards White).
  std::array<double, kTagCount - 1> flow{};
  double cum = 0.0;
  for (int b = 0; b < kTagCount - 1; ++b) {
    cum += discharge_counts[b] - triage_counts[b];
    flow[b] = cum;
  }

  std::array<std::array<double, kTagCount>, kTagCount> rows{};
  for (int i = 0; i < kTagCount; ++i) {
    double exported = 0.0;
    if (i > 0 && flow[i - 1] > 0.0) {  // gives downward across boundary i-1
      rows[i][i - 1] = flow[i - 1] / triage_counts[i];
      exported += flow[i - 1];
    }
    if (i < kTagCount - 1 && flow[i] < 0.0) {  // gives upward across boundary i
      rows[i][i + 1] = -flow[i] / triage_counts[i];
      exported += -flow[i];
    }
    if (exported > triage_counts[i] + 1e-9) {
      throw std::invalid_argument("tag " + std::string(tag_name(static_cast<Tag>(i))) +
                                  " would need to move more mass than it holds");
    }
    rows[i][i] = (triage_counts[i] - exported) / triage_counts[i];
  }
  return TagTransitionMatrix(rows);
}

}  // namespace edsim
