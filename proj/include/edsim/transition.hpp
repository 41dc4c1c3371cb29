#pragma once

#include <array>

#include "edsim/rng.hpp"
#include "edsim/types.hpp"

namespace edsim {

/// Row-stochastic map from triage tag to discharge tag.
///
/// Rows may move mass only to adjacent severity levels (White<->Green,
/// Green<->Yellow, Yellow<->Red). An optional per-tag death probability is
/// applied before the row draw; it defaults to zero everywhere because the
/// deceased mass is carried by the red outcome row instead.
class TagTransitionMatrix {
 public:
  TagTransitionMatrix(const std::array<std::array<double, kTagCount>, kTagCount>& rows,
                      const std::array<double, kTagCount>& death_probability = {});

  /// Discharge tag for a triage tag given one uniform draw, via cumulative
  /// bins in severity order White, Green, Yellow, Red.
  Tag sample(Tag triage_tag, double u) const;

  double probability(Tag from, Tag to) const {
    return rows_[static_cast<std::size_t>(from)][static_cast<std::size_t>(to)];
  }

  double death_probability(Tag t) const { return death_[static_cast<std::size_t>(t)]; }

  bool operator==(const TagTransitionMatrix&) const = default;

 private:
  std::array<std::array<double, kTagCount>, kTagCount> rows_;
  std::array<double, kTagCount> death_;
};

/// Solves the minimum-total-movement adjacency-constrained matrix whose
/// expected discharge marginals reproduce `discharge_counts` when applied to
/// `triage_counts`. Net flow across each adjacent-severity boundary follows
/// from cumulative marginal differences; each boundary's flow runs in one
/// direction only, which is what makes the total moved mass minimal. Throws
/// when totals differ or a row would need to move more mass than it holds.
TagTransitionMatrix derive_min_movement_matrix(const std::array<double, kTagCount>& triage_counts,
                                               const std::array<double, kTagCount>& discharge_counts);

}  // namespace edsim
