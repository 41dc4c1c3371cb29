#pragma once

#include <optional>

#include "edsim/rate_plan.hpp"
#include "edsim/rng.hpp"

namespace edsim {

/// Nonhomogeneous Poisson arrival stream generated by thinning.
///
/// Candidate points come from a homogeneous process at the current day's
/// majorant rate and are accepted with probability rate(t)/majorant. The
/// candidate walk restarts at each day boundary, which is exact for a
/// piecewise-constant majorant. Exhausting the horizon yields nullopt.
class ArrivalGenerator {
 public:
  ArrivalGenerator(const RatePlan& plan, RngStream& rng) : plan_(&plan), rng_(&rng) {}

  std::optional<double> next();

  /// Thinning acceptance probability at an instant; exposed for tests.
  static double acceptance_probability(const RatePlan& plan, double minutes);

 private:
  const RatePlan* plan_;
  RngStream* rng_;
  double t_ = 0.0;
};

/// Maps one uniform draw to a tag through cumulative mix bins ordered
/// White, Green, Yellow, Red.
Tag assign_triage_tag(double u, const TagMix& mix);

}  // namespace edsim
