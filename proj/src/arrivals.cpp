#include "edsim/arrivals.hpp"

#include <cmath>

namespace edsim {

std::optional<double> ArrivalGenerator::next() {
  for (;;) {
    int day = day_index_of(t_);
    if (day >= plan_->horizon_days()) return std::nullopt;
    double day_end = (day + 1) * kMinutesPerDay;
    double lmax = plan_->lambda_max(day + 1);
    if (lmax <= 0.0) {
      t_ = day_end;
      continue;
    }
    // Candidate gap at the majorant rate, in minutes.
    t_ += -std::log(rng_->u01_open()) / lmax * 60.0;
    if (t_ >= day_end) {
      t_ = day_end;
      continue;
    }
    if (rng_->u01() * lmax <= plan_->rate_at(t_)) return t_;
  }
}

double ArrivalGenerator::acceptance_probability(const RatePlan& plan, double minutes) {
  int day = day_index_of(minutes);
  if (day >= plan.horizon_days()) return 0.0;
  double lmax = plan.lambda_max(day + 1);
  if (lmax <= 0.0) return 0.0;
  return plan.rate_at(minutes) / lmax;
}

Tag assign_triage_tag(double u, const TagMix& mix) {
  double cum = 0.0;
  for (Tag t : kAllTags) {
    cum += mix[static_cast<std::size_t>(t)];
    if (u < cum) return t;
  }
  return Tag::Red;
}

}  // namespace edsim
