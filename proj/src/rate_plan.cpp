#include "edsim/rate_plan.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace edsim {

RatePlan RatePlan::repeat(const HourlyProfile& profile, const TagMix& mix, int horizon_days) {
  if (horizon_days <= 0) throw std::invalid_argument("rate plan horizon must be positive");
  RatePlan plan;
  plan.days_.assign(static_cast<std::size_t>(horizon_days), profile);
  plan.mixes_.assign(static_cast<std::size_t>(horizon_days), mix);
  return plan;
}

double RatePlan::rate_at(double minutes) const {
  if (minutes < 0.0) return 0.0;
  int day = day_index_of(minutes);
  if (day >= horizon_days()) return 0.0;
  int hour = static_cast<int>(hour_of_day(minutes));
  hour = std::min(hour, 23);
  return days_[static_cast<std::size_t>(day)][static_cast<std::size_t>(hour)];
}

double RatePlan::lambda_max(int day_number) const {
  const HourlyProfile& p = days_.at(static_cast<std::size_t>(day_number - 1));
  return *std::max_element(p.begin(), p.end());
}

double RatePlan::expected_total() const {
  double total = 0.0;
  for (const HourlyProfile& p : days_) total += std::accumulate(p.begin(), p.end(), 0.0);
  return total;
}

void RatePlan::validate() const {
  if (days_.empty()) throw std::invalid_argument("rate plan is empty");
  for (std::size_t d = 0; d < days_.size(); ++d) {
    for (int h = 0; h < 24; ++h) {
      double r = days_[d][static_cast<std::size_t>(h)];
      if (!std::isfinite(r) || r < 0.0) {
        throw std::invalid_argument("rate for day " + std::to_string(d + 1) + " slot " +
                                    std::to_string(h) + " must be a finite non-negative number");
      }
    }
    double sum = 0.0;
    for (double m : mixes_[d]) {
      if (!std::isfinite(m) || m < 0.0) {
        throw std::invalid_argument("tag mix for day " + std::to_string(d + 1) +
                                    " has a negative or non-finite share");
      }
      sum += m;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
      throw std::invalid_argument("tag mix for day " + std::to_string(d + 1) + " sums to " +
                                  std::to_string(sum) + ", expected 1");
    }
  }
}

}  // namespace edsim
