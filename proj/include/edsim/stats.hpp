#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace edsim {

/// Two-sided 95% Student-t critical value, t(0.975, df).
double student_t_975(int df);

/// Mean and 95% CI halfwidth of replication-level values.
/// The halfwidth is undefined (nullopt) with fewer than two values.
struct MeanCI {
  double mean = 0.0;
  std::optional<double> ci_halfwidth;
  std::size_t n = 0;
};

MeanCI mean_ci_95(const std::vector<double>& values);

/// Standard normal CDF.
double normal_cdf(double z);

/// One-sample Kolmogorov-Smirnov statistic against Exponential(mean).
double ks_statistic_exponential(std::vector<double> samples, double mean);

/// Asymptotic KS critical value at significance alpha for sample size n.
double ks_critical_value(double alpha, std::size_t n);

}  // namespace edsim
