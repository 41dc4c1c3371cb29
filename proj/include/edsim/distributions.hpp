#pragma once

#include <string>

#include "edsim/rng.hpp"

namespace edsim {

enum class DistFamily : uint8_t {
  Lognormal,     ///< parameterized by the distribution's own mean and sd
  Normal,        ///< clamped below at a floor instead of resampling
  Exponential,   ///< parameterized by mean
  ShiftedGamma,  ///< shift + Gamma(scale, shape)
  Weibull,       ///< scale, shape
  Constant,
  Uniform,       ///< [lo, hi)
};

const char* family_name(DistFamily f);
DistFamily family_from_name(const std::string& name);

/// A validated service/patience duration distribution, in minutes.
///
/// Invalid parameters are rejected at construction; sampling never fails.
/// Normal draws at or below zero are clamped to `floor` (default 0.1 min)
/// rather than resampled, so the number of raw draws per sample is fixed.
class DistributionSpec {
 public:
  static DistributionSpec lognormal(double mean, double sd);
  static DistributionSpec normal(double mean, double sd, double floor = 0.1);
  static DistributionSpec exponential(double mean);
  static DistributionSpec shifted_gamma(double shift, double scale, double shape);
  static DistributionSpec weibull(double scale, double shape);
  static DistributionSpec constant(double value);
  static DistributionSpec uniform(double lo, double hi);

  double sample(RngStream& rng) const;

  DistFamily family() const { return family_; }
  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }

  bool operator==(const DistributionSpec& o) const = default;

  std::string describe() const;

 private:
  DistributionSpec(DistFamily f, double a, double b, double c) : family_(f), a_(a), b_(b), c_(c) {}

  DistFamily family_;
  // Family-dependent parameter slots:
  //   Lognormal: a=mean, b=sd          Normal: a=mean, b=sd, c=floor
  //   Exponential: a=mean              ShiftedGamma: a=shift, b=scale, c=shape
  //   Weibull: a=scale, b=shape        Constant: a=value
  //   Uniform: a=lo, b=hi
  double a_ = 0.0;
  double b_ = 0.0;
  double c_ = 0.0;
};

/// Gamma(shape k, scale theta) variate; Marsaglia-Tsang squeeze, with the
/// boost-to-k+1 trick below shape 1. Exposed for tests.
double sample_gamma(RngStream& rng, double shape, double scale);

}  // namespace edsim
