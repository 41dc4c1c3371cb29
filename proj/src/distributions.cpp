#include "edsim/distributions.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace edsim {

const char* family_name(DistFamily f) {
  switch (f) {
    case DistFamily::Lognormal: return "lognormal";
    case DistFamily::Normal: return "normal";
    case DistFamily::Exponential: return "exponential";
    case DistFamily::ShiftedGamma: return "shifted_gamma";
    case DistFamily::Weibull: return "weibull";
    case DistFamily::Constant: return "constant";
    case DistFamily::Uniform: return "uniform";
  }
  return "?";
}

DistFamily family_from_name(const std::string& name) {
  for (DistFamily f : {DistFamily::Lognormal, DistFamily::Normal, DistFamily::Exponential,
                       DistFamily::ShiftedGamma, DistFamily::Weibull, DistFamily::Constant,
                       DistFamily::Uniform}) {
    if (name == family_name(f)) return f;
  }
  throw std::invalid_argument("unknown distribution family '" + name + "'");
}

namespace {
void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(std::string("distribution spec rejected: ") + what);
}
}  // namespace

DistributionSpec DistributionSpec::lognormal(double mean, double sd) {
  require(mean > 0.0, "lognormal mean must be > 0");
  require(sd > 0.0, "lognormal sd must be > 0");
  return {DistFamily::Lognormal, mean, sd, 0.0};
}

DistributionSpec DistributionSpec::normal(double mean, double sd, double floor) {
  require(sd > 0.0, "normal sd must be > 0");
  require(floor > 0.0, "normal floor must be > 0");
  return {DistFamily::Normal, mean, sd, floor};
}

DistributionSpec DistributionSpec::exponential(double mean) {
  require(mean > 0.0, "exponential mean must be > 0");
  return {DistFamily::Exponential, mean, 0.0, 0.0};
}

DistributionSpec DistributionSpec::shifted_gamma(double shift, double scale, double shape) {
  require(shift >= 0.0, "gamma shift must be >= 0");
  require(scale > 0.0, "gamma scale must be > 0");
  require(shape > 0.0, "gamma shape must be > 0");
  return {DistFamily::ShiftedGamma, shift, scale, shape};
}

DistributionSpec DistributionSpec::weibull(double scale, double shape) {
  require(scale > 0.0, "weibull scale must be > 0");
  require(shape > 0.0, "weibull shape must be > 0");
  return {DistFamily::Weibull, scale, shape, 0.0};
}

DistributionSpec DistributionSpec::constant(double value) {
  require(value >= 0.0, "constant duration must be >= 0");
  return {DistFamily::Constant, value, 0.0, 0.0};
}

DistributionSpec DistributionSpec::uniform(double lo, double hi) {
  require(lo >= 0.0, "uniform lower bound must be >= 0");
  require(hi > lo, "uniform upper bound must exceed lower bound");
  return {DistFamily::Uniform, lo, hi, 0.0};
}

double sample_gamma(RngStream& rng, double shape, double scale) {
  if (shape < 1.0) {
    // G(k) = G(k+1) * U^(1/k)
    double u = rng.u01_open();
    return sample_gamma(rng, shape + 1.0, scale) * std::pow(u, 1.0 / shape);
  }
  double d = shape - 1.0 / 3.0;
  double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x = rng.standard_normal();
    double t = 1.0 + c * x;
    if (t <= 0.0) continue;
    double v = t * t * t;
    double u = rng.u01_open();
    if (std::log(u) < 0.5 * x * x + d - d * v + d * std::log(v)) {
      return d * v * scale;
    }
  }
}

double DistributionSpec::sample(RngStream& rng) const {
  switch (family_) {
    case DistFamily::Lognormal: {
      double sigma2 = std::log(1.0 + (b_ * b_) / (a_ * a_));
      double mu = std::log(a_) - 0.5 * sigma2;
      return std::exp(mu + std::sqrt(sigma2) * rng.standard_normal());
    }
    case DistFamily::Normal: {
      double x = a_ + b_ * rng.standard_normal();
      return x <= 0.0 ? c_ : x;
    }
    case DistFamily::Exponential:
      return -a_ * std::log(rng.u01_open());
    case DistFamily::ShiftedGamma:
      return a_ + sample_gamma(rng, c_, b_);
    case DistFamily::Weibull:
      return a_ * std::pow(-std::log(rng.u01_open()), 1.0 / b_);
    case DistFamily::Constant:
      return a_;
    case DistFamily::Uniform:
      return a_ + (b_ - a_) * rng.u01();
  }
  return 0.0;
}

std::string DistributionSpec::describe() const {
  std::ostringstream os;
  os << family_name(family_) << "(" << a_;
  if (family_ != DistFamily::Constant && family_ != DistFamily::Exponential) os << ", " << b_;
  if (family_ == DistFamily::ShiftedGamma || family_ == DistFamily::Normal) os << ", " << c_;
  os << ")";
  return os.str();
}

}  // namespace edsim
