#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace lcrg {

/// Binomial proportion with a 95% Wilson score interval.
struct Proportion {
  std::size_t successes = 0;
  std::size_t trials = 0;
  double estimate = 0.0;
  double lower = 0.0;
  double upper = 1.0;

  bool contains(double p) const noexcept { return lower <= p && p <= upper; }
};

Proportion wilson_interval(std::size_t successes, std::size_t trials, double z = 1.959963984540054);

/// Sample mean, unbiased variance and standard error of the mean.
struct MeanEstimate {
  std::size_t count = 0;
  double mean = 0.0;
  double variance = 0.0;
  double std_error = 0.0;
};

MeanEstimate summarize(std::span<const double> values);

/// Kolmogorov-Smirnov statistic sup |F_n - F| of a sample against a
/// continuous CDF. The sample is sorted in place.
double ks_statistic(std::vector<double>& sample, const std::function<double(double)>& cdf);

/// Upper tail P(chi^2_dof >= statistic).
double chi_square_tail(double statistic, double dof);

/// Pearson statistic of observed counts against equal expected counts.
double chi_square_uniform(std::span<const std::size_t> counts);

}  // namespace lcrg
