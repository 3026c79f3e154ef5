#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace dtdd {

struct Estimate {
  double mean = 0.0;
  double half_width_95 = 0.0;
  std::uint64_t samples = 0;
};

/// Success fraction with the normal-approximation 95% half-width
/// 1.96 sqrt(p(1-p)/n). Zero samples give a zero estimate.
Estimate proportion(std::uint64_t successes, std::uint64_t samples);

/// Sample mean with half-width 1.96 s/sqrt(n).
Estimate sample_mean(const std::vector<double>& values);

/// One-sample Kolmogorov-Smirnov statistic sup |F_n - F|. Sorts a copy.
double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf);

/// Asymptotic Kolmogorov tail probability for statistic d over n samples,
/// with Stephens' small-sample correction.
double ks_pvalue(double d, std::size_t n);

}  // namespace dtdd
