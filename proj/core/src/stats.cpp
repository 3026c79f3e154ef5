#include "dtdd/stats.hpp"

#include <algorithm>
#include <cmath>

namespace dtdd {

Estimate proportion(std::uint64_t successes, std::uint64_t samples) {
  Estimate e;
  e.samples = samples;
  if (samples == 0) return e;
  const double n = static_cast<double>(samples);
  e.mean = static_cast<double>(successes) / n;
  e.half_width_95 = 1.96 * std::sqrt(e.mean * (1.0 - e.mean) / n);
  return e;
}

Estimate sample_mean(const std::vector<double>& values) {
  Estimate e;
  e.samples = values.size();
  if (values.empty()) return e;
  const double n = static_cast<double>(values.size());
  double sum = 0.0;
  for (double v : values) sum += v;
  e.mean = sum / n;
  if (values.size() < 2) return e;
  double ss = 0.0;
  for (double v : values) ss += (v - e.mean) * (v - e.mean);
  e.half_width_95 = 1.96 * std::sqrt(ss / (n - 1.0) / n);
  return e;
}

double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max({d, (i + 1) / n - f, f - i / n});
  }
  return d;
}

double ks_pvalue(double d, std::size_t n) {
  if (n == 0 || d <= 0.0) return 1.0;
  const double sn = std::sqrt(static_cast<double>(n));
  const double lambda = (sn + 0.12 + 0.11 / sn) * d;
  if (lambda < 0.2) return 1.0;
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += (k % 2 == 1 ? term : -term);
    if (term < 1e-16) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

}  // namespace dtdd
