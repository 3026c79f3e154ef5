#include "dtdd/special.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "dtdd/quadrature.hpp"

namespace dtdd {

double theta(double alpha, double beta, double u, double d, double tol) {
  if (!(alpha > 0.0) || !(beta >= 0.0) || !(u >= 0.0) || !(d >= 0.0)) {
    throw std::domain_error("theta: requires alpha > 0, beta >= 0, u >= 0, d >= 0");
  }
  if (d == 0.0) return 0.0;
  if (u == 0.0) return std::pow(d, beta + 1.0) / (beta + 1.0);
  return integrate([&](double r) { return std::pow(r, beta) / (1.0 + u * std::pow(r, alpha)); }, 0.0, d, tol);
}

double hyp2f1_unit(double b, double z) {
  if (!(std::abs(z) < 1.0)) throw std::domain_error("hyp2f1_unit: |z| must be < 1");
  double sum = 0.0;
  double zk = 1.0;
  for (int k = 0; k < 10'000'000; ++k) {
    const double term = b / (b + k) * zk;
    sum += term;
    if (std::abs(term) <= std::numeric_limits<double>::epsilon() * std::abs(sum)) return sum;
    zk *= z;
  }
  return sum;
}

std::optional<double> theta_series(double alpha, double beta, double u, double d) {
  const double z = -u * std::pow(d, alpha);
  if (!(std::abs(z) < 1.0)) return std::nullopt;
  const double b = (beta + 1.0) / alpha;
  return std::pow(d, beta + 1.0) / (beta + 1.0) * hyp2f1_unit(b, z);
}

double gamma_ccdf(int m, double z) {
  if (m < 1) throw std::domain_error("gamma_ccdf: shape must be >= 1");
  if (z <= 0.0) return 1.0;
  double term = 1.0;
  double sum = 1.0;
  for (int i = 1; i < m; ++i) {
    term *= z / i;
    sum += term;
  }
  return std::exp(-z) * sum;
}

double alzer_constant(int m) {
  if (m < 1) throw std::domain_error("alzer_constant: m must be >= 1");
  return std::exp(-std::lgamma(m + 1.0) / m);
}

}  // namespace dtdd
