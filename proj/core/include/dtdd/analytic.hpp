#pragma once

#include <vector>

#include "dtdd/jet.hpp"
#include "dtdd/model.hpp"

namespace dtdd {

/// Evaluation controls for the interference Laplace transform.
struct LaplaceParams {
  Direction direction = Direction::downlink;
  /// Serving distance; the DL intra-cluster SAP term integrates over [r0, rho].
  double r0 = 0.0;
  int ring_cap = 256;
  double ring_tol = 1e-12;
  /// Close the ring product after the last explicit ring with an
  /// Euler-Maclaurin estimate of the remaining rings.
  bool tail_closure = true;
  double quad_tol = 1e-10;

  void validate(const NetworkConfig& cfg) const;
};

/// Jet of L(s) about s, coefficients L^{(i)}(s)/i! for i = 0..order.
/// At s = 0 the value is 1; higher coefficients are the (signed, scaled)
/// interference moments, infinite where the moment diverges.
Jet laplace_dl(const NetworkConfig& cfg, const TierPmf& pmf, const LaplaceParams& params, double s, int order);
Jet laplace_ul(const NetworkConfig& cfg, const TierPmf& pmf, const LaplaceParams& params, double s, int order);
/// Dispatches on params.direction.
Jet laplace(const NetworkConfig& cfg, const TierPmf& pmf, const LaplaceParams& params, double s, int order);

/// Jet of L in the relative variable t, s(t) = s (1 + t): coefficient i is
/// s^i L^{(i)}(s)/i!. Requires s > 0.
Jet laplace_relative(const NetworkConfig& cfg, const TierPmf& pmf, const LaplaceParams& params, double s, int order);

/// sum_{i<terms} (-s)^i L^{(i)}(s)/i!, computed from a relative jet:
/// the expected Gamma(terms, 1) CCDF at s times the interference.
double derivative_bracket(const Jet& relative, int terms);

enum class Method { exact, alzer_bound };

struct AnalyticOptions {
  int ring_cap = 256;
  double ring_tol = 1e-12;
  bool tail_closure = true;
  double quad_tol = 1e-10;
  double outer_tol = 1e-10;
};

struct SuccessResult {
  std::vector<double> per_n0;  // index n0-1
  double overall = 0.0;
  Method method = Method::exact;
  /// Largest distance of a per-r0 bracket from [0, 1] before clamping.
  double max_excursion = 0.0;
};

/// Success probability of the typical link whose SAP serves n0 MUs.
double success_exact(const NetworkConfig& cfg, const TierPmf& pmf, Direction dir, int n0,
                     const AnalyticOptions& opts = {});
/// Alzer-inequality upper bound on success_exact; needs only values of L.
double success_bound(const NetworkConfig& cfg, const TierPmf& pmf, Direction dir, int n0,
                     const AnalyticOptions& opts = {});

SuccessResult success_overall(const NetworkConfig& cfg, const TierPmf& pmf, Direction dir, Method method,
                              const AnalyticOptions& opts = {});

/// Area throughput in bit/s/Hz/m^2 from per-tier success probabilities.
double throughput(const NetworkConfig& cfg, const TierPmf& pmf, Direction dir, const SuccessResult& success);
double throughput(const NetworkConfig& cfg, const TierPmf& pmf, Direction dir, Method method,
                  const AnalyticOptions& opts = {});

/// Serving-distance density 2 pi lambda_s r exp(-pi lambda_s r^2).
double serving_distance_pdf(double lambda_s, double r);

}  // namespace dtdd
