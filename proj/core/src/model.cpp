#include "dtdd/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

#include "dtdd/error.hpp"

namespace dtdd {

namespace {

constexpr double kVoronoiShape = 3.5;

void require(bool ok, const std::string& invariant) {
  if (!ok) throw ConfigError("invalid configuration: " + invariant);
}

bool positive(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

std::string_view to_string(Direction d) { return d == Direction::downlink ? "DL" : "UL"; }

Direction parse_direction(std::string_view text) {
  if (text == "DL" || text == "dl" || text == "downlink") return Direction::downlink;
  if (text == "UL" || text == "ul" || text == "uplink") return Direction::uplink;
  throw ConfigError("unknown direction '" + std::string(text) + "'");
}

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
double watts_to_dbm(double watts) { return 10.0 * std::log10(watts) + 30.0; }
double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

double rho_for_cluster_size(double cluster_size_l, double lambda_s) {
  require(positive(cluster_size_l), "cluster_size_l > 0");
  require(positive(lambda_s), "lambda_s > 0");
  return std::sqrt(cluster_size_l / (2.0 * std::sqrt(3.0) * lambda_s));
}

void NetworkConfig::validate() const {
  require(positive(lambda_s), "lambda_s > 0");
  require(positive(lambda_u), "lambda_u > 0");
  require(positive(p_s), "p_s > 0");
  require(positive(q_u), "q_u > 0");
  require(m_antennas >= 1, "m_antennas >= 1");
  require(n_max >= 1, "n_max >= 1");
  require(n_max <= m_antennas, "n_max <= m_antennas");
  require(std::isfinite(alpha) && alpha > 2.0, "alpha > 2");
  require(std::isfinite(noise) && noise >= 0.0, "noise >= 0");
  require(std::isfinite(p_d) && p_d >= 0.0 && p_d <= 1.0, "0 <= p_d <= 1");
  require(positive(rho), "rho > 0");
  require(positive(gamma_d), "gamma_d > 0");
  require(positive(gamma_u), "gamma_u > 0");
}

double ClusterGeometry::ring_inner(int k) const { return std::sqrt(static_cast<double>(k)) * rho; }
double ClusterGeometry::ring_outer(int k) const { return std::sqrt(static_cast<double>(k) + 1.0) * rho; }

ClusterGeometry derive_geometry(const NetworkConfig& cfg) {
  cfg.validate();
  ClusterGeometry g;
  g.rho = cfg.rho;
  g.area = 2.0 * std::sqrt(3.0) * cfg.rho * cfg.rho;
  g.cluster_size_l = g.area * cfg.lambda_s;
  return g;
}

double TierPmf::weight(int n0, ServingWeights mode) const {
  return mode == ServingWeights::renormalized ? serving_probs.at(n0 - 1) : probs.at(n0);
}

TierPmf tier_pmf(const NetworkConfig& cfg) {
  cfg.validate();
  const double u = cfg.lambda_u / cfg.lambda_s;
  const int n_max = cfg.n_max;
  const double c = kVoronoiShape;

  TierPmf pmf;
  pmf.probs.assign(n_max + 1, 0.0);
  double head = 0.0;
  for (int n = 0; n < n_max; ++n) {
    const double log_p = c * std::log(c) + std::lgamma(n + c) + n * std::log(u) - std::lgamma(c) -
                         std::lgamma(n + 1.0) - (n + c) * std::log(u + c);
    pmf.probs[n] = std::exp(log_p);
    head += pmf.probs[n];
  }
  pmf.probs[n_max] = std::max(0.0, 1.0 - head);

  const double active = std::accumulate(pmf.probs.begin() + 1, pmf.probs.end(), 0.0);
  if (!(active > 0.0)) {
    std::ostringstream os;
    os << "tier pmf has no mass on active tiers (lambda_u/lambda_s = " << u << ")";
    throw ConfigError(os.str());
  }
  pmf.serving_probs.resize(n_max);
  for (int n = 1; n <= n_max; ++n) pmf.serving_probs[n - 1] = pmf.probs[n] / active;
  return pmf;
}

}  // namespace dtdd
