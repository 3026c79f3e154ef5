#pragma once

#include <string_view>
#include <vector>

namespace dtdd {

enum class Direction { downlink, uplink };

std::string_view to_string(Direction d);
Direction parse_direction(std::string_view text);

/// How the per-tier weights of the overall success probability and the
/// throughput are normalized. `renormalized` divides f(n0) by the mass of the
/// active tiers 1..N; `raw` uses f(n0) as is, so the weights may sum to < 1.
enum class ServingWeights { renormalized, raw };

double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);
double db_to_linear(double db);
double linear_to_db(double linear);

/// Apothem of a hexagonal cluster holding `cluster_size_l` SAPs on average.
double rho_for_cluster_size(double cluster_size_l, double lambda_s);

/// Scenario parameters shared by the analytic and Monte Carlo engines.
/// All quantities are linear scale: watts, meters, points per m^2.
struct NetworkConfig {
  double lambda_s = 1e-3;
  double lambda_u = 1e-2;
  double p_s = dbm_to_watts(30.0);  // per-MU SAP power
  double q_u = dbm_to_watts(17.0);
  int m_antennas = 8;
  int n_max = 3;
  double alpha = 4.0;
  double noise = 0.0;
  double p_d = 0.5;
  double rho = rho_for_cluster_size(3.0, 1e-3);
  double gamma_d = 1.0;
  double gamma_u = 1.0;
  ServingWeights serving_weights = ServingWeights::renormalized;

  /// Throws ConfigError naming the first violated invariant.
  void validate() const;

  double threshold(Direction d) const { return d == Direction::downlink ? gamma_d : gamma_u; }
  double tx_power(Direction d) const { return d == Direction::downlink ? p_s : q_u; }
  double direction_probability(Direction d) const { return d == Direction::downlink ? p_d : 1.0 - p_d; }
};

struct ClusterGeometry {
  double rho = 0.0;
  double area = 0.0;            // 2*sqrt(3)*rho^2
  double cluster_size_l = 0.0;  // area * lambda_s

  /// Apothems of the hexagons bounding ring k (k >= 1): sqrt(k)*rho and sqrt(k+1)*rho.
  double ring_inner(int k) const;
  double ring_outer(int k) const;
};

ClusterGeometry derive_geometry(const NetworkConfig& cfg);

/// Distribution of the number of served MUs per SAP.
struct TierPmf {
  std::vector<double> probs;          // f(n), n = 0..N
  std::vector<double> serving_probs;  // index n0-1, n0 = 1..N, sums to 1

  int n_max() const { return static_cast<int>(probs.size()) - 1; }

  /// Weight of tier n0 in the overall success probability and throughput.
  double weight(int n0, ServingWeights mode) const;

  /// lambda_{s,n} = lambda_s f(n).
  double sap_density(double lambda_s, int n) const { return lambda_s * probs.at(n); }
  /// lambda_{u,n} = lambda_s n f(n): density of MUs served by tier-n SAPs.
  double mu_density(double lambda_s, int n) const { return lambda_s * n * probs.at(n); }
};

/// Poisson-Voronoi cell-load model with shape constant 3.5; the mass of all
/// loads >= N is folded into tier N.
TierPmf tier_pmf(const NetworkConfig& cfg);

}  // namespace dtdd
