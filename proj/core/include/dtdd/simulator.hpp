#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "dtdd/hex.hpp"
#include "dtdd/model.hpp"
#include "dtdd/stats.hpp"

namespace dtdd {

using Rng = std::mt19937_64;

/// Axis-aligned square of side `side` centered at the origin.
struct Window {
  double side = 1000.0;
  double area() const { return side * side; }
};

std::vector<Point> sample_ppp(double intensity, const Window& window, Rng& rng);

/// Independent Bernoulli(p_d) direction per cell, drawn in the order given.
std::vector<Direction> assign_directions(const std::vector<HexCoord>& cells, double p_d, Rng& rng);

struct Association {
  std::vector<int> nearest;       // per MU: index of the nearest SAP, -1 if no SAPs
  std::vector<bool> served;       // per MU
  std::vector<int> served_count;  // per SAP, min(associated, cap)
};

/// Nearest-SAP association. A SAP with more than `n_cap` associated MUs
/// serves a uniformly random subset of `n_cap` of them.
Association associate(const std::vector<Point>& mus, const std::vector<Point>& saps, int n_cap, Rng& rng);

struct DropOptions {
  Window window;
  /// Laplace oracle mode (DL): the serving SAP is placed at (r0, 0) and no
  /// other SAP lies closer to the typical MU.
  std::optional<double> fixed_serving_distance;
  int max_attempts = 10000;
};

struct DropResult {
  Direction direction = Direction::downlink;
  int n0 = 0;
  double sinr = 0.0;
  double interference = 0.0;     // watts
  double serving_distance = 0.0; // meters
  double desired_gain = 0.0;
  int attempts = 1;              // realizations drawn until the typical link was served
};

/// One realization seen by the typical receiver at the origin: a DL MU or
/// a UL SAP. Desired and interference gains use the Gamma/Exp marks of ZF.
DropResult run_drop(const NetworkConfig& cfg, Direction dir, Rng& rng, const DropOptions& opts = {});

/// The same realization evaluated under several configurations. Variants
/// may differ from `base` in m_antennas, p_d, rho, powers, noise and
/// thresholds; densities, n_max and alpha must match. Each variant's result
/// equals what run_drop would return for that variant alone from the same
/// generator state.
std::vector<DropResult> run_drop_variants(const NetworkConfig& base, const std::vector<NetworkConfig>& variants,
                                          Direction dir, Rng& rng, const DropOptions& opts = {});

/// Per-drop generator derived from the master seed and the drop index.
Rng drop_rng(std::uint64_t seed, std::uint64_t index);

/// `iterations` independent drops, parallel over drops; result i depends
/// only on (cfg, seed, i).
std::vector<DropResult> simulate(const NetworkConfig& cfg, Direction dir, std::uint64_t iterations,
                                 std::uint64_t seed, const DropOptions& opts = {});

/// Drops shared by all variants; result[v][i] is drop i under variant v.
std::vector<std::vector<DropResult>> simulate_variants(const NetworkConfig& base,
                                                       const std::vector<NetworkConfig>& variants, Direction dir,
                                                       std::uint64_t iterations, std::uint64_t seed,
                                                       const DropOptions& opts = {});

struct SimulationEstimate {
  Direction direction = Direction::downlink;
  std::vector<Estimate> per_n0;  // index n0-1
  Estimate overall;
  Estimate throughput;           // bit/s/Hz/m^2
  std::uint64_t attempts = 0;
};

/// Success rates at cfg.threshold(dir), stratified by n0 and pooled, plus
/// the throughput built from the per-tier rates with the model's tier
/// weights. An empty tier falls back to the pooled rate.
SimulationEstimate estimate(const NetworkConfig& cfg, Direction dir, const std::vector<DropResult>& drops);
SimulationEstimate estimate(const NetworkConfig& cfg, Direction dir, std::uint64_t iterations, std::uint64_t seed,
                            const DropOptions& opts = {});

/// Raw dump, one row per drop: direction,n0,r0_m,sinr_linear,interference_w.
void write_drops_csv(std::ostream& os, const std::vector<DropResult>& drops);

/// Advisory when the window cannot hold `rings` cluster rings around the
/// typical receiver.
std::optional<std::string> window_advisory(const NetworkConfig& cfg, const Window& window, int rings);

}  // namespace dtdd
