#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "dtdd/analytic.hpp"
#include "dtdd/model.hpp"
#include "dtdd/simulator.hpp"

namespace dtdd {

enum class Engine { analytic_exact, analytic_bound, simulation };
enum class SweepAxis { gamma_db, m_antennas, p_d, cluster_size_l, p_s_dbm };

std::string_view to_string(Engine e);
Engine parse_engine(std::string_view text);
/// Comma-separated engine list, e.g. "analytic_bound,simulation".
std::vector<Engine> parse_engine_list(std::string_view text);
std::string_view to_string(SweepAxis a);
SweepAxis parse_axis(std::string_view text);

/// Sets the swept parameter. gamma_db moves both thresholds; cluster_size_l
/// moves rho at fixed lambda_s.
NetworkConfig apply_axis(NetworkConfig cfg, SweepAxis axis, double value);

struct SimulationSettings {
  std::uint64_t iterations = 10000;
  std::uint64_t seed = 1;
  Window window;
};

struct SweepSpec {
  SweepAxis axis = SweepAxis::gamma_db;
  std::vector<double> values;
  std::vector<Engine> engines;
  std::vector<Direction> directions{Direction::downlink, Direction::uplink};
  std::uint64_t iterations = 10000;
  std::uint64_t seed = 1;
  /// Also emit one row per serving tier n0.
  bool per_n0 = false;

  void validate() const;
};

struct SweepRow {
  std::string axis;
  std::optional<double> value;
  Direction direction = Direction::downlink;
  Engine engine = Engine::analytic_exact;
  int n0 = 0;  // 0: all tiers
  double success = 0.0;
  std::optional<double> ci95;
  double throughput = 0.0;
  double wall_ms = 0.0;
  std::string error;
};

struct RunOptions {
  AnalyticOptions analytic;
  Window window;
  bool timing = false;  // fill wall_ms; otherwise the column stays blank
};

/// One row per (value, direction, engine) in axis order, plus per-tier rows
/// when requested. Failures of one point land in its error column.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, const NetworkConfig& cfg, const RunOptions& opts = {});

/// Rows for a single configuration, axis column "point".
std::vector<SweepRow> run_point(const NetworkConfig& cfg, const std::vector<Engine>& engines,
                                const std::vector<Direction>& directions, std::uint64_t iterations,
                                std::uint64_t seed, bool per_n0, const RunOptions& opts = {});

inline constexpr std::string_view kCsvHeader =
    "axis,value,direction,engine,n0,success,ci95,throughput_bps_hz_m2,wall_ms,error";

void write_csv(std::ostream& os, const std::vector<SweepRow>& rows, bool timing);

struct CompareRecord {
  Direction direction = Direction::downlink;
  SuccessResult exact;
  SuccessResult bound;
  SimulationEstimate simulated;
  double gap_exact = 0.0;  // exact - simulated
  double gap_bound = 0.0;  // bound - simulated
  /// bound < simulated mean - CI half-width.
  bool bound_violation = false;
};

CompareRecord compare(const NetworkConfig& cfg, Direction dir, std::uint64_t iterations, std::uint64_t seed,
                      const RunOptions& opts = {});

void write_compare(std::ostream& os, const std::vector<CompareRecord>& records);

}  // namespace dtdd
