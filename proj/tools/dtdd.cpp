// Command-line front end: analytic, simulate, sweep, compare, validate-zf.

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dtdd/config_io.hpp"
#include "dtdd/error.hpp"
#include "dtdd/special.hpp"
#include "dtdd/stats.hpp"
#include "dtdd/sweep.hpp"
#include "dtdd/zf.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitViolation = 4;

// Rings of clusters the simulation window should hold before we warn.
constexpr int kAdvisoryRings = 4;

struct Common {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> iterations;
  std::string engines;
  std::string direction = "both";
  bool timing = false;
  bool per_n0 = false;
};

void add_common(CLI::App* cmd, Common& c, bool engines) {
  cmd->add_option("--config", c.config, "JSON configuration file");
  cmd->add_option("--out", c.out, "Output CSV path (default: stdout)");
  cmd->add_option("--seed", c.seed, "Master seed");
  cmd->add_option("--iterations", c.iterations, "Monte Carlo drops per point");
  if (engines) cmd->add_option("--engine", c.engines, "Comma-separated engines");
  cmd->add_option("--direction", c.direction, "DL, UL or both")->check(CLI::IsMember({"DL", "UL", "both"}));
  cmd->add_flag("--timing", c.timing, "Fill the wall_ms column");
}

dtdd::RunConfig load(const Common& c) {
  dtdd::RunConfig rc = c.config.empty() ? dtdd::parse_config(nlohmann::json::object()) : dtdd::load_config(c.config);
  if (c.seed) rc.simulation.seed = *c.seed;
  if (c.iterations) {
    if (*c.iterations < 1) throw dtdd::ConfigError("--iterations must be >= 1");
    rc.simulation.iterations = *c.iterations;
  }
  return rc;
}

std::vector<dtdd::Direction> directions(const Common& c) {
  if (c.direction == "both") return {dtdd::Direction::downlink, dtdd::Direction::uplink};
  return {dtdd::parse_direction(c.direction)};
}

dtdd::RunOptions run_options(const dtdd::RunConfig& rc, bool timing) {
  dtdd::RunOptions o;
  o.analytic = rc.analytic;
  o.window = rc.simulation.window;
  o.timing = timing;
  return o;
}

// Writes to --out when given, else stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty()) return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw dtdd::ConfigError("cannot open output file '" + path + "'");
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void advise(const dtdd::NetworkConfig& cfg, const dtdd::Window& w) {
  if (auto msg = dtdd::window_advisory(cfg, w, kAdvisoryRings)) std::cerr << "warning: " << *msg << '\n';
}

bool any_simulation(const std::vector<dtdd::Engine>& engines) {
  for (dtdd::Engine e : engines)
    if (e == dtdd::Engine::simulation) return true;
  return false;
}

int cmd_point(const Common& c, std::vector<dtdd::Engine> engines) {
  const dtdd::RunConfig rc = load(c);
  if (!c.engines.empty()) engines = dtdd::parse_engine_list(c.engines);
  if (any_simulation(engines)) advise(rc.network, rc.simulation.window);
  const auto rows = dtdd::run_point(rc.network, engines, directions(c), rc.simulation.iterations,
                                    rc.simulation.seed, c.per_n0, run_options(rc, c.timing));
  Output out(c.out);
  dtdd::write_csv(out.stream(), rows, c.timing);
  for (const auto& r : rows)
    if (!r.error.empty()) {
      std::cerr << "error: " << r.error << '\n';
      return kExitNumerical;
    }
  return 0;
}

int cmd_simulate(const Common& c, const std::string& raw) {
  const int status = cmd_point(c, {dtdd::Engine::simulation});
  if (raw.empty()) return status;
  // Same seed, so the dump holds exactly the drops behind the summary.
  const dtdd::RunConfig rc = load(c);
  std::ofstream os(raw, std::ios::binary);
  if (!os) throw dtdd::ConfigError("cannot open raw output file '" + raw + "'");
  dtdd::DropOptions opts;
  opts.window = rc.simulation.window;
  std::vector<dtdd::DropResult> drops;
  for (dtdd::Direction d : directions(c)) {
    auto part = dtdd::simulate(rc.network, d, rc.simulation.iterations, rc.simulation.seed, opts);
    drops.insert(drops.end(), part.begin(), part.end());
  }
  dtdd::write_drops_csv(os, drops);
  return status;
}

int cmd_sweep(const Common& c) {
  const dtdd::RunConfig rc = load(c);
  if (!rc.sweep) throw dtdd::ConfigError("sweep: configuration has no 'sweep' block");
  dtdd::SweepSpec spec = *rc.sweep;
  if (c.seed) spec.seed = *c.seed;
  if (c.iterations) spec.iterations = *c.iterations;
  if (!c.engines.empty()) spec.engines = dtdd::parse_engine_list(c.engines);
  if (c.direction != "both") spec.directions = directions(c);
  if (c.per_n0) spec.per_n0 = true;
  spec.validate();
  if (any_simulation(spec.engines)) advise(rc.network, rc.simulation.window);
  const auto rows = dtdd::run_sweep(spec, rc.network, run_options(rc, c.timing));
  Output out(c.out);
  dtdd::write_csv(out.stream(), rows, c.timing);
  return 0;
}

int cmd_compare(const Common& c) {
  const dtdd::RunConfig rc = load(c);
  advise(rc.network, rc.simulation.window);
  std::vector<dtdd::CompareRecord> records;
  for (dtdd::Direction d : directions(c))
    records.push_back(dtdd::compare(rc.network, d, rc.simulation.iterations, rc.simulation.seed,
                                    run_options(rc, c.timing)));
  Output out(c.out);
  dtdd::write_compare(out.stream(), records);
  for (const auto& r : records)
    if (r.bound_violation) {
      std::cerr << "bound violation in " << dtdd::to_string(r.direction) << ": bound " << r.bound.overall
                << " < simulated " << r.simulated.overall.mean << " - " << r.simulated.overall.half_width_95 << '\n';
      return kExitViolation;
    }
  return 0;
}

int cmd_validate_zf(const Common& c, int m, int n) {
  const dtdd::RunConfig rc = load(c);
  if (m < 1 || n < 1 || n > m) throw dtdd::ConfigError("validate-zf: need 1 <= n <= m");
  dtdd::Rng rng = dtdd::drop_rng(rc.simulation.seed, 0);
  const auto z = dtdd::zf_validation(m, n, rc.simulation.iterations, rng);
  Output out(c.out);
  std::ostream& os = out.stream();
  os << "gain,reference,samples,mean,ks_statistic,p_value\n";
  auto row = [&](const char* name, const std::vector<double>& xs, int shape) {
    const double d = dtdd::ks_statistic(xs, [shape](double x) { return 1.0 - dtdd::gamma_ccdf(shape, x); });
    os << name << ",gamma(" << shape << ";1)," << xs.size() << ',' << dtdd::sample_mean(xs).mean << ',' << d << ','
       << dtdd::ks_pvalue(d, xs.size()) << '\n';
  };
  row("dl_desired", z.dl_desired, m - n + 1);
  row("dl_interferer", z.dl_interferer, n);
  row("ul_desired", z.ul_desired, m - n + 1);
  row("ul_interferer", z.ul_interferer, n);
  std::cerr << "max DL leakage " << z.max_dl_leakage << ", max UL leakage " << z.max_ul_leakage
            << ", rank-deficient resamples " << z.rank_deficient_resamples << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clustered dynamic TDD small-cell analysis and simulation"};
  app.require_subcommand(1);

  Common c;
  std::string raw;
  int zf_m = 8, zf_n = 3;

  auto* analytic = app.add_subcommand("analytic", "Analytic success probability and throughput at one point");
  add_common(analytic, c, true);
  analytic->add_flag("--per-n0", c.per_n0, "Also emit one row per serving tier");

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate at one point");
  add_common(simulate, c, false);
  simulate->add_flag("--per-n0", c.per_n0, "Also emit one row per serving tier");
  simulate->add_option("--raw", raw, "Also dump per-drop SINR and interference to this CSV");

  auto* sweep = app.add_subcommand("sweep", "Sweep one parameter as given by the config's sweep block");
  add_common(sweep, c, true);
  sweep->add_flag("--per-n0", c.per_n0, "Also emit one row per serving tier");

  auto* cmp = app.add_subcommand("compare", "Exact, bound and simulation side by side; exit 4 on bound violation");
  add_common(cmp, c, false);

  auto* zf = app.add_subcommand("validate-zf", "KS checks of zero-forcing gains against Gamma references");
  add_common(zf, c, false);
  zf->add_option("--m", zf_m, "Antennas per SAP");
  zf->add_option("--n", zf_n, "Served MUs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*analytic) return cmd_point(c, {dtdd::Engine::analytic_exact, dtdd::Engine::analytic_bound});
    if (*simulate) return cmd_simulate(c, raw);
    if (*sweep) return cmd_sweep(c);
    if (*cmp) return cmd_compare(c);
    if (*zf) {
      if (!c.iterations) c.iterations = 100000;
      return cmd_validate_zf(c, zf_m, zf_n);
    }
  } catch (const dtdd::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const dtdd::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
