#include "dtdd/sweep.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <exception>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "dtdd/error.hpp"

namespace dtdd {

namespace {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + '"';
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

AnalyticOptions analytic_options(const RunOptions& opts) { return opts.analytic; }

// Bracket excursions beyond this are quadrature noise worth reporting.
constexpr double kExcursionWarn = 1e-6;

void warn_excursion(const NetworkConfig& cfg, Direction dir, double excursion) {
  if (excursion <= kExcursionWarn) return;
  std::ostringstream os;
  os << "warning: " << to_string(dir) << " success bracket left [0, 1] by " << excursion << " (M = " << cfg.m_antennas
     << ", p_d = " << cfg.p_d << ", rho = " << cfg.rho << "); clamped\n";
  std::clog << os.str();
}

// Rows of one engine at one configuration: the overall row, then tiers.
std::vector<SweepRow> engine_rows(const NetworkConfig& cfg, Direction dir, Engine engine, bool per_n0,
                                  const std::function<SimulationEstimate()>& simulated, const RunOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<SweepRow> rows;
  SweepRow base;
  base.direction = dir;
  base.engine = engine;
  try {
    if (engine == Engine::simulation) {
      const SimulationEstimate e = simulated();
      SweepRow r = base;
      r.success = e.overall.mean;
      r.ci95 = e.overall.half_width_95;
      r.throughput = e.throughput.mean;
      rows.push_back(r);
      if (per_n0) {
        for (int n0 = 1; n0 <= cfg.n_max; ++n0) {
          SweepRow t = base;
          t.n0 = n0;
          t.success = e.per_n0[n0 - 1].mean;
          t.ci95 = e.per_n0[n0 - 1].half_width_95;
          t.throughput = NAN;
          rows.push_back(t);
        }
      }
    } else {
      const TierPmf pmf = tier_pmf(cfg);
      const Method m = engine == Engine::analytic_exact ? Method::exact : Method::alzer_bound;
      const SuccessResult s = success_overall(cfg, pmf, dir, m, analytic_options(opts));
      warn_excursion(cfg, dir, s.max_excursion);
      SweepRow r = base;
      r.success = s.overall;
      r.throughput = throughput(cfg, pmf, dir, s);
      rows.push_back(r);
      if (per_n0) {
        for (int n0 = 1; n0 <= cfg.n_max; ++n0) {
          SweepRow t = base;
          t.n0 = n0;
          t.success = s.per_n0[n0 - 1];
          t.throughput = NAN;
          rows.push_back(t);
        }
      }
    }
  } catch (const std::exception& e) {
    rows.clear();
    SweepRow r = base;
    r.success = NAN;
    r.throughput = NAN;
    r.error = e.what();
    rows.push_back(r);
  }
  const double ms = elapsed_ms(t0);
  for (SweepRow& r : rows) r.wall_ms = ms;
  return rows;
}

}  // namespace

std::string_view to_string(Engine e) {
  switch (e) {
    case Engine::analytic_exact: return "analytic_exact";
    case Engine::analytic_bound: return "analytic_bound";
    case Engine::simulation: return "simulation";
  }
  return "";
}

Engine parse_engine(std::string_view text) {
  if (text == "analytic_exact") return Engine::analytic_exact;
  if (text == "analytic_bound") return Engine::analytic_bound;
  if (text == "simulation") return Engine::simulation;
  throw ConfigError("unknown engine '" + std::string(text) + "'");
}

std::vector<Engine> parse_engine_list(std::string_view text) {
  std::vector<Engine> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view item = text.substr(pos, comma - pos);
    if (!item.empty()) out.push_back(parse_engine(item));
    pos = comma + 1;
  }
  if (out.empty()) throw ConfigError("engine list is empty");
  return out;
}

std::string_view to_string(SweepAxis a) {
  switch (a) {
    case SweepAxis::gamma_db: return "gamma_db";
    case SweepAxis::m_antennas: return "m_antennas";
    case SweepAxis::p_d: return "p_d";
    case SweepAxis::cluster_size_l: return "cluster_size_l";
    case SweepAxis::p_s_dbm: return "p_s_dbm";
  }
  return "";
}

SweepAxis parse_axis(std::string_view text) {
  for (SweepAxis a : {SweepAxis::gamma_db, SweepAxis::m_antennas, SweepAxis::p_d, SweepAxis::cluster_size_l,
                      SweepAxis::p_s_dbm}) {
    if (to_string(a) == text) return a;
  }
  throw ConfigError("unknown sweep axis '" + std::string(text) + "'");
}

NetworkConfig apply_axis(NetworkConfig cfg, SweepAxis axis, double value) {
  switch (axis) {
    case SweepAxis::gamma_db:
      cfg.gamma_d = cfg.gamma_u = db_to_linear(value);
      break;
    case SweepAxis::m_antennas:
      if (std::floor(value) != value) throw ConfigError("m_antennas sweep values must be integers");
      cfg.m_antennas = static_cast<int>(value);
      break;
    case SweepAxis::p_d:
      cfg.p_d = value;
      break;
    case SweepAxis::cluster_size_l:
      cfg.rho = rho_for_cluster_size(value, cfg.lambda_s);
      break;
    case SweepAxis::p_s_dbm:
      cfg.p_s = dbm_to_watts(value);
      break;
  }
  cfg.validate();
  return cfg;
}

void SweepSpec::validate() const {
  if (values.empty()) throw ConfigError("sweep: values must be nonempty");
  if (engines.empty()) throw ConfigError("sweep: engine set must be nonempty");
  if (directions.empty()) throw ConfigError("sweep: direction set must be nonempty");
  if (values.size() > 1) {
    const bool up = values[1] > values[0];
    for (std::size_t i = 1; i < values.size(); ++i) {
      if (up ? !(values[i] > values[i - 1]) : !(values[i] < values[i - 1]))
        throw ConfigError("sweep: values must be strictly monotone");
    }
  }
  const bool sim = std::find(engines.begin(), engines.end(), Engine::simulation) != engines.end();
  if (sim && iterations < 1) throw ConfigError("sweep: iterations >= 1 when simulation is selected");
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, const NetworkConfig& cfg, const RunOptions& opts) {
  spec.validate();
  cfg.validate();
  struct Task {
    std::size_t value;
    Direction dir;
    Engine engine;
  };
  std::vector<Task> tasks;
  for (std::size_t v = 0; v < spec.values.size(); ++v)
    for (Direction d : spec.directions)
      for (Engine e : spec.engines) tasks.push_back({v, d, e});

  // Every swept parameter is a per-drop mark or a threshold, so all axis
  // values share one drop set per direction (common random numbers).
  std::vector<std::optional<NetworkConfig>> points(spec.values.size());
  std::vector<std::string> point_error(spec.values.size());
  std::vector<NetworkConfig> variants;
  std::vector<std::size_t> variant_of(spec.values.size(), 0);
  for (std::size_t v = 0; v < spec.values.size(); ++v) {
    try {
      points[v] = apply_axis(cfg, spec.axis, spec.values[v]);
      variant_of[v] = variants.size();
      variants.push_back(*points[v]);
    } catch (const std::exception& e) {
      point_error[v] = e.what();
    }
  }
  std::vector<std::vector<std::vector<DropResult>>> shared(2);
  std::vector<std::string> shared_error(2);
  const bool any_sim = std::find(spec.engines.begin(), spec.engines.end(), Engine::simulation) != spec.engines.end();
  if (any_sim && !variants.empty()) {
    for (Direction d : spec.directions) {
      const int k = static_cast<int>(d);
      try {
        DropOptions dopts;
        dopts.window = opts.window;
        shared[k] = simulate_variants(cfg, variants, d, spec.iterations, spec.seed, dopts);
      } catch (const std::exception& e) {
        shared_error[k] = e.what();
      }
    }
  }

  std::vector<std::vector<SweepRow>> out(tasks.size());
  auto run_task = [&](std::size_t i) {
    const Task& t = tasks[i];
    const double value = spec.values[t.value];
    std::vector<SweepRow> rows;
    try {
      if (!points[t.value]) throw ConfigError(point_error[t.value]);
      const NetworkConfig& point = *points[t.value];
      auto simulated = [&]() {
        const int k = static_cast<int>(t.dir);
        if (!shared_error[k].empty()) throw NumericalError(shared_error[k]);
        return estimate(point, t.dir, shared[k][variant_of[t.value]]);
      };
      rows = engine_rows(point, t.dir, t.engine, spec.per_n0, simulated, opts);
    } catch (const std::exception& e) {
      SweepRow r;
      r.direction = t.dir;
      r.engine = t.engine;
      r.success = NAN;
      r.throughput = NAN;
      r.error = e.what();
      rows.push_back(r);
    }
    for (SweepRow& r : rows) {
      r.axis = std::string(to_string(spec.axis));
      r.value = value;
    }
    out[i] = std::move(rows);
  };

  // Analytic points run in parallel; simulation points are parallel inside.
  const auto n = static_cast<std::int64_t>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i)
    if (tasks[i].engine != Engine::simulation) run_task(static_cast<std::size_t>(i));
  for (std::size_t i = 0; i < tasks.size(); ++i)
    if (tasks[i].engine == Engine::simulation) run_task(i);

  std::vector<SweepRow> rows;
  for (auto& r : out) rows.insert(rows.end(), r.begin(), r.end());
  return rows;
}

std::vector<SweepRow> run_point(const NetworkConfig& cfg, const std::vector<Engine>& engines,
                                const std::vector<Direction>& directions, std::uint64_t iterations,
                                std::uint64_t seed, bool per_n0, const RunOptions& opts) {
  cfg.validate();
  if (engines.empty()) throw ConfigError("engine set must be nonempty");
  std::vector<SweepRow> rows;
  for (Direction d : directions) {
    for (Engine e : engines) {
      auto simulated = [&]() {
        DropOptions dopts;
        dopts.window = opts.window;
        return estimate(cfg, d, iterations, seed, dopts);
      };
      for (SweepRow& r : engine_rows(cfg, d, e, per_n0, simulated, opts)) {
        r.axis = "point";
        rows.push_back(std::move(r));
      }
    }
  }
  return rows;
}

void write_csv(std::ostream& os, const std::vector<SweepRow>& rows, bool timing) {
  os << kCsvHeader << '\n';
  auto num = [](double v) { return std::isnan(v) ? std::string() : format_double(v); };
  for (const SweepRow& r : rows) {
    os << r.axis << ',' << (r.value ? format_double(*r.value) : "") << ',' << to_string(r.direction) << ','
       << to_string(r.engine) << ',' << (r.n0 == 0 ? std::string("all") : std::to_string(r.n0)) << ','
       << num(r.success) << ',' << (r.ci95 ? format_double(*r.ci95) : "") << ',' << num(r.throughput) << ','
       << (timing ? format_double(r.wall_ms) : "") << ',' << csv_field(r.error) << '\n';
  }
}

CompareRecord compare(const NetworkConfig& cfg, Direction dir, std::uint64_t iterations, std::uint64_t seed,
                      const RunOptions& opts) {
  CompareRecord rec;
  rec.direction = dir;
  const TierPmf pmf = tier_pmf(cfg);
  rec.exact = success_overall(cfg, pmf, dir, Method::exact, opts.analytic);
  rec.bound = success_overall(cfg, pmf, dir, Method::alzer_bound, opts.analytic);
  DropOptions dopts;
  dopts.window = opts.window;
  rec.simulated = estimate(cfg, dir, iterations, seed, dopts);
  const Estimate& s = rec.simulated.overall;
  rec.gap_exact = rec.exact.overall - s.mean;
  rec.gap_bound = rec.bound.overall - s.mean;
  rec.bound_violation = rec.bound.overall < s.mean - s.half_width_95;
  return rec;
}

void write_compare(std::ostream& os, const std::vector<CompareRecord>& records) {
  os << "direction,exact,bound,simulated,ci95,gap_exact,gap_bound,bound_violation\n";
  for (const CompareRecord& r : records) {
    os << to_string(r.direction) << ',' << format_double(r.exact.overall) << ',' << format_double(r.bound.overall)
       << ',' << format_double(r.simulated.overall.mean) << ',' << format_double(r.simulated.overall.half_width_95)
       << ',' << format_double(r.gap_exact) << ',' << format_double(r.gap_bound) << ','
       << (r.bound_violation ? "yes" : "no") << '\n';
  }
}

}  // namespace dtdd
