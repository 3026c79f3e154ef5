#include "dtdd/config_io.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include "dtdd/error.hpp"

namespace dtdd {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw ConfigError(where + " must be a JSON object");
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.count(key)) throw ConfigError("unknown key '" + key + "' in " + where);
  }
}

double number(const json& obj, const std::string& key) {
  const json& v = obj.at(key);
  if (!v.is_number()) throw ConfigError("key '" + key + "' must be a number");
  return v.get<double>();
}

long long integer(const json& obj, const std::string& key) {
  const json& v = obj.at(key);
  if (v.is_number_integer()) return v.get<long long>();
  if (v.is_number_float() && std::floor(v.get<double>()) == v.get<double>()) return v.get<long long>();
  throw ConfigError("key '" + key + "' must be an integer");
}

std::uint64_t count(const json& obj, const std::string& key) {
  const long long v = integer(obj, key);
  if (v < 0) throw ConfigError("key '" + key + "' must be non-negative");
  return static_cast<std::uint64_t>(v);
}

// Reads `linear` or `db` (at most one); `to_linear` converts the decibel form.
template <class Conv>
void either(const json& obj, const std::string& linear, const std::string& db, double& out, Conv to_linear) {
  const bool a = obj.contains(linear), b = obj.contains(db);
  if (a && b) throw ConfigError("keys '" + linear + "' and '" + db + "' are mutually exclusive");
  if (a) out = number(obj, linear);
  if (b) out = to_linear(number(obj, db));
}

SweepSpec parse_sweep(const json& s) {
  reject_unknown(s, {"axis", "values", "engines", "directions", "iterations", "seed", "per_n0"}, "sweep");
  SweepSpec spec;
  if (!s.contains("axis")) throw ConfigError("sweep.axis is required");
  if (!s.at("axis").is_string()) throw ConfigError("sweep.axis must be a string");
  spec.axis = parse_axis(s.at("axis").get<std::string>());
  if (!s.contains("values") || !s.at("values").is_array()) throw ConfigError("sweep.values must be an array");
  for (const json& v : s.at("values")) {
    if (!v.is_number()) throw ConfigError("sweep.values must hold numbers");
    spec.values.push_back(v.get<double>());
  }
  if (s.contains("engines")) {
    if (!s.at("engines").is_array()) throw ConfigError("sweep.engines must be an array");
    for (const json& e : s.at("engines")) {
      if (!e.is_string()) throw ConfigError("sweep.engines must hold strings");
      spec.engines.push_back(parse_engine(e.get<std::string>()));
    }
  } else {
    spec.engines = {Engine::analytic_exact, Engine::analytic_bound, Engine::simulation};
  }
  if (s.contains("directions")) {
    if (!s.at("directions").is_array()) throw ConfigError("sweep.directions must be an array");
    spec.directions.clear();
    for (const json& d : s.at("directions")) {
      if (!d.is_string()) throw ConfigError("sweep.directions must hold strings");
      spec.directions.push_back(parse_direction(d.get<std::string>()));
    }
  }
  if (s.contains("iterations")) spec.iterations = count(s, "iterations");
  if (s.contains("seed")) spec.seed = count(s, "seed");
  if (s.contains("per_n0")) {
    if (!s.at("per_n0").is_boolean()) throw ConfigError("sweep.per_n0 must be a boolean");
    spec.per_n0 = s.at("per_n0").get<bool>();
  }
  return spec;
}

}  // namespace

RunConfig parse_config(const json& doc) {
  reject_unknown(doc,
                 {"lambda_s", "lambda_u", "p_s", "p_s_dbm", "q_u", "q_u_dbm", "m_antennas", "n_max", "alpha", "noise",
                  "noise_dbm", "p_d", "rho", "cluster_size_l", "gamma_d", "gamma_d_db", "gamma_u", "gamma_u_db",
                  "serving_weights", "sweep", "simulation", "analytic"},
                 "configuration");
  RunConfig rc;
  NetworkConfig& c = rc.network;
  const auto same = [](double v) { return v; };
  if (doc.contains("lambda_s")) c.lambda_s = number(doc, "lambda_s");
  if (doc.contains("lambda_u")) c.lambda_u = number(doc, "lambda_u");
  either(doc, "p_s", "p_s_dbm", c.p_s, dbm_to_watts);
  either(doc, "q_u", "q_u_dbm", c.q_u, dbm_to_watts);
  either(doc, "noise", "noise_dbm", c.noise, dbm_to_watts);
  either(doc, "gamma_d", "gamma_d_db", c.gamma_d, db_to_linear);
  either(doc, "gamma_u", "gamma_u_db", c.gamma_u, db_to_linear);
  if (doc.contains("m_antennas")) c.m_antennas = static_cast<int>(integer(doc, "m_antennas"));
  if (doc.contains("n_max")) c.n_max = static_cast<int>(integer(doc, "n_max"));
  if (doc.contains("alpha")) c.alpha = number(doc, "alpha");
  if (doc.contains("p_d")) c.p_d = number(doc, "p_d");
  // The cluster is sized after lambda_s is known.
  double l = 3.0;
  bool from_l = true;
  either(doc, "rho", "cluster_size_l", c.rho, same);
  if (doc.contains("rho")) from_l = false;
  if (doc.contains("cluster_size_l")) l = number(doc, "cluster_size_l");
  if (from_l) c.rho = rho_for_cluster_size(l, c.lambda_s);
  if (doc.contains("serving_weights")) {
    const json& w = doc.at("serving_weights");
    if (w == "renormalized") c.serving_weights = ServingWeights::renormalized;
    else if (w == "raw") c.serving_weights = ServingWeights::raw;
    else throw ConfigError("serving_weights must be \"renormalized\" or \"raw\"");
  }
  c.validate();

  if (doc.contains("simulation")) {
    const json& s = doc.at("simulation");
    reject_unknown(s, {"iterations", "seed", "window_side_m"}, "simulation");
    if (s.contains("iterations")) rc.simulation.iterations = count(s, "iterations");
    if (s.contains("seed")) rc.simulation.seed = count(s, "seed");
    if (s.contains("window_side_m")) rc.simulation.window.side = number(s, "window_side_m");
    if (rc.simulation.iterations < 1) throw ConfigError("simulation.iterations >= 1");
    if (!(rc.simulation.window.side > 0.0)) throw ConfigError("simulation.window_side_m > 0");
  }
  if (doc.contains("analytic")) {
    const json& a = doc.at("analytic");
    reject_unknown(a, {"ring_cap", "ring_tol", "tail_closure", "quad_tol", "outer_tol"}, "analytic");
    if (a.contains("ring_cap")) rc.analytic.ring_cap = static_cast<int>(integer(a, "ring_cap"));
    if (a.contains("ring_tol")) rc.analytic.ring_tol = number(a, "ring_tol");
    if (a.contains("quad_tol")) rc.analytic.quad_tol = number(a, "quad_tol");
    if (a.contains("outer_tol")) rc.analytic.outer_tol = number(a, "outer_tol");
    if (a.contains("tail_closure")) {
      if (!a.at("tail_closure").is_boolean()) throw ConfigError("analytic.tail_closure must be a boolean");
      rc.analytic.tail_closure = a.at("tail_closure").get<bool>();
    }
    if (rc.analytic.ring_cap < 1 || !(rc.analytic.ring_tol > 0.0) || !(rc.analytic.quad_tol > 0.0) ||
        !(rc.analytic.outer_tol > 0.0))
      throw ConfigError("analytic: ring_cap >= 1 and positive tolerances required");
  }
  if (doc.contains("sweep")) {
    rc.sweep = parse_sweep(doc.at("sweep"));
    rc.sweep->validate();
  }
  return rc;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("malformed JSON in '" + path + "': " + e.what());
  }
  return parse_config(doc);
}

}  // namespace dtdd
