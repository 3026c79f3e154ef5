#include "dtdd/analytic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "dtdd/error.hpp"
#include "dtdd/quadrature.hpp"
#include "dtdd/special.hpp"

namespace dtdd {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Below this s the transform is taken at its s = 0 limit.
constexpr double kTinyS = 1e-300;

// Interference Laplace transform of the clustered network seen by a typical
// DL MU or UL SAP. Everything is computed in log space as a jet in t with
// s = s_val + s_slope * t.
class LaplaceEngine {
 public:
  LaplaceEngine(const NetworkConfig& cfg, const TierPmf& pmf, const LaplaceParams& params)
      : cfg_(cfg), params_(params) {
    const int n_max = pmf.n_max();
    sap_weights_.assign(n_max + 1, 0.0);
    for (int n = 1; n <= n_max; ++n) {
      sap_weights_[n] = pmf.sap_density(cfg.lambda_s, n);
      mu_density_ += pmf.mu_density(cfg.lambda_s, n);
    }
  }

  Jet log_transform(double s_val, double s_slope, int order) const {
    const double rho = cfg_.rho;
    Jet log_l(order, -cfg_.noise * s_val);
    if (order >= 1) log_l[1] = -cfg_.noise * s_slope;

    // Intra-cluster zone: the typical cluster shares the direction under study.
    if (params_.direction == Direction::downlink) {
      if (params_.r0 < rho) log_l -= kTwoPi * sap_integral(params_.r0, rho, s_val, s_slope, order);
    } else {
      log_l -= kTwoPi * mu_integral(0.0, rho, s_val, s_slope, order);
    }

    int last = 0;
    std::array<Jet, 4> recent;  // h_{k-3}, ..., h_k
    for (int k = 1; k <= params_.ring_cap; ++k) {
      const Jet h = ring_log_factor(std::sqrt(double(k)) * rho, std::sqrt(k + 1.0) * rho, s_val, s_slope, order);
      log_l += h;
      last = k;
      if (h.max_abs() < params_.ring_tol) break;
      std::rotate(recent.begin(), recent.begin() + 1, recent.end());
      recent.back() = h;
      // With the tail closure in place, stop once the first neglected
      // Euler-Maclaurin term (third derivative over 720) is below tolerance.
      // The backward third difference overestimates it since the derivative
      // shrinks with k.
      if (params_.tail_closure && k >= 4) {
        const Jet d3 = recent[3] - 3.0 * recent[2] + 3.0 * recent[1] - recent[0];
        if (d3.max_abs() / 720.0 < params_.ring_tol) break;
      }
    }
    if (params_.tail_closure) log_l += tail(last + 1, s_val, s_slope, order);
    return log_l;
  }

  Jet transform(double s_val, double s_slope, int order) const { return exp(log_transform(s_val, s_slope, order)); }

  double value(double s) const {
    if (s < kTinyS) return 1.0;
    return std::exp(log_transform(s, 0.0, 0)[0]);
  }

 private:
  double path_loss(double r) const {
    if (cfg_.alpha == 4.0) {
      const double r2 = r * r;
      return 1.0 / (r2 * r2);
    }
    return std::pow(r, -cfg_.alpha);
  }

  // r * sum_n lambda_{s,n} (1 - (1 + x)^{-n}), x = s P_s r^{-alpha}.
  Jet sap_term(double r, double s_val, double s_slope, int order) const {
    const double pr = cfg_.p_s * path_loss(r);
    const double x0 = s_val * pr;
    const double inv = 1.0 / (1.0 + x0);
    const double ratio = s_slope * pr * inv;
    const double log1p_x0 = std::log1p(x0);
    Jet acc(order);
    double base = 1.0;  // (1 + x0)^{-n}
    for (std::size_t n = 1; n < sap_weights_.size(); ++n) {
      base *= inv;
      const double w = sap_weights_[n];
      if (w == 0.0) continue;
      const double nn = static_cast<double>(n);
      acc[0] -= w * std::expm1(-nn * log1p_x0);
      // Taylor coefficients of (1 + x0 + b t)^{-n}.
      double c = base;
      for (int i = 1; i <= order; ++i) {
        c *= (-nn - (i - 1)) / i * ratio;
        acc[i] -= w * c;
      }
    }
    return acc *= r;
  }

  // r * lambda_u_active * x / (1 + x), x = s Q_u r^{-alpha}.
  Jet mu_term(double r, double s_val, double s_slope, int order) const {
    const double pr = cfg_.q_u * path_loss(r);
    const double x0 = s_val * pr;
    const double inv = 1.0 / (1.0 + x0);
    const double ratio = s_slope * pr * inv;
    Jet acc(order);
    acc[0] = x0 * inv;
    double c = inv;
    for (int i = 1; i <= order; ++i) {
      c *= -ratio;
      acc[i] = -c;
    }
    return acc *= r * mu_density_;
  }

  Jet sap_integral(double lo, double hi, double s_val, double s_slope, int order) const {
    return integrate_adaptive([&](double r) { return sap_term(r, s_val, s_slope, order); }, lo, hi,
                              params_.quad_tol);
  }

  Jet mu_integral(double lo, double hi, double s_val, double s_slope, int order) const {
    return integrate_adaptive([&](double r) { return mu_term(r, s_val, s_slope, order); }, lo, hi,
                              params_.quad_tol);
  }

  bool needs_sap() const { return cfg_.p_d > 0.0; }
  bool needs_mu() const { return cfg_.p_d < 1.0; }

  struct Mixture {
    Jet log_factor;
    Jet weight_sap;  // p e^{-2 pi A} / F
    Jet weight_mu;   // (1 - p) e^{-2 pi B} / F
  };

  // log(p e^{-2 pi A} + (1 - p) e^{-2 pi B}), shifted by the smaller exponent
  // so neither branch underflows.
  Mixture mix(const Jet* sap, const Jet* mu, int order) const {
    const double p = cfg_.p_d;
    Mixture m{Jet(order), Jet(order), Jet(order)};
    if (!needs_mu()) {
      m.log_factor = -kTwoPi * *sap;
      m.weight_sap = Jet(order, 1.0);
      return m;
    }
    if (!needs_sap()) {
      m.log_factor = -kTwoPi * *mu;
      m.weight_mu = Jet(order, 1.0);
      return m;
    }
    const double a0 = kTwoPi * (*sap)[0];
    const double b0 = kTwoPi * (*mu)[0];
    const double shift = std::min(a0, b0);
    const Jet ea = p * exp(shift - kTwoPi * *sap);
    const Jet eb = (1.0 - p) * exp(shift - kTwoPi * *mu);
    const Jet f = ea + eb;
    const Jet inv = reciprocal(f);
    m.log_factor = log(f) - shift;
    m.weight_sap = ea * inv;
    m.weight_mu = eb * inv;
    return m;
  }

  Jet ring_log_factor(double lo, double hi, double s_val, double s_slope, int order) const {
    Jet a(order), b(order);
    if (needs_sap()) a = sap_integral(lo, hi, s_val, s_slope, order);
    if (needs_mu()) b = mu_integral(lo, hi, s_val, s_slope, order);
    return mix(&a, &b, order).log_factor;
  }

  // Ring with real index kappa >= 1: apothems sqrt(kappa) rho and sqrt(kappa + 1) rho.
  std::pair<double, double> ring_bounds(double kappa) const {
    const double lo = std::sqrt(kappa) * cfg_.rho;
    const double width = cfg_.rho / (std::sqrt(kappa + 1.0) + std::sqrt(kappa));
    return {lo, lo + width};
  }

  Jet ring_log_factor_at(double kappa, double s_val, double s_slope, int order) const {
    const auto [lo, hi] = ring_bounds(kappa);
    return ring_log_factor(lo, hi, s_val, s_slope, order);
  }

  // d/dkappa of the ring log factor.
  Jet ring_log_factor_slope(double kappa, double s_val, double s_slope, int order) const {
    const auto [lo, hi] = ring_bounds(kappa);
    const double d_hi = 0.5 * cfg_.rho / std::sqrt(kappa + 1.0);
    const double d_lo = 0.5 * cfg_.rho / std::sqrt(kappa);
    Jet a(order), b(order), da(order), db(order);
    if (needs_sap()) {
      a = sap_integral(lo, hi, s_val, s_slope, order);
      da = d_hi * sap_term(hi, s_val, s_slope, order) - d_lo * sap_term(lo, s_val, s_slope, order);
    }
    if (needs_mu()) {
      b = mu_integral(lo, hi, s_val, s_slope, order);
      db = d_hi * mu_term(hi, s_val, s_slope, order) - d_lo * mu_term(lo, s_val, s_slope, order);
    }
    const Mixture m = mix(&a, &b, order);
    return -kTwoPi * (m.weight_sap * da + m.weight_mu * db);
  }

  // Sum of ring log factors for k >= first: integral from `first` to
  // infinity plus the first two Euler-Maclaurin end corrections.
  Jet tail(int first, double s_val, double s_slope, int order) const {
    const double k0 = first;
    const double q = 2.0 / (cfg_.alpha - 2.0);
    // kappa = k0 u^{-q} maps (0, 1] onto [k0, inf) and makes the integrand
    // bounded as u -> 0.
    auto integrand = [&](double u) {
      const double kappa = k0 * std::pow(u, -q);
      const double jac = k0 * q * std::pow(u, -q - 1.0);
      return jac * ring_log_factor_at(kappa, s_val, s_slope, order);
    };
    Jet sum = integrate_adaptive(integrand, 0.0, 1.0, params_.quad_tol);
    sum += 0.5 * ring_log_factor_at(k0, s_val, s_slope, order);
    sum -= (1.0 / 12.0) * ring_log_factor_slope(k0, s_val, s_slope, order);
    return sum;
  }

  const NetworkConfig& cfg_;
  const LaplaceParams& params_;
  std::vector<double> sap_weights_;
  double mu_density_ = 0.0;
};

void check_order(int order) {
  if (order < 0 || order > Jet::kMaxOrder) {
    std::ostringstream os;
    os << "derivative order " << order << " outside [0, " << Jet::kMaxOrder << "]";
    throw ConfigError(os.str());
  }
}

Jet laplace_at_zero(const NetworkConfig& cfg, const TierPmf& pmf, const LaplaceParams& params, int order) {
  // Interferers arbitrarily close to the receiver make every moment diverge.
  const bool unbounded = params.direction == Direction::uplink || params.r0 <= 0.0;
  if (unbounded) {
    Jet j(order, 1.0);
    for (int i = 1; i <= order; ++i) j[i] = (i % 2 == 0 ? 1.0 : -1.0) * std::numeric_limits<double>::infinity();
    return j;
  }
  return LaplaceEngine(cfg, pmf, params).transform(0.0, 1.0, order);
}

double binomial(int n, int k) {
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

LaplaceParams params_for(const AnalyticOptions& opts, Direction dir) {
  LaplaceParams p;
  p.direction = dir;
  p.ring_cap = opts.ring_cap;
  p.ring_tol = opts.ring_tol;
  p.tail_closure = opts.tail_closure;
  p.quad_tol = opts.quad_tol;
  return p;
}

void check_n0(const NetworkConfig& cfg, int n0) {
  if (n0 < 1 || n0 > cfg.n_max) {
    std::ostringstream os;
    os << "n0 = " << n0 << " outside 1.." << cfg.n_max;
    throw ConfigError(os.str());
  }
}

// Integrates f_r(r0) * bracket_k(s(r0)) over r0 in [0, rho] for each
// requested tier at once.
class SuccessIntegrator {
 public:
  SuccessIntegrator(const NetworkConfig& cfg, const TierPmf& pmf, Direction dir, const AnalyticOptions& opts)
      : cfg_(cfg), pmf_(pmf), dir_(dir), opts_(opts) {}

  std::vector<double> run(const std::vector<int>& tiers, Method method) {
    auto integrand = [&](double r0) {
      std::vector<double> out(tiers.size(), 0.0);
      const double fr = serving_distance_pdf(cfg_.lambda_s, r0);
      const double s = cfg_.threshold(dir_) * std::pow(r0, cfg_.alpha) / cfg_.tx_power(dir_);
      if (s < kTinyS) {
        std::fill(out.begin(), out.end(), fr);
        return out;
      }
      LaplaceParams lp = params_for(opts_, dir_);
      lp.r0 = dir_ == Direction::downlink ? r0 : 0.0;
      const LaplaceEngine engine(cfg_, pmf_, lp);
      if (method == Method::exact) {
        const int max_terms = cfg_.m_antennas - *std::min_element(tiers.begin(), tiers.end()) + 1;
        const Jet rel = engine.transform(s, s, max_terms - 1);
        for (std::size_t k = 0; k < tiers.size(); ++k) {
          out[k] = fr * clamp(derivative_bracket(rel, cfg_.m_antennas - tiers[k] + 1));
        }
      } else {
        for (std::size_t k = 0; k < tiers.size(); ++k) {
          const int delta = cfg_.m_antennas - tiers[k] + 1;
          const double c = alzer_constant(delta);
          double sum = 0.0;
          for (int i = 1; i <= delta; ++i) {
            const double sign = (i % 2 == 1) ? 1.0 : -1.0;
            sum += sign * binomial(delta, i) * engine.value(i * c * s);
          }
          out[k] = fr * clamp(sum);
        }
      }
      return out;
    };
    // The alternating binomial sum cancels terms up to 2^delta in size, so
    // its roundoff floor scales with 2^delta - 1.
    double tol = opts_.outer_tol;
    if (method == Method::alzer_bound) {
      const int delta = cfg_.m_antennas - *std::min_element(tiers.begin(), tiers.end()) + 1;
      tol *= std::ldexp(1.0, delta) - 1.0;
    }
    return integrate_adaptive(integrand, 0.0, cfg_.rho, tol);
  }

  double max_excursion() const { return max_excursion_; }

 private:
  double clamp(double bracket) {
    const double excursion = bracket < 0.0 ? -bracket : bracket - 1.0;
    max_excursion_ = std::max(max_excursion_, excursion);
    return std::clamp(bracket, 0.0, 1.0);
  }

  const NetworkConfig& cfg_;
  const TierPmf& pmf_;
  Direction dir_;
  const AnalyticOptions& opts_;
  double max_excursion_ = 0.0;
};

}  // namespace

void LaplaceParams::validate(const NetworkConfig& cfg) const {
  cfg.validate();
  if (!(r0 >= 0.0 && r0 <= cfg.rho)) throw ConfigError("laplace params: require 0 <= r0 <= rho");
  if (ring_cap < 1) throw ConfigError("laplace params: ring_cap >= 1");
  if (!(ring_tol > 0.0)) throw ConfigError("laplace params: ring_tol > 0");
  if (!(quad_tol > 0.0)) throw ConfigError("laplace params: quad_tol > 0");
}

Jet laplace(const NetworkConfig& cfg, const TierPmf& pmf, const LaplaceParams& params, double s, int order) {
  params.validate(cfg);
  check_order(order);
  if (!(s >= 0.0)) throw ConfigError("laplace: s must be >= 0");
  if (s < kTinyS) return laplace_at_zero(cfg, pmf, params, order);
  Jet rel = LaplaceEngine(cfg, pmf, params).transform(s, s, order);
  double scale = 1.0;
  for (int i = 1; i <= order; ++i) {
    scale /= s;
    rel[i] *= scale;
  }
  return rel;
}

Jet laplace_dl(const NetworkConfig& cfg, const TierPmf& pmf, const LaplaceParams& params, double s, int order) {
  if (params.direction != Direction::downlink) throw std::invalid_argument("laplace_dl: params.direction must be DL");
  return laplace(cfg, pmf, params, s, order);
}

Jet laplace_ul(const NetworkConfig& cfg, const TierPmf& pmf, const LaplaceParams& params, double s, int order) {
  if (params.direction != Direction::uplink) throw std::invalid_argument("laplace_ul: params.direction must be UL");
  return laplace(cfg, pmf, params, s, order);
}

Jet laplace_relative(const NetworkConfig& cfg, const TierPmf& pmf, const LaplaceParams& params, double s,
                     int order) {
  params.validate(cfg);
  check_order(order);
  if (!(s > 0.0)) throw ConfigError("laplace_relative: s must be > 0");
  return LaplaceEngine(cfg, pmf, params).transform(s, s, order);
}

double derivative_bracket(const Jet& relative, int terms) {
  if (terms < 1 || terms - 1 > relative.order()) throw std::invalid_argument("derivative_bracket: bad term count");
  double sum = 0.0;
  for (int i = 0; i < terms; ++i) sum += (i % 2 == 0 ? 1.0 : -1.0) * relative[i];
  return sum;
}

double serving_distance_pdf(double lambda_s, double r) {
  const double a = std::numbers::pi * lambda_s;
  return 2.0 * a * r * std::exp(-a * r * r);
}

double success_exact(const NetworkConfig& cfg, const TierPmf& pmf, Direction dir, int n0,
                     const AnalyticOptions& opts) {
  cfg.validate();
  check_n0(cfg, n0);
  check_order(cfg.m_antennas - n0);
  SuccessIntegrator integrator(cfg, pmf, dir, opts);
  return integrator.run({n0}, Method::exact).front();
}

double success_bound(const NetworkConfig& cfg, const TierPmf& pmf, Direction dir, int n0,
                     const AnalyticOptions& opts) {
  cfg.validate();
  check_n0(cfg, n0);
  SuccessIntegrator integrator(cfg, pmf, dir, opts);
  return integrator.run({n0}, Method::alzer_bound).front();
}

SuccessResult success_overall(const NetworkConfig& cfg, const TierPmf& pmf, Direction dir, Method method,
                              const AnalyticOptions& opts) {
  cfg.validate();
  if (method == Method::exact) check_order(cfg.m_antennas - 1);
  std::vector<int> tiers(cfg.n_max);
  for (int n0 = 1; n0 <= cfg.n_max; ++n0) tiers[n0 - 1] = n0;

  SuccessIntegrator integrator(cfg, pmf, dir, opts);
  SuccessResult result;
  result.method = method;
  result.per_n0 = integrator.run(tiers, method);
  result.max_excursion = integrator.max_excursion();
  for (int n0 = 1; n0 <= cfg.n_max; ++n0) {
    result.overall += result.per_n0[n0 - 1] * pmf.weight(n0, cfg.serving_weights);
  }
  return result;
}

double throughput(const NetworkConfig& cfg, const TierPmf& pmf, Direction dir, const SuccessResult& success) {
  double sum = 0.0;
  for (int n0 = 1; n0 <= cfg.n_max; ++n0) {
    sum += success.per_n0.at(n0 - 1) * pmf.weight(n0, cfg.serving_weights) * n0;
  }
  return cfg.direction_probability(dir) * cfg.lambda_s * std::log2(1.0 + cfg.threshold(dir)) * sum;
}

double throughput(const NetworkConfig& cfg, const TierPmf& pmf, Direction dir, Method method,
                  const AnalyticOptions& opts) {
  return throughput(cfg, pmf, dir, success_overall(cfg, pmf, dir, method, opts));
}

}  // namespace dtdd
