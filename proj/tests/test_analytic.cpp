#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dtdd/analytic.hpp"
#include "dtdd/error.hpp"
#include "dtdd/special.hpp"

using namespace dtdd;

namespace {

LaplaceParams params(Direction d, double r0) {
  LaplaceParams p;
  p.direction = d;
  p.r0 = r0;
  return p;
}

}  // namespace

TEST_CASE("all-DL network reduces to a marked PPP beyond r0") {
  NetworkConfig cfg;
  cfg.p_d = 1.0;
  const TierPmf pmf = tier_pmf(cfg);
  const auto p = params(Direction::downlink, 10.0);
  CHECK(laplace(cfg, pmf, p, 1e3, 0)[0] == doctest::Approx(0.918224781989976120).epsilon(1e-8));
  CHECK(laplace(cfg, pmf, p, 1e4, 0)[0] == doctest::Approx(0.549316845362940187).epsilon(1e-8));
  CHECK(laplace(cfg, pmf, p, 1e5, 0)[0] == doctest::Approx(0.079255521335480065).epsilon(1e-7));
}

TEST_CASE("all-UL network reduces to the closed-form MU PPP") {
  NetworkConfig cfg;
  cfg.p_d = 0.0;
  const TierPmf pmf = tier_pmf(cfg);
  const auto p = params(Direction::uplink, 0.0);
  CHECK(laplace(cfg, pmf, p, 1e3, 0)[0] == doctest::Approx(0.903995899044390636).epsilon(1e-8));
  CHECK(laplace(cfg, pmf, p, 1e4, 0)[0] == doctest::Approx(0.726751901391457611).epsilon(1e-8));
  CHECK(laplace(cfg, pmf, p, 1e5, 0)[0] == doctest::Approx(0.364472363556131633).epsilon(1e-7));
}

TEST_CASE("laplace jets") {
  NetworkConfig cfg;
  const TierPmf pmf = tier_pmf(cfg);
  const auto p = params(Direction::downlink, 12.0);
  const double s = 2e4;
  const Jet abs = laplace(cfg, pmf, p, s, 3);
  const Jet rel = laplace_relative(cfg, pmf, p, s, 3);
  SUBCASE("relative jet is the absolute jet scaled by s^i") {
    for (int i = 0; i <= 3; ++i) CHECK(rel[i] == doctest::Approx(abs[i] * std::pow(s, i)).epsilon(1e-12));
  }
  SUBCASE("order 0 matches the jet's value") { CHECK(laplace(cfg, pmf, p, s, 0)[0] == doctest::Approx(abs[0])); }
  SUBCASE("completely monotone signs") {
    for (int i = 0; i <= 3; ++i) CHECK((i % 2 ? -abs[i] : abs[i]) > 0.0);
  }
  SUBCASE("s = 0") {
    const Jet z = laplace(cfg, pmf, p, 0.0, 0);
    CHECK(z[0] == 1.0);
  }
  SUBCASE("noise multiplies by exp(-s sigma^2)") {
    NetworkConfig noisy = cfg;
    noisy.noise = 1e-5;
    CHECK(laplace(noisy, pmf, p, s, 0)[0] == doctest::Approx(abs[0] * std::exp(-s * 1e-5)).epsilon(1e-10));
  }
  SUBCASE("open ring product converges to the closed tail like 1/K") {
    auto open = [&](int rings) {
      LaplaceParams o = p;
      o.tail_closure = false;
      o.ring_cap = rings;
      o.ring_tol = 1e-300;
      return laplace(cfg, pmf, o, s, 0)[0];
    };
    const double a = open(4096), b = open(16384);
    CHECK((a - abs[0]) / (b - abs[0]) == doctest::Approx(4.0).epsilon(0.05));
    CHECK((4 * b - a) / 3 == doctest::Approx(abs[0]).epsilon(1e-8));
  }
  SUBCASE("invalid parameters") {
    LaplaceParams bad = p;
    bad.ring_cap = 0;
    CHECK_THROWS_AS(laplace(cfg, pmf, bad, s, 0), ConfigError);
    CHECK_THROWS(laplace(cfg, pmf, p, -1.0, 0));
  }
}

TEST_CASE("derivative bracket of a point mass is the Gamma ccdf") {
  // L(s) = exp(-s I0): relative coefficients (-s I0)^i / i! exp(-s I0).
  const double s = 0.7, i0 = 3.1;
  Jet rel(8);
  double term = std::exp(-s * i0);
  for (int i = 0; i <= 8; ++i) {
    rel[i] = term;
    term *= -s * i0 / (i + 1);
  }
  for (int m = 1; m <= 9; ++m) CHECK(derivative_bracket(rel, m) == doctest::Approx(gamma_ccdf(m, s * i0)).epsilon(1e-13));
}

TEST_CASE("serving distance density") {
  CHECK(serving_distance_pdf(1e-3, 0.0) == 0.0);
  CHECK(serving_distance_pdf(1e-3, 10.0) ==
        doctest::Approx(2 * std::numbers::pi * 1e-3 * 10 * std::exp(-std::numbers::pi * 0.1)));
}

TEST_CASE("success probabilities") {
  NetworkConfig cfg;
  const TierPmf pmf = tier_pmf(cfg);
  SUBCASE("vanishing threshold leaves the truncated distance integral") {
    cfg.gamma_d = 1e-12;
    CHECK(success_exact(cfg, pmf, Direction::downlink, 3) == doctest::Approx(0.934171278988703349).epsilon(1e-7));
  }
  SUBCASE("exponential desired gain makes the bound exact") {
    cfg.n_max = cfg.m_antennas = 4;
    const TierPmf p4 = tier_pmf(cfg);
    for (Direction d : {Direction::downlink, Direction::uplink})
      CHECK(success_bound(cfg, p4, d, 4) == doctest::Approx(success_exact(cfg, p4, d, 4)).epsilon(1e-9));
  }
  SUBCASE("bound dominates exact and tiers order") {
    const auto ex = success_overall(cfg, pmf, Direction::downlink, Method::exact);
    const auto bd = success_overall(cfg, pmf, Direction::downlink, Method::alzer_bound);
    CHECK(bd.overall >= ex.overall - 1e-9);
    for (int n0 = 1; n0 <= 3; ++n0) CHECK(bd.per_n0[n0 - 1] >= ex.per_n0[n0 - 1] - 1e-9);
    // More served MUs leave less diversity.
    CHECK(ex.per_n0[0] > ex.per_n0[1]);
    CHECK(ex.per_n0[1] > ex.per_n0[2]);
    double mix = 0;
    for (int n0 = 1; n0 <= 3; ++n0) mix += pmf.serving_probs[n0 - 1] * ex.per_n0[n0 - 1];
    CHECK(ex.overall == doctest::Approx(mix));
    CHECK(ex.max_excursion < 1e-6);
  }
  SUBCASE("throughput") {
    const auto ex = success_overall(cfg, pmf, Direction::uplink, Method::exact);
    double t = 0;
    for (int n0 = 1; n0 <= 3; ++n0) t += pmf.serving_probs[n0 - 1] * n0 * ex.per_n0[n0 - 1];
    t *= 0.5 * cfg.lambda_s * std::log2(2.0);
    CHECK(throughput(cfg, pmf, Direction::uplink, ex) == doctest::Approx(t));
  }
  SUBCASE("n0 out of range") { CHECK_THROWS_AS(success_exact(cfg, pmf, Direction::downlink, 4), ConfigError); }
}
