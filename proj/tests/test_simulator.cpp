#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "dtdd/analytic.hpp"
#include "dtdd/error.hpp"
#include "dtdd/simulator.hpp"
#include "dtdd/special.hpp"

using namespace dtdd;

TEST_CASE("PPP sampling") {
  Rng rng(3);
  Window w{200.0};
  double total = 0;
  for (int i = 0; i < 200; ++i) {
    const auto pts = sample_ppp(1e-2, w, rng);
    total += static_cast<double>(pts.size());
    for (const Point& p : pts) {
      CHECK(std::abs(p.x) <= 100.0);
      CHECK(std::abs(p.y) <= 100.0);
    }
  }
  CHECK(total / 200 == doctest::Approx(400.0).epsilon(0.02));
  CHECK(sample_ppp(0.0, w, rng).empty());
  CHECK_THROWS_AS(sample_ppp(-1.0, w, rng), ConfigError);
}

TEST_CASE("cluster directions") {
  Rng rng(4);
  std::vector<HexCoord> cells(20000);
  const auto dirs = assign_directions(cells, 0.3, rng);
  const auto dl = std::count(dirs.begin(), dirs.end(), Direction::downlink);
  CHECK(static_cast<double>(dl) / 20000 == doctest::Approx(0.3).epsilon(0.05));
  CHECK_THROWS_AS(assign_directions(cells, 1.2, rng), ConfigError);
}

TEST_CASE("association is nearest and capped") {
  Rng rng(5);
  Window w{300.0};
  const auto saps = sample_ppp(1e-3, w, rng);
  const auto mus = sample_ppp(1e-2, w, rng);
  const Association a = associate(mus, saps, 3, rng);
  REQUIRE(a.nearest.size() == mus.size());
  std::vector<int> served(saps.size(), 0), assoc(saps.size(), 0);
  for (std::size_t i = 0; i < mus.size(); ++i) {
    const int k = a.nearest[i];
    REQUIRE(k >= 0);
    const double dk = std::hypot(mus[i].x - saps[k].x, mus[i].y - saps[k].y);
    for (const Point& s : saps) CHECK(dk <= std::hypot(mus[i].x - s.x, mus[i].y - s.y));
    ++assoc[k];
    served[k] += a.served[i];
  }
  for (std::size_t k = 0; k < saps.size(); ++k) {
    CHECK(served[k] == std::min(assoc[k], 3));
    CHECK(a.served_count[k] == served[k]);
  }
  const Association none = associate(mus, {}, 3, rng);
  CHECK(std::all_of(none.nearest.begin(), none.nearest.end(), [](int k) { return k == -1; }));
}

TEST_CASE("drops are reproducible per index") {
  NetworkConfig cfg;
  const auto a = simulate(cfg, Direction::downlink, 40, 77);
  const auto b = simulate(cfg, Direction::downlink, 40, 77);
  const auto c = simulate(cfg, Direction::downlink, 40, 78);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].sinr == b[i].sinr);
    CHECK(a[i].interference == b[i].interference);
  }
  CHECK(a[0].sinr != c[0].sinr);
  // A longer run starts with the same drops.
  const auto longer = simulate(cfg, Direction::downlink, 60, 77);
  CHECK(longer[39].sinr == a[39].sinr);
}

TEST_CASE("variants match individual runs") {
  NetworkConfig base;
  std::vector<NetworkConfig> variants(3, base);
  variants[0].m_antennas = 4;
  variants[1].p_d = 0.2;
  variants[2].rho = rho_for_cluster_size(6.0, base.lambda_s);
  for (Direction d : {Direction::downlink, Direction::uplink}) {
    for (std::uint64_t i = 0; i < 5; ++i) {
      Rng shared = drop_rng(9, i);
      const auto all = run_drop_variants(base, variants, d, shared);
      for (std::size_t v = 0; v < variants.size(); ++v) {
        Rng alone = drop_rng(9, i);
        const DropResult r = run_drop(variants[v], d, alone);
        CHECK(all[v].sinr == r.sinr);
        CHECK(all[v].n0 == r.n0);
      }
    }
  }
  NetworkConfig other = base;
  other.n_max = 2;
  Rng rng(1);
  CHECK_THROWS_AS(run_drop_variants(base, {other}, Direction::downlink, rng), ConfigError);
}

TEST_CASE("drop semantics") {
  NetworkConfig cfg;
  const auto dl = simulate(cfg, Direction::downlink, 1500, 5);
  const auto ul = simulate(cfg, Direction::uplink, 1500, 5);
  SUBCASE("desired gain follows Gamma(M - n0 + 1, 1)") {
    std::vector<double> g;
    for (const auto& d : dl)
      if (d.n0 == 3) g.push_back(d.desired_gain);
    const auto cdf = [](double x) { return 1.0 - gamma_ccdf(6, x); };
    CHECK(ks_pvalue(ks_statistic(g, cdf), g.size()) > 0.01);
  }
  SUBCASE("serving tier histogram is close to the model pmf") {
    const TierPmf pmf = tier_pmf(cfg);
    for (const auto* drops : {&dl, &ul}) {
      for (int n0 = 1; n0 <= 3; ++n0) {
        const auto k = std::count_if(drops->begin(), drops->end(), [&](const DropResult& d) { return d.n0 == n0; });
        CHECK(std::abs(static_cast<double>(k) / drops->size() - pmf.serving_probs[n0 - 1]) <= 0.03);
      }
    }
  }
  SUBCASE("conditioning on a served typical MU pulls the serving distance in") {
    double mean = 0;
    for (const auto& d : dl) mean += d.serving_distance / dl.size();
    const double rayleigh = 0.5 / std::sqrt(cfg.lambda_s);
    CHECK(mean < rayleigh);
    CHECK(mean > 0.85 * rayleigh);
  }
  SUBCASE("sinr is consistent") {
    for (const auto& d : dl) {
      const double signal = cfg.p_s * std::pow(d.serving_distance, -cfg.alpha) * d.desired_gain;
      CHECK(d.sinr == doctest::Approx(signal / (d.interference + cfg.noise)).epsilon(1e-12));
    }
  }
}

TEST_CASE("fixed serving distance with an all-DL network matches the analytic transform") {
  NetworkConfig cfg;
  cfg.p_d = 1.0;
  DropOptions opts;
  opts.fixed_serving_distance = 10.0;
  const auto drops = simulate(cfg, Direction::downlink, 3000, 12, opts);
  for (const auto& d : drops) CHECK(d.serving_distance == 10.0);
  const double s = 1e4;
  std::vector<double> e;
  for (const auto& d : drops) e.push_back(std::exp(-s * d.interference));
  const Estimate m = sample_mean(e);
  // 0.5493 from the closed form.
  CHECK(std::abs(m.mean - 0.549316845362940187) < 1.5 * m.half_width_95);
}

TEST_CASE("estimate stratifies by tier") {
  NetworkConfig cfg;
  std::vector<DropResult> drops(4);
  drops[0] = {Direction::downlink, 3, 2.0};
  drops[1] = {Direction::downlink, 3, 0.5};
  drops[2] = {Direction::downlink, 1, 3.0};
  drops[3] = {Direction::downlink, 3, 1.5};
  const SimulationEstimate e = estimate(cfg, Direction::downlink, drops);
  CHECK(e.overall.mean == doctest::Approx(0.75));
  CHECK(e.per_n0[2].mean == doctest::Approx(2.0 / 3));
  CHECK(e.per_n0[0].mean == doctest::Approx(1.0));
  // Empty tier 2 falls back to the pooled rate.
  const TierPmf pmf = tier_pmf(cfg);
  const double t = pmf.serving_probs[0] * 1 * 1.0 + pmf.serving_probs[1] * 2 * 0.75 + pmf.serving_probs[2] * 3 * (2.0 / 3);
  CHECK(e.throughput.mean == doctest::Approx(0.5 * 1e-3 * t));
}

TEST_CASE("window advisory") {
  NetworkConfig cfg;
  CHECK_FALSE(window_advisory(cfg, Window{1000.0}, 4).has_value());
  CHECK(window_advisory(cfg, Window{100.0}, 4).has_value());
}
