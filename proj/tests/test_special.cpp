#include <doctest.h>

#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "dtdd/quadrature.hpp"
#include "dtdd/special.hpp"

using namespace dtdd;

TEST_CASE("theta reference values") {
  CHECK(theta(4, 1, 1, 1) == doctest::Approx(std::numbers::pi / 8).epsilon(1e-12));
  CHECK(theta(4, 1, 0.3, 1.7) == doctest::Approx(0.919591180007849494).epsilon(1e-11));
  CHECK(theta(3, 2, 0.5, 0.8) == doctest::Approx(0.151954712030671312).epsilon(1e-11));
  CHECK(theta(4, 1, 0.0, 2.0) == doctest::Approx(2.0));
  CHECK(theta(4, 1, 1.0, 0.0) == 0.0);
}

TEST_CASE("theta agrees with its hypergeometric series where it converges") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ua(2.5, 5.0), uu(0.0, 1.0), ud(0.0, 0.95);
  for (int i = 0; i < 50; ++i) {
    const double a = ua(rng), u = uu(rng), d = ud(rng);
    const auto series = theta_series(a, 1.0, u, d);
    REQUIRE(series.has_value());
    CHECK(theta(a, 1.0, u, d) == doctest::Approx(*series).epsilon(1e-10));
  }
  CHECK_FALSE(theta_series(4, 1, 1, 1.5).has_value());
}

TEST_CASE("theta rejects bad arguments") {
  CHECK_THROWS(theta(0, 1, 1, 1));
  CHECK_THROWS(theta(4, -1, 1, 1));
  CHECK_THROWS(theta(4, 1, -1, 1));
}

TEST_CASE("gamma ccdf") {
  CHECK(gamma_ccdf(3, 2.0) == doctest::Approx(0.676676416183063459).epsilon(1e-14));
  CHECK(gamma_ccdf(1, 0.7) == doctest::Approx(std::exp(-0.7)).epsilon(1e-15));
  CHECK(gamma_ccdf(5, 0.0) == 1.0);
  // Monotone in z, increasing in m.
  CHECK(gamma_ccdf(4, 3.0) < gamma_ccdf(4, 2.0));
  CHECK(gamma_ccdf(5, 3.0) > gamma_ccdf(4, 3.0));
}

TEST_CASE("alzer constant is (m!)^(-1/m)") {
  CHECK(alzer_constant(1) == doctest::Approx(1.0));
  CHECK(alzer_constant(2) == doctest::Approx(0.707106781186547524).epsilon(1e-14));
  CHECK(alzer_constant(6) == doctest::Approx(0.334024188266401231).epsilon(1e-14));
  CHECK_THROWS(alzer_constant(0));
}

TEST_CASE("Alzer inequality brackets the Gamma cdf") {
  for (int m = 1; m <= 8; ++m) {
    const double c = alzer_constant(m);
    for (double z : {0.01, 0.3, 1.0, 4.0, 12.0}) {
      const double cdf = 1.0 - gamma_ccdf(m, z);
      CHECK(std::pow(1.0 - std::exp(-c * z), m) <= cdf + 1e-15);
      CHECK(cdf <= std::pow(1.0 - std::exp(-z), m) + 1e-15);
    }
  }
}

TEST_CASE("hyp2f1 unit series") {
  // 2F1(1, 1; 2; z) = -log(1 - z) / z.
  CHECK(hyp2f1_unit(1.0, 0.5) == doctest::Approx(-std::log(0.5) / 0.5).epsilon(1e-13));
  CHECK(hyp2f1_unit(1.0, -0.5) == doctest::Approx(std::log(1.5) / 0.5).epsilon(1e-13));
  CHECK_THROWS(hyp2f1_unit(1.0, 1.0));
}

TEST_CASE("quadrature") {
  SUBCASE("smooth") {
    CHECK(integrate([](double x) { return std::exp(-x); }, 0, 5) ==
          doctest::Approx(1 - std::exp(-5.0)).epsilon(1e-12));
  }
  SUBCASE("endpoint singularity") {
    // About one bisection level per halving of the error near the singularity.
    CHECK(integrate([](double x) { return 1.0 / std::sqrt(x); }, 0, 1, 1e-10, 80) == doctest::Approx(2.0).epsilon(1e-8));
    CHECK_THROWS_AS(integrate([](double x) { return 1.0 / std::sqrt(x); }, 0, 1, 1e-10, 20), NumericalError);
  }
  SUBCASE("interior jump") {
    auto step = [](double x) { return x < 0.3 ? 1.0 : 2.0; };
    CHECK(integrate(step, 0, 1, 1e-10) == doctest::Approx(1.7).epsilon(1e-9));
  }
  SUBCASE("white noise above tolerance throws instead of spinning") {
    auto noisy = [](double x) {
      std::uint64_t h = std::bit_cast<std::uint64_t>(x) * 0x9e3779b97f4a7c15ULL;
      h ^= h >> 29;
      return 1.0 + 1e-6 * (static_cast<double>(h >> 11) * 0x1p-53 - 0.5);
    };
    CHECK_THROWS_AS(integrate(noisy, 0, 1, 1e-12), NumericalError);
  }
  SUBCASE("non-finite integrand") {
    CHECK_THROWS_AS(integrate([](double) { return NAN; }, 0, 1), NumericalError);
  }
  SUBCASE("bounds") {
    CHECK(integrate([](double) { return 1.0; }, 2, 2) == 0.0);
    CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 2, 1), NumericalError);
  }
  SUBCASE("gauss-legendre") {
    for (int n : {7, 10, 15, 20, 30}) {
      const auto rule = QuadratureRule::gauss_legendre(n, 0, 2);
      // Exact for degree 2n - 1.
      CHECK(rule.apply([&](double x) { return std::pow(x, 2 * n - 1); }) ==
            doctest::Approx(std::pow(2.0, 2 * n) / (2 * n)).epsilon(1e-12));
    }
    CHECK_THROWS(QuadratureRule::gauss_legendre(8, 0, 1));
  }
}
