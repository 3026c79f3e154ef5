#include <doctest.h>

#include <cmath>

#include "dtdd/jet.hpp"
#include "dtdd/quadrature.hpp"

using namespace dtdd;

TEST_CASE("jet arithmetic matches known series") {
  const Jet t = Jet::variable(5, 0.0);
  SUBCASE("exp") {
    const Jet e = exp(t);
    double f = 1;
    for (int i = 0; i <= 5; ++i) {
      if (i) f *= i;
      CHECK(e[i] == doctest::Approx(1.0 / f));
    }
  }
  SUBCASE("log(1+t)") {
    const Jet l = log(1.0 + t);
    for (int i = 1; i <= 5; ++i) CHECK(l[i] == doctest::Approx((i % 2 ? 1.0 : -1.0) / i));
  }
  SUBCASE("reciprocal") {
    const Jet r = reciprocal(1.0 - t);
    for (int i = 0; i <= 5; ++i) CHECK(r[i] == doctest::Approx(1.0));
  }
  SUBCASE("pow agrees with affine_pow") {
    const Jet a = 2.0 + 0.5 * t;
    const Jet p = pow(a, -3);
    const Jet q = affine_pow(2.0, 0.5, -3.0, 5);
    for (int i = 0; i <= 5; ++i) CHECK(p[i] == doctest::Approx(q[i]).epsilon(1e-14));
  }
  SUBCASE("exp(log(x)) round trip") {
    const Jet x = 3.0 + t + 0.25 * t * t;
    const Jet y = exp(log(x));
    for (int i = 0; i <= 5; ++i) CHECK(y[i] == doctest::Approx(x[i]).epsilon(1e-13));
  }
  SUBCASE("derivative") {
    const Jet e = exp(Jet::variable(4, 0.0, 2.0));
    CHECK(e.derivative(3) == doctest::Approx(8.0));
  }
}

TEST_CASE("jet-valued quadrature differentiates under the integral") {
  // d^i/ds^i of the integral of exp(-s r) over [0, 1] at s = 1.5, over i!.
  const Jet s = Jet::variable(2, 1.5);
  const Jet got = integrate_jet([](double r, const Jet& sj) { return exp(-r * sj); }, s, 0.0, 1.0, 1e-13);
  CHECK(got[0] == doctest::Approx(0.51791322656771344738).epsilon(1e-12));
  CHECK(got[1] == doctest::Approx(-0.19652204427952241230).epsilon(1e-12));
  CHECK(got[2] == doctest::Approx(0.056637976136871665220).epsilon(1e-12));
}

TEST_CASE("jet order limits") {
  CHECK_THROWS(Jet(-1));
  CHECK_THROWS(Jet(Jet::kMaxOrder + 1));
}
