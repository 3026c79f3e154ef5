#include "dtdd/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <stdexcept>

namespace dtdd {

namespace {

template <unsigned N>
QuadratureRule mapped_gauss(double a, double b) {
  using G = boost::math::quadrature::gauss<double, N>;
  const auto& x = G::abscissa();
  const auto& w = G::weights();
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  QuadratureRule rule;
  rule.a = a;
  rule.b = b;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0.0) {
      rule.nodes.push_back(c);
      rule.weights.push_back(h * w[i]);
      continue;
    }
    rule.nodes.push_back(c - h * x[i]);
    rule.weights.push_back(h * w[i]);
    rule.nodes.push_back(c + h * x[i]);
    rule.weights.push_back(h * w[i]);
  }
  return rule;
}

}  // namespace

QuadratureRule QuadratureRule::gauss_legendre(int points, double a, double b) {
  switch (points) {
    case 7: return mapped_gauss<7>(a, b);
    case 10: return mapped_gauss<10>(a, b);
    case 15: return mapped_gauss<15>(a, b);
    case 20: return mapped_gauss<20>(a, b);
    case 30: return mapped_gauss<30>(a, b);
    default: throw std::invalid_argument("unsupported Gauss-Legendre order");
  }
}

namespace detail {

const Gk15& gk15() {
  static const Gk15 table = [] {
    using K = boost::math::quadrature::gauss_kronrod<double, 15>;
    using G = boost::math::quadrature::gauss<double, 7>;
    Gk15 t{};
    for (int i = 0; i < 8; ++i) {
      t.x[i] = K::abscissa()[i];
      t.wk[i] = K::weights()[i];
    }
    for (std::size_t j = 0; j < G::abscissa().size(); ++j) t.wg[2 * j] = G::weights()[j];
    return t;
  }();
  return table;
}

}  // namespace detail

}  // namespace dtdd
