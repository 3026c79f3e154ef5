#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <type_traits>
#include <utility>
#include <vector>

#include "dtdd/error.hpp"
#include "dtdd/jet.hpp"

namespace dtdd {

inline constexpr double kDefaultQuadTol = 1e-10;
inline constexpr int kDefaultMaxLevels = 40;
// Live panels before giving up; white roundoff noise never meets tol by bisection.
inline constexpr std::size_t kMaxPanels = std::size_t{1} << 15;

/// Fixed-order Gauss-Legendre rule mapped to [a, b].
struct QuadratureRule {
  double a = 0.0;
  double b = 0.0;
  std::vector<double> nodes;
  std::vector<double> weights;

  /// Supported orders: 7, 10, 15, 20, 30.
  static QuadratureRule gauss_legendre(int points, double a, double b);

  template <class F>
  double apply(F&& f) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]);
    return sum;
  }
};

namespace detail {

// Gauss-Kronrod 7/15 on [-1, 1]; index 0 is the center node, the Gauss
// nodes sit at even indices.
struct Gk15 {
  std::array<double, 8> x;
  std::array<double, 8> wk;
  std::array<double, 8> wg;  // zero at Kronrod-only nodes
};
const Gk15& gk15();

inline double norm_of(double v) { return std::abs(v); }
inline double norm_of(const Jet& v) { return v.max_abs(); }
inline double norm_of(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

inline void axpy(double& acc, double w, double v) { acc += w * v; }
inline void axpy(Jet& acc, double w, const Jet& v) {
  for (int i = 0; i <= v.order(); ++i) acc[i] += w * v[i];
}
inline void axpy(std::vector<double>& acc, double w, const std::vector<double>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) acc[i] += w * v[i];
}

inline double zero_like(double) { return 0.0; }
inline Jet zero_like(const Jet& v) { return Jet(v.order()); }
inline std::vector<double> zero_like(const std::vector<double>& v) { return std::vector<double>(v.size(), 0.0); }

inline bool finite(double v) { return std::isfinite(v); }
inline bool finite(const Jet& v) { return std::isfinite(v.max_abs()); }
inline bool finite(const std::vector<double>& v) { return std::isfinite(norm_of(v)); }

template <class V, class F>
class AdaptiveGk {
 public:
  AdaptiveGk(F& f, double tol, int max_levels) : f_(f), tol_(tol), max_levels_(max_levels) {}

  V run(double a, double b) { return panel(a, b, tol_, 0); }

 private:
  std::pair<V, V> estimate(double a, double b) {
    const Gk15& rule = gk15();
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    V center = f_(c);
    check(center, c);
    V kronrod = zero_like(center);
    V gauss = zero_like(center);
    axpy(kronrod, rule.wk[0] * h, center);
    axpy(gauss, rule.wg[0] * h, center);
    for (int i = 1; i < 8; ++i) {
      for (double sign : {-1.0, 1.0}) {
        const double x = c + sign * h * rule.x[i];
        V fx = f_(x);
        check(fx, x);
        axpy(kronrod, rule.wk[i] * h, fx);
        if (rule.wg[i] != 0.0) axpy(gauss, rule.wg[i] * h, fx);
      }
    }
    return {std::move(kronrod), std::move(gauss)};
  }

  void check(const V& v, double x) const {
    if (!finite(v)) {
      std::ostringstream os;
      os << "non-finite integrand at x = " << x;
      throw NumericalError(os.str());
    }
  }

  struct Panel {
    double a, b;
    V value;
    double err;
    int level;
  };

  // Global adaptive bisection: always split the panel with the largest
  // error estimate until the summed estimate meets the tolerance. A local
  // jump of size J in a panel of width w contributes about J * w, so
  // isolated discontinuities (the integrands here contain tiny ones where a
  // discrete truncation changes) do not stall convergence.
  V panel(double a, double b, double tol, int) {
    std::vector<Panel> heap;
    auto less = [](const Panel& x, const Panel& y) { return x.err < y.err; };
    auto push = [&](double lo, double hi, int level) {
      auto [k, g] = estimate(lo, hi);
      V diff = k;
      axpy(diff, -1.0, g);
      heap.push_back({lo, hi, std::move(k), norm_of(diff), level});
      std::push_heap(heap.begin(), heap.end(), less);
    };
    push(a, b, 0);
    for (;;) {
      V total = zero_like(heap.front().value);
      double err = 0.0;
      for (const Panel& p : heap) {
        axpy(total, 1.0, p.value);
        err += p.err;
      }
      const double floor = 64.0 * std::numeric_limits<double>::epsilon() * norm_of(total);
      if (err <= tol || err <= floor) return total;
      const Panel worst = heap.front();
      if (heap.size() >= kMaxPanels) {
        std::ostringstream os;
        os << "quadrature did not converge within " << kMaxPanels << " panels (roundoff noise?); total error "
           << err << " vs tolerance " << tol;
        throw NumericalError(os.str());
      }
      if (worst.level >= max_levels_) {
        std::ostringstream os;
        os << "quadrature did not converge after " << max_levels_ << " subdivisions; worst panel [" << worst.a
           << ", " << worst.b << "] error estimate " << worst.err << ", total " << err << " vs tolerance " << tol;
        throw NumericalError(os.str());
      }
      std::pop_heap(heap.begin(), heap.end(), less);
      heap.pop_back();
      const double mid = 0.5 * (worst.a + worst.b);
      push(worst.a, mid, worst.level + 1);
      push(mid, worst.b, worst.level + 1);
    }
  }

  F& f_;
  double tol_;
  int max_levels_;
};

}  // namespace detail

/// Adaptive bisection of Gauss-Kronrod 7/15 panels. The value type may be
/// double, Jet, or std::vector<double>; the error norm is the largest
/// component and `tol` bounds the summed panel error estimates. Throws
/// NumericalError when the worst panel would need more than `max_levels`
/// bisections or more than kMaxPanels live panels, or when the integrand
/// is non-finite.
template <class F>
auto integrate_adaptive(F&& f, double a, double b, double tol = kDefaultQuadTol, int max_levels = kDefaultMaxLevels) {
  using V = std::decay_t<decltype(f(a))>;
  if (!(a <= b)) throw NumericalError("integration bounds out of order");
  if (a == b) {
    V probe = f(a);
    return detail::zero_like(probe);
  }
  detail::AdaptiveGk<V, std::remove_reference_t<F>> engine(f, tol, max_levels);
  return engine.run(a, b);
}

/// Scalar integral of f over [a, b] with absolute error target `tol`.
template <class F>
double integrate(F&& f, double a, double b, double tol = kDefaultQuadTol, int max_levels = kDefaultMaxLevels) {
  return integrate_adaptive([&](double x) -> double { return f(x); }, a, b, tol, max_levels);
}

/// Integral of a jet-valued integrand f(r, s) over r, where s is the jet of
/// the expansion variable. Coefficient i of the result is the i-th Taylor
/// coefficient (in s) of the integral, because differentiation in s commutes
/// with integration in r.
template <class F>
Jet integrate_jet(F&& f, const Jet& s, double a, double b, double tol = kDefaultQuadTol,
                  int max_levels = kDefaultMaxLevels) {
  return integrate_adaptive([&](double r) -> Jet { return f(r, s); }, a, b, tol, max_levels);
}

}  // namespace dtdd
