#include "dtdd/jet.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dtdd {

Jet::Jet(int order, double value) : order_(order) {
  if (order < 0 || order > kMaxOrder) throw std::out_of_range("jet order out of range");
  c_[0] = value;
}

Jet Jet::variable(int order, double value, double slope) {
  Jet j(order, value);
  if (order >= 1) j.c_[1] = slope;
  return j;
}

double Jet::derivative(int i) const {
  double f = 1.0;
  for (int k = 2; k <= i; ++k) f *= k;
  return f * c_[i];
}

double Jet::max_abs() const {
  double m = 0.0;
  for (int i = 0; i <= order_; ++i) m = std::max(m, std::abs(c_[i]));
  return m;
}

Jet& Jet::operator+=(const Jet& o) {
  assert(order_ == o.order_);
  for (int i = 0; i <= order_; ++i) c_[i] += o.c_[i];
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  assert(order_ == o.order_);
  for (int i = 0; i <= order_; ++i) c_[i] -= o.c_[i];
  return *this;
}

Jet& Jet::operator*=(const Jet& o) {
  assert(order_ == o.order_);
  for (int k = order_; k >= 0; --k) {
    double acc = 0.0;
    for (int j = 0; j <= k; ++j) acc += c_[j] * o.c_[k - j];
    c_[k] = acc;
  }
  return *this;
}

Jet& Jet::operator*=(double v) {
  for (int i = 0; i <= order_; ++i) c_[i] *= v;
  return *this;
}

Jet Jet::operator-() const {
  Jet r = *this;
  return r *= -1.0;
}

Jet reciprocal(const Jet& a) {
  Jet r(a.order());
  const double inv = 1.0 / a[0];
  r[0] = inv;
  for (int k = 1; k <= a.order(); ++k) {
    double acc = 0.0;
    for (int j = 1; j <= k; ++j) acc += a[j] * r[k - j];
    r[k] = -acc * inv;
  }
  return r;
}

Jet exp(const Jet& a) {
  Jet r(a.order(), std::exp(a[0]));
  for (int k = 1; k <= a.order(); ++k) {
    double acc = 0.0;
    for (int j = 1; j <= k; ++j) acc += j * a[j] * r[k - j];
    r[k] = acc / k;
  }
  return r;
}

Jet log(const Jet& a) {
  Jet r(a.order(), std::log(a[0]));
  for (int k = 1; k <= a.order(); ++k) {
    double acc = 0.0;
    for (int j = 1; j < k; ++j) acc += j * r[j] * a[k - j];
    r[k] = (a[k] - acc / k) / a[0];
  }
  return r;
}

Jet pow(const Jet& a, int n) {
  if (n < 0) return pow(reciprocal(a), -n);
  Jet result(a.order(), 1.0);
  Jet base = a;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

Jet affine_pow(double a, double b, double n, int order) {
  Jet r(order, std::pow(a, n));
  const double ratio = b / a;
  for (int k = 1; k <= order; ++k) r[k] = r[k - 1] * (n - (k - 1)) / k * ratio;
  return r;
}

}  // namespace dtdd
