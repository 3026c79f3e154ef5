#pragma once

#include <array>
#include <cassert>
#include <span>

namespace dtdd {

/// Truncated Taylor series of a scalar function about an expansion point.
///
/// Coefficient i holds f^{(i)}(s0) / i!. All arithmetic truncates at the
/// jet's order, so composing operations and truncating gives the same
/// coefficients as truncating the composed expansion. Operands of binary
/// operations must share the same order.
class Jet {
 public:
  static constexpr int kMaxOrder = 31;

  Jet() = default;
  explicit Jet(int order, double value = 0.0);

  static Jet constant(int order, double value) { return Jet(order, value); }
  /// The identity function of the expansion variable: value + slope * t.
  static Jet variable(int order, double value, double slope = 1.0);

  int order() const { return order_; }
  double operator[](int i) const { return c_[i]; }
  double& operator[](int i) { return c_[i]; }
  double value() const { return c_[0]; }
  std::span<const double> coeffs() const { return {c_.data(), static_cast<std::size_t>(order_) + 1}; }

  /// i-th derivative at the expansion point, i! * coeffs[i].
  double derivative(int i) const;
  /// Largest coefficient magnitude.
  double max_abs() const;

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(const Jet& o);
  Jet& operator+=(double v) { c_[0] += v; return *this; }
  Jet& operator-=(double v) { c_[0] -= v; return *this; }
  Jet& operator*=(double v);

  Jet operator-() const;

 private:
  int order_ = 0;
  std::array<double, kMaxOrder + 1> c_{};
};

inline Jet operator+(Jet a, const Jet& b) { return a += b; }
inline Jet operator-(Jet a, const Jet& b) { return a -= b; }
inline Jet operator*(Jet a, const Jet& b) { return a *= b; }
inline Jet operator+(Jet a, double v) { return a += v; }
inline Jet operator+(double v, Jet a) { return a += v; }
inline Jet operator-(Jet a, double v) { return a -= v; }
inline Jet operator-(double v, const Jet& a) { return -a + v; }
inline Jet operator*(Jet a, double v) { return a *= v; }
inline Jet operator*(double v, Jet a) { return a *= v; }

Jet reciprocal(const Jet& a);
inline Jet operator/(const Jet& a, const Jet& b) { return a * reciprocal(b); }
Jet exp(const Jet& a);
Jet log(const Jet& a);
/// Integer power by repeated squaring; negative exponents go through reciprocal.
Jet pow(const Jet& a, int n);

/// (a + b t)^n for real n, truncated at `order`; requires a > 0.
Jet affine_pow(double a, double b, double n, int order);

}  // namespace dtdd
