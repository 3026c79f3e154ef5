#pragma once

#include <optional>

namespace dtdd {

/// Theta(alpha, beta, u, d) = integral over [0, d] of r^beta / (1 + u r^alpha) dr,
/// evaluated by adaptive quadrature. Requires alpha > 0, beta >= 0, u >= 0, d >= 0.
double theta(double alpha, double beta, double u, double d, double tol = 1e-12);

/// Same quantity through d^{beta+1}/(beta+1) * 2F1(1, b; 1+b; -u d^alpha) with
/// b = (beta+1)/alpha. Empty when the series does not converge (u d^alpha >= 1).
std::optional<double> theta_series(double alpha, double beta, double u, double d);

/// 2F1(1, b; b+1; z) by its power series, |z| < 1.
double hyp2f1_unit(double b, double z);

/// CCDF of Gamma(m, 1) at z: e^{-z} sum_{i<m} z^i / i!.
double gamma_ccdf(int m, double z);

/// (m!)^{-1/m}, the scale constant in Alzer's lower bound on the Gamma CDF.
double alzer_constant(int m);

}  // namespace dtdd
