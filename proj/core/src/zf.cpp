#include "dtdd/zf.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "dtdd/error.hpp"

namespace dtdd {

namespace {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

Matrix gaussian(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  Matrix h(rows, cols);
  for (int c = 0; c < cols; ++c)
    for (int r = 0; r < rows; ++r) {
      const double re = normal(rng);
      const double im = normal(rng);
      h(r, c) = {re, im};
    }
  return h;
}

bool well_conditioned(const Matrix& gram) {
  const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Matrix>(gram, Eigen::EigenvaluesOnly).eigenvalues();
  return ev.minCoeff() > 1e-12 * std::max(1.0, ev.maxCoeff());
}

// Unit-norm columns of the pseudo-inverse of the n x M channel `h`; rows of
// `h` are the conjugated user channels.
bool precoder(const Matrix& h, Matrix& w) {
  const Matrix gram = h * h.adjoint();
  if (!well_conditioned(gram)) return false;
  w = h.adjoint() * gram.inverse();
  w.colwise().normalize();
  return true;
}

}  // namespace

ZfValidationSample zf_validation(int m, int n, std::uint64_t samples, Rng& rng) {
  if (m < 1 || n < 1 || n > m) throw ConfigError("zf_validation: require 1 <= n <= m");
  ZfValidationSample out;
  out.m = m;
  out.n = n;
  for (auto* v : {&out.dl_desired, &out.dl_interferer, &out.ul_desired, &out.ul_interferer}) v->reserve(samples);

  for (std::uint64_t k = 0; k < samples; ++k) {
    // DL: typical SAP precoder, and an interfering SAP with its own users.
    Matrix h0 = gaussian(n, m, rng), w0;
    Matrix hi = gaussian(n, m, rng), wi;
    while (!precoder(h0, w0)) {
      ++out.rank_deficient_resamples;
      h0 = gaussian(n, m, rng);
    }
    while (!precoder(hi, wi)) {
      ++out.rank_deficient_resamples;
      hi = gaussian(n, m, rng);
    }
    const Matrix cross = h0 * w0;
    for (int c = 0; c < n; ++c)
      for (int cc = 0; cc < n; ++cc)
        if (c != cc) out.max_dl_leakage = std::max(out.max_dl_leakage, std::norm(cross(c, cc)));
    out.dl_desired.push_back(std::norm(cross(0, 0)));
    const Matrix h0i = gaussian(1, m, rng);  // conjugated channel SAP i -> typical MU
    out.dl_interferer.push_back((h0i * wi).squaredNorm());

    // UL: receive filter of the typical SAP, projection of the desired
    // channel onto the complement of the co-served channels.
    Matrix g = gaussian(m, n, rng);
    Vector v;
    for (;;) {
      if (n == 1) {
        v = g.col(0);
      } else {
        const Matrix others = g.rightCols(n - 1);
        const Matrix gram = others.adjoint() * others;
        if (!well_conditioned(gram)) {
          ++out.rank_deficient_resamples;
          g = gaussian(m, n, rng);
          continue;
        }
        v = g.col(0) - others * gram.ldlt().solve(others.adjoint() * g.col(0));
      }
      break;
    }
    v.normalize();
    for (int p = 1; p < n; ++p) out.max_ul_leakage = std::max(out.max_ul_leakage, std::norm(v.dot(g.col(p))));
    out.ul_desired.push_back(std::norm(v.dot(g.col(0))));

    // DL SAP j interfering at the typical SAP through an M x M channel.
    Matrix hj = gaussian(n, m, rng), wj;
    while (!precoder(hj, wj)) {
      ++out.rank_deficient_resamples;
      hj = gaussian(n, m, rng);
    }
    const Matrix h0j = gaussian(m, m, rng);
    out.ul_interferer.push_back((v.adjoint() * h0j * wj).squaredNorm());
  }
  return out;
}

}  // namespace dtdd
