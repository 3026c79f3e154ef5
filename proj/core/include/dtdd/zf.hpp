#pragma once

#include <cstdint>
#include <vector>

#include "dtdd/simulator.hpp"

namespace dtdd {

/// Empirical effective gains of full-matrix zero forcing with i.i.d.
/// CN(0, 1) channels, for a SAP with `m` antennas serving `n` MUs.
struct ZfValidationSample {
  int m = 0;
  int n = 0;
  std::vector<double> dl_desired;     // |h_00^H w_00|^2
  std::vector<double> dl_interferer;  // ||h_0i^H W_i||^2, W_i from an independent n-user SAP
  std::vector<double> ul_desired;     // |v_0^H g_00|^2
  std::vector<double> ul_interferer;  // ||v_0^H H_0j^H W_j||^2, SAP-to-SAP channel H_0j
  /// Largest |h_c^H w_c'|^2, c != c', over all precoders.
  double max_dl_leakage = 0.0;
  /// Largest |v_0^H g_0p|^2 over the co-served MUs p = 1..n-1.
  double max_ul_leakage = 0.0;
  std::uint64_t rank_deficient_resamples = 0;
};

ZfValidationSample zf_validation(int m, int n, std::uint64_t samples, Rng& rng);

}  // namespace dtdd
