#include <doctest.h>

#include "dtdd/special.hpp"
#include "dtdd/stats.hpp"
#include "dtdd/zf.hpp"

using namespace dtdd;

TEST_CASE("zero forcing nulls co-served users") {
  Rng rng(8);
  const auto z = zf_validation(6, 3, 2000, rng);
  CHECK(z.dl_desired.size() == 2000);
  CHECK(z.max_dl_leakage < 1e-20);
  CHECK(z.max_ul_leakage < 1e-20);
}

TEST_CASE("zero forcing desired gains are Gamma(M - n + 1, 1)") {
  Rng rng(10);
  const auto z = zf_validation(8, 3, 5000, rng);
  const auto cdf = [](double x) { return 1.0 - gamma_ccdf(6, x); };
  CHECK(ks_pvalue(ks_statistic(z.dl_desired, cdf), z.dl_desired.size()) > 0.01);
  CHECK(ks_pvalue(ks_statistic(z.ul_desired, cdf), z.ul_desired.size()) > 0.01);
}

TEST_CASE("single user degenerates to matched filtering") {
  Rng rng(11);
  const auto z = zf_validation(4, 1, 3000, rng);
  const auto cdf4 = [](double x) { return 1.0 - gamma_ccdf(4, x); };
  const auto cdf1 = [](double x) { return 1.0 - gamma_ccdf(1, x); };
  CHECK(ks_pvalue(ks_statistic(z.dl_desired, cdf4), z.dl_desired.size()) > 0.01);
  // One unit-norm beam through an independent channel is Exp(1).
  CHECK(ks_pvalue(ks_statistic(z.dl_interferer, cdf1), z.dl_interferer.size()) > 0.01);
}

TEST_CASE("zf argument checks") {
  Rng rng(1);
  CHECK_THROWS(zf_validation(2, 3, 10, rng));
  CHECK_THROWS(zf_validation(2, 0, 10, rng));
}
