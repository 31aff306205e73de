#include <cmath>
#include <complex>

#include "doctest.h"
#include "kpde/errors.hpp"
#include "kpde/stability.hpp"

using namespace kpde;

TEST_CASE("largest stable diffusion budgets") {
  CHECK(beta_max_semi(1) == doctest::Approx(8.0).epsilon(1e-6));
  CHECK(beta_max_semi(2) == doctest::Approx(3.2274495908281465).epsilon(1e-8));
  CHECK(beta_max_semi(3) == doctest::Approx(1.9799945320940704).epsilon(1e-8));
}

TEST_CASE("semi-discrete amplification stays inside the unit band at the budget") {
  for (int k : {1, 2, 3}) {
    const double bmax = beta_max_semi(k);
    double qmin = 1e300;
    for (int i = 0; i <= 4000; ++i) {
      const double z = 100.0 * i / 4000.0;
      const double q = amplification_semi_1d(k, bmax, z);
      CHECK(q <= 1.0 + 1e-12);
      qmin = std::min(qmin, q);
    }
    CHECK(qmin >= -1.0 - 1e-12);
    // pushing 1% past the budget must break the band somewhere
    double worst = 0.0;
    for (int i = 0; i <= 4000; ++i) {
      const double z = 100.0 * i / 4000.0;
      worst = std::min(worst, amplification_semi_1d(k, 1.01 * bmax, z));
    }
    CHECK(worst < -1.0);
  }
}

TEST_CASE("two-dimensional amplification respects the halved and quartered budgets") {
  for (int k : {1, 2, 3}) {
    const double bmax = beta_max_semi(k);
    for (double cross : {0.0, 2.0}) {
      const double beta = (cross != 0.0 ? 0.25 : 0.5) * bmax;
      double lo = 1e300, hi = -1e300;
      for (int i = 0; i <= 120; ++i) {
        for (int j = 0; j <= 120; ++j) {
          const double z1 = -6.0 + 12.0 * i / 120.0;
          const double z2 = -6.0 + 12.0 * j / 120.0;
          const double q = amplification_semi_2d(k, beta, z1, z2, cross);
          lo = std::min(lo, q);
          hi = std::max(hi, q);
        }
      }
      INFO("k = " << k << " cross = " << cross);
      CHECK(lo >= -1.0 - 1e-12);
      CHECK(hi <= 1.0 + 1e-12);
      // and 5% beyond breaks it
      double worst = 0.0;
      for (int i = 0; i <= 120; ++i) {
        for (int j = 0; j <= 120; ++j) {
          const double z1 = -6.0 + 12.0 * i / 120.0;
          const double z2 = -6.0 + 12.0 * j / 120.0;
          worst = std::min(worst, amplification_semi_2d(k, 1.05 * beta, z1, z2, cross));
        }
      }
      CHECK(worst < -1.0);
    }
  }
}

TEST_CASE("cross ratios beyond parabolicity are rejected") {
  CHECK_THROWS_AS(amplification_semi_2d(2, 1.0, 0.5, 0.5, 2.5), param_error);
  CHECK_THROWS_AS(amplification_semi_2d(2, 1.0, 0.5, 0.5, -2.5), param_error);
}

TEST_CASE("fully discrete amplification fixes the constant mode") {
  for (int k : {1, 2, 3}) {
    const std::complex<double> lam = amplification_full_1d(k, beta_max_semi(k), 0.0, 1.0);
    CHECK(std::abs(lam - 1.0) <= 1e-12);
  }
}

TEST_CASE("fully discrete and semi-discrete amplification agree in the matched regime") {
  // k = 1, beta = 4, dt/dx^2 = 1: lambda = 1 + rho*H and 1 - beta*S agree when the
  // ring operator symbol is resolved well (moderate mode on the standard ring)
  const int k = 1;
  const double beta = 4.0;
  const double rho = 1.0;
  const int m = 4;
  const double kappa_dx = 2.0 * 3.14159265358979323846 * m / stability_ring_n;
  const std::complex<double> lam = amplification_full_1d(k, beta, kappa_dx, rho);
  const double alpha = std::sqrt(beta / rho);
  const double z = (kappa_dx / 1.0) / alpha;  // eta/alpha with dx = 1
  const double semi = 1.0 - beta * s_k(z, k);
  CHECK(std::abs(lam - semi) <= 1e-8 * std::abs(semi));
}
