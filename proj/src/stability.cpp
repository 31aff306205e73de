#include "kpde/stability.hpp"

#include <cmath>
#include <vector>

#include "kpde/errors.hpp"
#include "kpde/operators.hpp"

namespace kpde {

double s_k(double z, int k) {
  if (k < 1) throw param_error("s_k: need k >= 1");
  const double z2 = z * z;
  const double w = z2 / (1.0 + z2);
  double wk = 1.0;
  for (int p = 0; p < k; ++p) wk *= w;
  const double f = 1.0 - wk;
  return z2 * f * f;
}

double beta_max_semi(int k) {
  const int N = 2000;
  const double lo_exp = -3.0, hi_exp = 3.0;
  int best = 0;
  double bestv = -1.0;
  for (int i = 0; i < N; ++i) {
    const double z = std::pow(10.0, lo_exp + (hi_exp - lo_exp) * i / (N - 1));
    const double v = s_k(z, k);
    if (v > bestv) {
      bestv = v;
      best = i;
    }
  }
  const double step = (hi_exp - lo_exp) / (N - 1);
  double a = std::pow(10.0, lo_exp + step * (best > 0 ? best - 1 : 0));
  double b = std::pow(10.0, lo_exp + step * (best < N - 1 ? best + 1 : N - 1));
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - gr * (b - a), d = a + gr * (b - a);
  double fc = s_k(c, k), fd = s_k(d, k);
  while (b - a > 1e-8 * a) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = s_k(c, k);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = s_k(d, k);
    }
  }
  return 2.0 / s_k(0.5 * (a + b), k);
}

double amplification_semi_1d(int k, double beta, double z) {
  return 1.0 - beta * s_k(z, k);
}

// R(z) = sum_{p=1..k} z^{2p-1}/(1+z^2)^p, so R^2 = S_k
static double ratio_r(double z, int k) {
  if (z == 0.0) return 0.0;
  const double z2 = z * z;
  const double w = z2 / (1.0 + z2);
  double sum = 0.0, pw = 1.0;
  for (int p = 1; p <= k; ++p) {
    pw *= w;
    sum += pw;
  }
  return sum / z;
}

double amplification_semi_2d(int k, double beta, double z1, double z2, double cross_ratio) {
  if (std::abs(cross_ratio) > 2.0 + 1e-12)
    throw param_error("amplification_semi_2d: |cross_ratio| > 2 is not parabolic");
  const double rx = ratio_r(z1, k);
  const double ry = ratio_r(z2, k);
  return 1.0 - beta * (rx * rx + ry * ry + cross_ratio * rx * ry);
}

std::complex<double> amplification_full_1d(int k, double beta, double kappa_dx,
                                           double dt_over_dx2) {
  if (!(beta > 0.0)) throw param_error("amplification_full_1d: need beta > 0");
  if (!(dt_over_dx2 > 0.0)) throw param_error("amplification_full_1d: need dt/dx^2 > 0");
  const int n = stability_ring_n;
  const double dt = dt_over_dx2;  // analysis ring has dx = 1, c = 1
  const double alpha = std::sqrt(beta / dt);
  const LineKernel K = make_line_kernel(n, alpha, 1.0);
  LineWork wk;
  std::vector<double> uc(n), us(n), a(n, 1.0), hc(n), hs(n);
  for (int i = 0; i < n; ++i) {
    uc[i] = std::cos(kappa_dx * i);
    us[i] = std::sin(kappa_dx * i);
  }
  diffusion_apply(K, uc.data(), a.data(), k, Variant::H3, hc.data(), wk);
  diffusion_apply(K, us.data(), a.data(), k, Variant::H3, hs.data(), wk);
  // shift equivariance makes the sampled mode an eigenvector; read the node-0 response
  const std::complex<double> y = dt * std::complex<double>(hc[0], hs[0]);
  std::complex<double> lam = 1.0 + y;
  if (k >= 2) lam += 0.5 * y * y;
  if (k >= 3) lam += y * y * y / 6.0;
  return lam;
}

}  // namespace kpde
