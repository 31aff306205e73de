#include "kpde/kernel.hpp"

#include <cmath>

namespace kpde {

LineKernel make_line_kernel(int n, double alpha, double dx) {
  if (n < 6) throw param_error("make_line_kernel: need n >= 6");
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw param_error("make_line_kernel: need alpha > 0");
  if (!(dx > 0.0)) throw param_error("make_line_kernel: need dx > 0");
  LineKernel K;
  K.n = n;
  K.alpha = alpha;
  K.dx = dx;
  K.nu = alpha * dx;
  K.w = compute_weights(K.nu);
  K.dec.resize((std::size_t)n + 1);
  for (int m = 0; m <= n; ++m) K.dec[m] = std::exp(-K.nu * m);
  K.mu = K.dec[n];
  if (!(K.mu < 1.0)) throw param_error("make_line_kernel: degenerate interval, mu >= 1");
  K.inv1mu = 1.0 / (1.0 - K.mu);
  return K;
}

void LineWork::resize(int n_) {
  if (n == n_) return;
  n = n_;
  for (auto& x : b) x.assign((std::size_t)n + 1, 0.0);
  for (auto& x : jbuf) x.assign((std::size_t)n, 0.0);
  for (auto& x : ibuf) x.assign((std::size_t)n + 1, 0.0);
  ext.assign((std::size_t)n + 6, 0.0);
}

static void build_ext(const double* v, int n, double* ext) {
  ext[0] = v[n - 3];
  ext[1] = v[n - 2];
  ext[2] = v[n - 1];
  for (int i = 0; i < n; ++i) ext[3 + i] = v[i];
  ext[n + 3] = v[0];
  ext[n + 4] = v[1];
  ext[n + 5] = v[2];
}

void apply_Linv(const LineKernel& K, const double* v, Kern which, double* out, LineWork& wk) {
  const int n = K.n;
  wk.resize(n);
  build_ext(v, n, wk.ext.data());
  const double* dec = K.dec.data();
  if (which == Kern::L) {
    local_integrals_ext(wk.ext.data(), n, K.w, Side::L, wk.jbuf[0].data());
    sweep(wk.jbuf[0].data(), n, K.w.expnu, Side::L, wk.ibuf[0].data());
    const double* il = wk.ibuf[0].data();
    const double al = il[n] * K.inv1mu;  // periodic closure from the value at b
    for (int i = 0; i < n; ++i) out[i] = il[i] + al * dec[i];
  } else if (which == Kern::R) {
    local_integrals_ext(wk.ext.data(), n, K.w, Side::R, wk.jbuf[1].data());
    sweep(wk.jbuf[1].data(), n, K.w.expnu, Side::R, wk.ibuf[1].data());
    const double* ir = wk.ibuf[1].data();
    const double br = ir[0] * K.inv1mu;
    for (int i = 0; i < n; ++i) out[i] = ir[i] + br * dec[n - i];
  } else {
    local_integrals_ext(wk.ext.data(), n, K.w, Side::L, wk.jbuf[0].data());
    sweep(wk.jbuf[0].data(), n, K.w.expnu, Side::L, wk.ibuf[0].data());
    local_integrals_ext(wk.ext.data(), n, K.w, Side::R, wk.jbuf[1].data());
    sweep(wk.jbuf[1].data(), n, K.w.expnu, Side::R, wk.ibuf[1].data());
    const double* il = wk.ibuf[0].data();
    const double* ir = wk.ibuf[1].data();
    const double a0 = 0.5 * il[n] * K.inv1mu;
    const double b0 = 0.5 * ir[0] * K.inv1mu;
    for (int i = 0; i < n; ++i)
      out[i] = 0.5 * (il[i] + ir[i]) + a0 * dec[i] + b0 * dec[n - i];
  }
}

void apply_D(const LineKernel& K, const double* v, Kern which, double* out, LineWork& wk) {
  apply_Linv(K, v, which, out, wk);
  for (int i = 0; i < K.n; ++i) out[i] = v[i] - out[i];
}

}  // namespace kpde
