#include "kpde/operators.hpp"

#include <algorithm>

namespace kpde {

Variant variant_from_string(const std::string& s) {
  if (s == "H1") return Variant::H1;
  if (s == "H2") return Variant::H2;
  if (s == "H3") return Variant::H3;
  if (s == "Hold") return Variant::Hold;
  throw config_error("unknown variant '" + s + "' (expected H1, H2, H3, or Hold)");
}

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::H1: return "H1";
    case Variant::H2: return "H2";
    case Variant::H3: return "H3";
    default: return "Hold";
  }
}

// out = sum_{p=1..terms} D_kk^p v, ping-ponging wk.b[0]/wk.b[1]
static void chain_sum(const LineKernel& K, const double* v, int terms, Kern kk, double* out,
                      LineWork& wk) {
  const int n = K.n;
  double* cur = wk.b[0].data();
  double* nxt = wk.b[1].data();
  apply_D(K, v, kk, cur, wk);
  for (int i = 0; i < n; ++i) out[i] = cur[i];
  for (int p = 2; p <= terms; ++p) {
    apply_D(K, cur, kk, nxt, wk);
    std::swap(cur, nxt);
    for (int i = 0; i < n; ++i) out[i] += cur[i];
  }
}

void ux_biased(const LineKernel& K, const double* v, int k, Bias side, double* out,
               LineWork& wk) {
  if (k < 1) throw param_error("ux_biased: need k >= 1");
  const int n = K.n;
  wk.resize(n);
  const Kern kk = (side == Bias::minus) ? Kern::L : Kern::R;
  chain_sum(K, v, k, kk, out, wk);
  const double s = (side == Bias::minus) ? K.alpha : -K.alpha;
  for (int i = 0; i < n; ++i) out[i] *= s;
}

void ux_biased_mod3(const LineKernel& K, const double* v, Bias side, double* out,
                    LineWork& wk) {
  const int n = K.n;
  wk.resize(n);
  double* d1 = wk.b[0].data();
  double* d2 = wk.b[1].data();
  double* d3 = wk.b[2].data();
  double* dc = wk.b[3].data();
  const Kern own = (side == Bias::minus) ? Kern::L : Kern::R;
  const Kern opp = (side == Bias::minus) ? Kern::R : Kern::L;
  apply_D(K, v, own, d1, wk);
  apply_D(K, d1, own, d2, wk);
  apply_D(K, d2, own, d3, wk);  // also the own-side half of the smoothed top term
  apply_D(K, d2, opp, dc, wk);
  const double s = (side == Bias::minus) ? K.alpha : -K.alpha;
  for (int i = 0; i < n; ++i) out[i] = s * (d1[i] + d2[i] + 0.5 * d3[i] - 0.5 * dc[i]);
}

void transport_term(const LineKernel& K, const double* u, const double* b, double r, int k,
                    double* out, LineWork& wk) {
  if (r < 0.0) throw param_error("transport_term: r must be nonnegative");
  const int n = K.n;
  if (r == 0.0) {
    for (int i = 0; i < n; ++i) out[i] = 0.0;
    return;
  }
  wk.resize(n);
  double* um = wk.b[4].data();
  double* up = wk.b[5].data();
  if (k >= 3) {
    ux_biased_mod3(K, u, Bias::minus, um, wk);
    ux_biased_mod3(K, u, Bias::plus, up, wk);
  } else {
    ux_biased(K, u, k, Bias::minus, um, wk);
    ux_biased(K, u, k, Bias::plus, up, wk);
  }
  for (int i = 0; i < n; ++i)
    out[i] = 0.5 * b[i] * (um[i] + up[i]) + 0.5 * r * (up[i] - um[i]);
}

void deriv_new(const LineKernel& K, const double* v, int k, double* out, LineWork& wk) {
  if (k < 1) throw param_error("deriv_new: need k >= 1");
  const int n = K.n;
  wk.resize(n);
  double* cur = wk.b[0].data();
  double* nxt = wk.b[1].data();
  // start from (D_L - D_R) v, then climb with D_0 powers
  apply_D(K, v, Kern::L, cur, wk);
  apply_D(K, v, Kern::R, nxt, wk);
  for (int i = 0; i < n; ++i) cur[i] -= nxt[i];
  for (int i = 0; i < n; ++i) out[i] = cur[i];
  for (int p = 2; p <= k; ++p) {
    apply_D(K, cur, Kern::Zero, nxt, wk);
    std::swap(cur, nxt);
    for (int i = 0; i < n; ++i) out[i] += cur[i];
  }
  const double h = 0.5 * K.alpha;
  for (int i = 0; i < n; ++i) out[i] *= h;
}

void diffusion_apply(const LineKernel& K, const double* u, const double* a, int k, Variant var,
                     double* out, LineWork& wk) {
  if (k < 1) throw param_error("diffusion_apply: need k >= 1");
  const int n = K.n;
  wk.resize(n);
  switch (var) {
    case Variant::H3: {
      double* w = wk.b[2].data();
      double* aw = wk.b[3].data();
      deriv_new(K, u, k, w, wk);
      for (int i = 0; i < n; ++i) aw[i] = a[i] * w[i];
      deriv_new(K, aw, k, out, wk);
      break;
    }
    case Variant::H1: {
      double* acc = wk.b[2].data();
      double* aw = wk.b[3].data();
      chain_sum(K, u, 2 * k, Kern::R, acc, wk);
      for (int i = 0; i < n; ++i) aw[i] = -K.alpha * a[i] * acc[i];
      chain_sum(K, aw, 2 * k, Kern::L, out, wk);
      for (int i = 0; i < n; ++i) out[i] *= K.alpha;
      break;
    }
    case Variant::H2: {
      double* accl = wk.b[2].data();
      double* accr = wk.b[3].data();
      double* w = wk.b[4].data();
      double* aw = wk.b[5].data();
      const double h = 0.5 * K.alpha;
      chain_sum(K, u, 2 * k, Kern::L, accl, wk);
      chain_sum(K, u, 2 * k, Kern::R, accr, wk);
      for (int i = 0; i < n; ++i) w[i] = h * (accl[i] - accr[i]);
      for (int i = 0; i < n; ++i) aw[i] = a[i] * w[i];
      chain_sum(K, aw, 2 * k, Kern::L, accl, wk);
      chain_sum(K, aw, 2 * k, Kern::R, accr, wk);
      for (int i = 0; i < n; ++i) out[i] = h * (accl[i] - accr[i]);
      break;
    }
    default: {  // Hold
      double* au = wk.b[2].data();
      for (int i = 0; i < n; ++i) au[i] = a[i] * u[i];
      chain_sum(K, au, k, Kern::Zero, out, wk);
      const double s = -K.alpha * K.alpha;
      for (int i = 0; i < n; ++i) out[i] *= s;
      break;
    }
  }
}

}  // namespace kpde
