#include "kpde/legacy.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "kpde/solver.hpp"

namespace kpde {

void diffusion_old(const LineKernel& K, const double* u, const double* a, int k, double* out,
                   LineWork& wk) {
  diffusion_apply(K, u, a, k, Variant::Hold, out, wk);
}

std::vector<ProbePoint> monotonicity_probe(Variant var, int k, TestFunction f,
                                           const std::vector<double>& alphas) {
  const int n = 2048;
  const double two_pi = 6.283185307179586476925286766559;
  const double dx = two_pi / n;
  const int m = (f == TestFunction::sin_x) ? 1 : 2;
  std::vector<double> u(n), a(n, 1.0), exact(n), out(n);
  for (int i = 0; i < n; ++i) {
    const double x = i * dx;
    u[i] = std::sin(m * x);
    exact[i] = -(double)m * m * std::sin(m * x);
  }
  LineWork wk;
  std::vector<ProbePoint> res;
  res.reserve(alphas.size());
  for (double alpha : alphas) {
    const LineKernel K = make_line_kernel(n, alpha, dx);
    diffusion_apply(K, u.data(), a.data(), k, var, out.data(), wk);
    double e = 0.0;
    for (int i = 0; i < n; ++i) e = std::max(e, std::abs(out[i] - exact[i]));
    res.push_back({alpha, e});
  }
  return res;
}

ComparisonRecord efficiency_point(Variant var, int k, double target_linf, int reps) {
  ProblemSpec p = preset("heat1d");
  RunConfig cfg;
  cfg.k = k;
  cfg.cfl = 1.0;
  cfg.t_end = 1.0;
  cfg.variant = var;
  cfg.threads = 1;
  cfg.beta2 = (var == Variant::Hold) ? beta_old_table(k) : beta2_max_table(k);
  ComparisonRecord rec{var, k, 0, 0.0, 0.0};
  for (int n = 20; n <= 40960; n *= 2) {
    cfg.n = n;
    const RunResult r = integrate(p, cfg);
    rec.n = n;
    rec.linf = r.errors[0].linf;
    if (rec.linf <= target_linf) break;
  }
  std::vector<double> times;
  times.reserve(reps);
  cfg.n = rec.n;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    integrate(p, cfg);
    const auto t1 = std::chrono::steady_clock::now();
    times.push_back(std::chrono::duration<double>(t1 - t0).count());
  }
  std::sort(times.begin(), times.end());
  rec.cpu_seconds = times[times.size() / 2];
  return rec;
}

}  // namespace kpde
