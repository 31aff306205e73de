#pragma once
#include <vector>

#include "kpde/operators.hpp"

namespace kpde {

// prior-work diffusion operator, one pass: -alpha^2 sum_{p=1..k} D_0^p (a u)
void diffusion_old(const LineKernel& K, const double* u, const double* a, int k, double* out,
                   LineWork& wk);

enum class TestFunction { sin_x, sin_2x };

struct ProbePoint {
  double alpha;
  double linf;
};

// max-norm error of a diffusion variant against the analytic second derivative on a
// 2048-node line over [0, 2pi), one point per alpha.  used to show the H3 error is
// monotone in alpha while the one-sided variants are not
std::vector<ProbePoint> monotonicity_probe(Variant var, int k, TestFunction f,
                                           const std::vector<double>& alphas);

struct ComparisonRecord {
  Variant var;
  int k;
  int n;
  double cpu_seconds;
  double linf;
};

// heat-benchmark cost at matched accuracy: coarsest doubling grid whose final error
// meets target_linf, timed single-threaded as the median of reps runs
ComparisonRecord efficiency_point(Variant var, int k, double target_linf, int reps = 5);

}  // namespace kpde
