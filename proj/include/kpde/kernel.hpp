#pragma once
#include <vector>

#include "kpde/errors.hpp"
#include "kpde/quadrature.hpp"

namespace kpde {

// periodic line resolvent data for one rate alpha: quadrature weights, the
// periodicity factor mu = e^{-alpha(b-a)}, and the decay table dec[m] = e^{-nu m}
struct LineKernel {
  int n = 0;
  double alpha = 0.0, dx = 0.0, nu = 0.0;
  double mu = 0.0, inv1mu = 1.0;  // 1/(1-mu)
  WeightSet w;
  std::vector<double> dec;  // m = 0..n
};

LineKernel make_line_kernel(int n, double alpha, double dx);

// which resolvent: L = (I + dx/alpha)^-1 shape (left-decaying), R mirrored,
// Zero = symmetric half sum of both
enum class Kern { L, R, Zero };

// scratch shared by the line operators; slots are assigned, never aliased:
//   b[0..5] operator-level lines, jbuf/ibuf kernel internals, ext padded stencil line
struct LineWork {
  std::vector<double> b[6];
  std::vector<double> jbuf[2];
  std::vector<double> ibuf[2];  // length n+1
  std::vector<double> ext;      // length n+6
  int n = 0;
  void resize(int n_);
};

// out = L_which^{-1} v with the periodic closure; out must not alias v
void apply_Linv(const LineKernel& K, const double* v, Kern which, double* out, LineWork& wk);

// out = (I - L_which^{-1}) v; out must not alias v
void apply_D(const LineKernel& K, const double* v, Kern which, double* out, LineWork& wk);

}  // namespace kpde
