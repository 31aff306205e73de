#pragma once

namespace kpde {

// six-node quadrature weights for the one-cell convolution increments
//   J^L_i ~ alpha * int_{x_{i-1}}^{x_i} v(y) e^{-alpha(x_i - y)} dy
// reconstructed from the quintic interpolant through v_{i-3}..v_{i+2}.
// c[0..5] multiply v_{i-3}..v_{i+2} for the L side and mirror for R; nu = alpha dx.
struct WeightSet {
  double nu = 0.0;
  double c[6] = {0, 0, 0, 0, 0, 0};
  double expnu = 1.0;  // e^{-nu}
};

// below this the closed forms cancel ~nu^5 and lose digits; a 20-term series takes over
inline constexpr double nu_series_switch = 1.0;

WeightSet compute_weights(double nu);

enum class Side { L, R };

// J^L_i = sum_j c[j] v_{i-3+j},  J^R_i = sum_j c[j] v_{i+3-j}; periodic wrap, jout[0..n-1]
void local_integrals(const double* v, int n, const WeightSet& w, Side side, double* jout);

// same on a padded line ext[0..n+5] = {v_{n-3},v_{n-2},v_{n-1}, v_0..v_{n-1}, v_0,v_1,v_2}
void local_integrals_ext(const double* ext, int n, const WeightSet& w, Side side, double* jout);

// decaying prefix recursion; fills iout[0..n] including the closure node:
//   L: I_0 = 0, I_i = e^{-nu} I_{i-1} + J_{i mod n}   (i = 1..n; I_n sits at x = b)
//   R: I_n = 0, I_i = e^{-nu} I_{i+1} + J_i           (i = n-1..0)
void sweep(const double* j, int n, double expnu, Side side, double* iout);

// O(n) passes done by this thread; sweep() bumps it once per call
extern thread_local long long sweep_count;

}  // namespace kpde
