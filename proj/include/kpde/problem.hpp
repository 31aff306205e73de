#pragma once
#include <functional>
#include <string>
#include <vector>

#include "kpde/operators.hpp"

namespace kpde {

// pointwise coefficient evaluators; y is ignored in 1D
using CoefFn = std::function<double(double u, double x, double y, double t)>;
using ExactFn = std::function<double(double x, double y, double t)>;
using InitFn = std::function<double(double x, double y)>;
// systems: coupled pointwise reaction, u = all component values at one node
using ReactFn = std::function<void(const double* u, double x, double y, double t, double* out)>;

// problem description: u_t = div(A grad u) + B . grad u + C.
// scalar problems use the coefficient evaluators; reaction-diffusion systems use
// per-component constant diagonal diffusion plus a coupled reaction instead.
struct ProblemSpec {
  std::string name;
  int dims = 1;
  int ncomp = 1;
  double ax = 0, bx = 1, ay = 0, by = 1;
  CoefFn a11, a22, a12, a21, b1, b2, src;
  bool has_cross = false, has_transport = false;
  bool is_system = false;
  std::vector<double> diff_const;  // systems only
  ReactFn reaction;                // systems only
  std::vector<InitFn> init;        // one per component
  std::vector<ExactFn> exact;      // empty when no closed-form solution
  std::vector<std::string> comp_names;
  double default_t_end = 1.0;
};

// built-in problems: heat1d, ex2_nonlinear, ex4_2d_nonlinear, ex6_cross, schnakenberg
ProblemSpec preset(const std::string& name);

// calibrated (beta2, beta1) pair for a preset at order k; falls back to the
// single/mixed-term defaults when no calibration exists
void preset_betas(const ProblemSpec& p, int k, double* beta2, double* beta1);

struct RunConfig {
  int n = 80, ny = 0;  // ny = 0 means square in 2D
  int k = 3;
  double cfl = 1.0;  // dt = cfl * dx (2D: cfl * min(dx, dy))
  double t_end = 1.0;
  Variant variant = Variant::H3;
  double beta2 = -1, beta1 = -1;  // negative: preset/theorem defaults
  std::vector<double> snapshots;
  int threads = 1;
};

}  // namespace kpde
